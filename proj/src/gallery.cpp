#include "semitop/gallery.hpp"

#include <algorithm>
#include <random>
#include <string_view>

#include "semitop/error.hpp"

namespace semitop::gallery {

namespace {

using Params = std::vector<int>;

int param(const std::string& name, const Params& p, std::size_t count, std::size_t i, int lo, int hi) {
    if (p.size() != count) {
        throw Error(ErrorKind::BadParams, name + ": expected " + std::to_string(count) + " parameter(s), got " +
                                              std::to_string(p.size()));
    }
    if (p[i] < lo || p[i] > hi) {
        throw Error(ErrorKind::BadParams, name + ": parameter " + std::to_string(p[i]) + " outside [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return p[i];
}

void no_params(const std::string& name, const Params& p) {
    if (!p.empty()) throw Error(ErrorKind::BadParams, name + ": takes no parameters");
}

PinnedRow row(PointSet star, PointSet k, std::string_view flags, std::optional<bool> ht = std::nullopt) {
    PinnedRow r;
    r.intertwined = star;
    r.community = k;
    r.regular = flags.find('r') != std::string_view::npos;
    r.weakly_regular = flags.find('w') != std::string_view::npos;
    r.quasiregular = flags.find('q') != std::string_view::npos;
    r.unconflicted = flags.find('u') != std::string_view::npos;
    // Regular points are hypertransitive; quasiregular irregular ones are not.
    if (!ht) {
        if (r.regular) ht = true;
        else if (r.quasiregular) ht = false;
    }
    r.hypertransitive = ht;
    return r;
}

PinnedExpectation uniform(std::size_t n, PointSet star, PointSet k, std::string_view flags, TopenPartition partition) {
    PinnedExpectation e;
    e.rows.assign(n, row(star, k, flags));
    e.partition = std::move(partition);
    return e;
}

std::vector<std::string> labels_with_star(std::size_t n, std::size_t star_index) {
    std::vector<std::string> labels;
    for (std::size_t i = 0, next = 1; i < n; ++i) {
        if (i == star_index) labels.emplace_back("*");
        else labels.push_back(std::to_string(star_index == 0 ? next++ : i));
    }
    return labels;
}

SemiTopology discrete(std::size_t n) {
    std::vector<PointSet> basis;
    for (Point p = 0; p < n; ++p) basis.push_back(PointSet::singleton(p));
    return SemiTopology(n, std::move(basis));
}

void choose(std::size_t n, std::size_t r, std::size_t start, PointSet cur, std::vector<PointSet>& out) {
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    for (Point p = start; p < n; ++p) {
        PointSet next = cur;
        next.insert(p);
        choose(n, r, p + 1, next, out);
    }
}

SemiTopology by_cardinality(std::size_t n, std::size_t r) {
    std::vector<PointSet> basis;
    if (r <= n) choose(n, r, 0, {}, basis);
    return SemiTopology(n, std::move(basis));
}

std::vector<FixtureEntry> make_fixtures() {
    std::vector<FixtureEntry> f;
    const PointSet all3 = PointSet::full(3);

    f.push_back({"discrete", "every subset open", {3},
                 [](const Params& p) { return discrete(param("discrete", p, 1, 0, 1, 64)); },
                 PinnedExpectation{{row({0}, {0}, "rwqu"), row({1}, {1}, "rwqu"), row({2}, {2}, "rwqu")},
                                   {{{0}, {1}, {2}}, {}}}});

    f.push_back({"trivial", "only the empty set and the whole space", {3},
                 [](const Params& p) { return SemiTopology(param("trivial", p, 1, 0, 1, 64), {}); },
                 uniform(3, all3, all3, "rwqu", {{all3}, {}})});

    f.push_back({"supermajority", "opens are sets of at least two thirds of the points", {4},
                 [](const Params& p) {
                     auto n = static_cast<std::size_t>(param("supermajority", p, 1, 0, 1, 20));
                     return by_cardinality(n, (2 * n + 2) / 3);
                 },
                 uniform(4, PointSet::full(4), PointSet::full(4), "rwqu", {{PointSet::full(4)}, {}})});

    f.push_back({"all_but_one", "generated by the complements of singletons", {4},
                 [](const Params& p) {
                     auto n = static_cast<std::size_t>(param("all_but_one", p, 1, 0, 1, 64));
                     std::vector<PointSet> basis;
                     for (Point q = 0; q < n; ++q) basis.push_back(PointSet::full(n) - PointSet::singleton(q));
                     return SemiTopology(n, std::move(basis));
                 },
                 uniform(4, PointSet::full(4), PointSet::full(4), "rwqu", {{PointSet::full(4)}, {}})});

    f.push_back({"more_than_one", "opens are sets of at least two points", {4},
                 [](const Params& p) { return by_cardinality(param("more_than_one", p, 1, 0, 1, 64), 2); },
                 PinnedExpectation{{row({0}, {}, "u"), row({1}, {}, "u"), row({2}, {}, "u"), row({3}, {}, "u")},
                                   {{}, PointSet::full(4)}}});

    f.push_back({"grid_quorum", "k x k grid; quorums are a full row plus a full column", {3},
                 [](const Params& p) {
                     auto k = static_cast<std::size_t>(param("grid_quorum", p, 1, 0, 1, 8));
                     std::vector<std::string> labels;
                     for (std::size_t r = 0; r < k; ++r)
                         for (std::size_t c = 0; c < k; ++c) labels.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
                     std::vector<PointSet> basis;
                     for (std::size_t r = 0; r < k; ++r) {
                         for (std::size_t c = 0; c < k; ++c) {
                             PointSet q;
                             for (std::size_t i = 0; i < k; ++i) {
                                 q.insert(r * k + i);
                                 q.insert(i * k + c);
                             }
                             basis.push_back(q);
                         }
                     }
                     return SemiTopology(std::move(labels), std::move(basis));
                 },
                 uniform(9, PointSet::full(9), PointSet::full(9), "rwqu", {{PointSet::full(9)}, {}})});

    f.push_back({"two_min", "point 1 has two minimal open neighbourhoods", {},
                 [](const Params& p) {
                     no_params("two_min", p);
                     return SemiTopology(3, {{0, 1}, {1, 2}});
                 },
                 uniform(3, all3, all3, "rwqu", {{all3}, {}})});

    f.push_back({"fig2_top_left", "two topens {0} and {2} joined by a conflicted point 1", {},
                 [](const Params& p) {
                     no_params("fig2_top_left", p);
                     return SemiTopology(3, {{0}, {2}});
                 },
                 PinnedExpectation{{row({0, 1}, {0}, "rwqu"), row(all3, all3, "wq"), row({1, 2}, {2}, "rwqu")},
                                   {{{0}, {2}}, {1}}}});

    f.push_back({"fig2_top_right", "two topens {0} and {2}; point 1 has empty community", {},
                 [](const Params& p) {
                     no_params("fig2_top_right", p);
                     return SemiTopology(3, {{0}, {0, 1}, {2}, {1, 2}});
                 },
                 PinnedExpectation{{row({0}, {0}, "rwqu"), row({1}, {}, "u", true), row({2}, {2}, "rwqu")},
                                   {{{0}, {2}}, {1}}}});

    f.push_back({"fig2_lower_left", "two topens {0,1} and {3,4} with 2 between them", {},
                 [](const Params& p) {
                     no_params("fig2_lower_left", p);
                     return SemiTopology(5, {{0, 1}, {1}, {3}, {3, 4}});
                 },
                 PinnedExpectation{{row({0, 1, 2}, {0, 1}, "rwqu"), row({0, 1, 2}, {0, 1}, "rwqu"),
                                    row(PointSet::full(5), PointSet::full(5), "wq"), row({2, 3, 4}, {3, 4}, "rwqu"),
                                    row({2, 3, 4}, {3, 4}, "rwqu")},
                                   {{{0, 1}, {3, 4}}, {2}}}});

    // Points 0, 1, 2 and * (index 3).
    auto lower_right = [](const std::string& name) {
        return [name](const Params& p) {
            no_params(name, p);
            return SemiTopology(labels_with_star(4, 3), {{0}, {1}, {2}, {0, 1, 3}, {1, 2, 3}});
        };
    };
    const PinnedExpectation lower_right_expected{
        {row({0}, {0}, "rwqu"), row({1, 3}, {1}, "rwqu"), row({2}, {2}, "rwqu"), row({1, 3}, {1}, "qu")},
        {{{0}, {1}, {2}}, {3}}};
    f.push_back({"fig2_lower_right", "three singleton topens; * is quasiregular only", {}, lower_right("fig2_lower_right"),
                 lower_right_expected});

    f.push_back({"not_strong_topen", "a topen {0,1} that is not a strong topen", {},
                 [](const Params& p) {
                     no_params("not_strong_topen", p);
                     return SemiTopology(3, {{0, 2}, {1, 2}, {0, 1}});
                 },
                 uniform(3, all3, all3, "rwqu", {{all3}, {}})});

    f.push_back({"not_strongly_transitive", "a topology in which {0,2} is transitive but not strongly", {},
                 [](const Params& p) {
                     no_params("not_strongly_transitive", p);
                     return SemiTopology(3, {{1}, {0, 1}, {1, 2}});
                 },
                 uniform(3, all3, all3, "rwqu", {{all3}, {}})});

    f.push_back({"square", "A={3,0}, B={0,1}, C={1,2}, D={2,3}; no topens", {},
                 [](const Params& p) {
                     no_params("square", p);
                     return SemiTopology(4, {{3, 0}, {0, 1}, {1, 2}, {2, 3}});
                 },
                 PinnedExpectation{{row({0}, {}, "u"), row({1}, {}, "u"), row({2}, {}, "u"), row({3}, {}, "u")},
                                   {{}, PointSet::full(4)}}});

    f.push_back({"fig_irregular_left", "community {1,2} is topen but does not contain 0", {},
                 [](const Params& p) {
                     no_params("fig_irregular_left", p);
                     return SemiTopology(5, {{1, 2}, {0, 1, 3}, {0, 2, 4}, {3}, {4}});
                 },
                 PinnedExpectation{{row({0, 1, 2}, {1, 2}, "qu"), row({0, 1, 2}, {1, 2}, "rwqu"),
                                    row({0, 1, 2}, {1, 2}, "rwqu"), row({3}, {3}, "rwqu"), row({4}, {4}, "rwqu")},
                                   {{{3}, {4}, {1, 2}}, {0}}}});

    f.push_back({"fig_irregular_right", "community of 0 is the union of two topens {1} and {2}", {},
                 [](const Params& p) {
                     no_params("fig_irregular_right", p);
                     return SemiTopology(5, {{1}, {2}, {3}, {4}, {0, 1, 2, 3}, {0, 1, 2, 4}});
                 },
                 PinnedExpectation{{row({0, 1, 2}, {1, 2}, "q"), row({0, 1}, {1}, "rwqu"), row({0, 2}, {2}, "rwqu"),
                                    row({3}, {3}, "rwqu"), row({4}, {4}, "rwqu")},
                                   {{{1}, {2}, {3}, {4}}, {0}}}});

    f.push_back({"sierpinski", "points 0 and 1 with {1} open", {},
                 [](const Params& p) {
                     no_params("sierpinski", p);
                     return SemiTopology(2, {{1}});
                 },
                 uniform(2, PointSet::full(2), PointSet::full(2), "rwqu", {{PointSet::full(2)}, {}})});

    f.push_back({"two_triples_line", "points 0..2m, generated by {2i, 2i+1, 2i+2}", {3},
                 [](const Params& p) {
                     auto m = static_cast<std::size_t>(param("two_triples_line", p, 1, 0, 1, 31));
                     std::vector<PointSet> basis;
                     for (std::size_t i = 0; i < m; ++i) basis.push_back({2 * i, 2 * i + 1, 2 * i + 2});
                     return SemiTopology(2 * m + 1, std::move(basis));
                 },
                 PinnedExpectation{{row({0, 1, 2, 3}, {0, 1, 2}, "rwqu"), row({0, 1, 2, 3}, {0, 1, 2}, "rwqu"),
                                    row({0, 1, 2, 3}, {0, 1, 2}, "rwqu"),
                                    row(PointSet::full(7), PointSet::full(7), "wq"),
                                    row({3, 4, 5, 6}, {4, 5, 6}, "rwqu"), row({3, 4, 5, 6}, {4, 5, 6}, "rwqu"),
                                    row({3, 4, 5, 6}, {4, 5, 6}, "rwqu")},
                                   {{{0, 1, 2}, {4, 5, 6}}, {3}}}});

    f.push_back({"final_segment_block", "points 0..N-1, final segments plus the block {0..9}", {12},
                 [](const Params& p) {
                     auto n = static_cast<std::size_t>(param("final_segment_block", p, 1, 0, 12, 64));
                     std::vector<PointSet> basis;
                     for (std::size_t k = 0; k < n; ++k) basis.push_back(PointSet::full(n) - PointSet::full(k));
                     basis.push_back(PointSet::full(10));
                     return SemiTopology(n, std::move(basis));
                 },
                 [] {
                     PinnedExpectation e;
                     const PointSet block = PointSet::full(10);
                     const PointSet tail{10, 11};
                     e.rows.assign(10, row(block, block, "rwqu"));
                     e.rows.push_back(row(tail, tail, "rwqu"));
                     e.rows.push_back(row(tail, tail, "rwqu"));
                     e.partition = {{tail, block}, {}};
                     return e;
                 }()});

    f.push_back({"fig_boundaries_left", "* lies on the boundary of the intertwined set of 1", {},
                 lower_right("fig_boundaries_left"), lower_right_expected});

    f.push_back({"fig_boundaries_mid", "1 lies on the boundary of the intertwined set of 0", {},
                 [](const Params& p) {
                     no_params("fig_boundaries_mid", p);
                     return SemiTopology(3, {{0}, {2}});
                 },
                 PinnedExpectation{{row({0, 1}, {0}, "rwqu"), row(all3, all3, "wq"), row({1, 2}, {2}, "rwqu")},
                                   {{{0}, {2}}, {1}}}});

    f.push_back({"fig_boundaries_right", "2 is conflicted with empty community", {},
                 [](const Params& p) {
                     no_params("fig_boundaries_right", p);
                     return SemiTopology(5, {{0}, {4}, {0, 1}, {3, 4}, {1, 2, 4}, {0, 2, 3}});
                 },
                 PinnedExpectation{{row({0}, {0}, "rwqu"), row({1, 2}, {}, "u"), row({1, 2, 3}, {}, ""),
                                    row({2, 3}, {}, "u"), row({4}, {4}, "rwqu")},
                                   {{{0}, {4}}, {1, 2, 3}}}});

    // Points *, 1, 2 with * at index 0.
    f.push_back({"ast12", "regular space with a boundary point not intertwined with the interior", {},
                 [](const Params& p) {
                     no_params("ast12", p);
                     return SemiTopology(labels_with_star(3, 0), {{1}, {2}, {0, 2}});
                 },
                 PinnedExpectation{{row({0, 2}, {0, 2}, "rwqu"), row({1}, {1}, "rwqu"), row({0, 2}, {0, 2}, "rwqu")},
                                   {{{1}, {0, 2}}, {}}}});

    f.push_back({"ast12b", "regular space whose point * is a kissing point of two closed neighbourhoods", {},
                 [](const Params& p) {
                     no_params("ast12b", p);
                     return SemiTopology(labels_with_star(4, 0), {{1}, {2}, {3}, {0, 2}});
                 },
                 PinnedExpectation{{row({0, 2}, {0, 2}, "rwqu"), row({1}, {1}, "rwqu"), row({0, 2}, {0, 2}, "rwqu"),
                                    row({3}, {3}, "rwqu")},
                                   {{{1}, {3}, {0, 2}}, {}}}});

    f.push_back({"nbhd_triangle", "{0,1} and {0,2} are neighbourhoods of 0 but {0} is not open", {},
                 [](const Params& p) {
                     no_params("nbhd_triangle", p);
                     return SemiTopology(3, {{0, 1}, {0, 2}, {1, 2}});
                 },
                 uniform(3, all3, all3, "rwqu", {{all3}, {}})});

    return f;
}

}  // namespace

const std::vector<FixtureEntry>& fixtures() {
    static const std::vector<FixtureEntry> all = make_fixtures();
    return all;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& f : fixtures()) names.push_back(f.name);
    return names;
}

const FixtureEntry& fixture(const std::string& name) {
    for (const auto& f : fixtures()) {
        if (f.name == name) return f;
    }
    throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

SemiTopology build(const std::string& name, const std::vector<int>& params) {
    const auto& f = fixture(name);
    return f.builder(params.empty() ? f.default_params : params);
}

SemiTopology random_semitopology(int n, int k, std::uint64_t seed) {
    if (n < 1 || n > 16) throw Error(ErrorKind::BadParams, "random_semitopology: n must be in [1, 16]");
    if (k < 0) throw Error(ErrorKind::BadParams, "random_semitopology: k must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    std::vector<PointSet> basis;
    basis.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) basis.emplace_back(pick(rng));
    return SemiTopology(static_cast<std::size_t>(n), std::move(basis));
}

}  // namespace semitop::gallery
