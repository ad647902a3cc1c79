#include "semitop/theorems.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "semitop/classification.hpp"
#include "semitop/error.hpp"
#include "semitop/oracle.hpp"
#include "semitop/relations.hpp"
#include "semitop/values.hpp"

namespace semitop {

namespace {

class Suite {
  public:
    explicit Suite(const SemiTopology& space) : space_(space) {}

    // `body` returns an empty string on success, otherwise a counterexample.
    void law(const std::string& name, const std::function<std::string()>& body) {
        TheoremResult r{name, true, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FamilyTruncated) throw;
            r.skipped = true;
            r.detail = e.what();
        }
        results_.push_back(std::move(r));
    }

    std::string set(PointSet s) const { return format_set(space_, s); }
    std::string pt(Point p) const { return space_.label(p); }

    std::vector<TheoremResult> take() { return std::move(results_); }

  private:
    const SemiTopology& space_;
    std::vector<TheoremResult> results_;
};

std::vector<PointSet> sample_subsets(const SemiTopology& space, std::size_t limit, std::mt19937_64& rng) {
    const std::size_t n = space.size();
    std::vector<PointSet> out;
    if (n < 63 && (std::uint64_t{1} << n) <= limit) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
        return out;
    }
    out.push_back({});
    out.push_back(space.universe());
    for (Point p = 0; p < n; ++p) out.push_back(PointSet::singleton(p));
    while (out.size() < limit) out.emplace_back(rng() & space.universe().bits());
    return out;
}

}  // namespace

bool all_passed(const std::vector<TheoremResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.passed || r.skipped; });
}

std::vector<TheoremResult> check_theorems(const SemiTopology& space, const CheckOptions& options) {
    Suite suite(space);
    const std::size_t n = space.size();
    const PointSet all = space.universe();
    std::mt19937_64 rng(options.seed);

    const OpenFamily family = space.enumerate_opens(options.cap);
    auto exact = [&](const char* who) -> const OpenFamily& {
        family.require_exact(who);
        return family;
    };

    const auto subsets = sample_subsets(space, 1024, rng);
    // Pairwise laws run on a smaller sample.
    std::vector<PointSet> few(subsets.begin(), subsets.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(subsets.size(), 64)));

    const Classification cls = classify_all(space, ClassifyOptions{.hypertransitivity = true, .cap = options.cap});
    const auto& rows = cls.rows;
    PointSet regular_points;
    for (Point p = 0; p < n; ++p) {
        if (rows[p].regular) regular_points.insert(p);
    }

    suite.law("open_family_contains_empty_and_full_and_is_union_closed", [&]() -> std::string {
        const auto& fam = exact("open family").opens();
        if (!family.contains({}) || !family.contains(all)) return "missing ∅ or P";
        for (PointSet g : space.basis()) {
            if (!family.contains(g)) return "generator " + suite.set(g) + " missing";
        }
        for (PointSet a : fam) {
            for (PointSet b : fam) {
                if (!family.contains(a | b)) return "union " + suite.set(a | b) + " missing";
            }
        }
        for (PointSet s : subsets) {
            if (space.is_open(s) != family.contains(s)) return "is_open(" + suite.set(s) + ") disagrees with family";
            if (space.is_closed(s) != family.contains(space.complement(s)))
                return "is_closed(" + suite.set(s) + ") disagrees with family";
        }
        return {};
    });

    suite.law("interior_and_closure_are_monotone_increasing_idempotent", [&]() -> std::string {
        for (PointSet s : subsets) {
            PointSet i = space.interior(s), c = space.closure(s);
            if (!i.subset_of(s) || !s.subset_of(c)) return "not increasing at " + suite.set(s);
            if (space.interior(i) != i || space.closure(c) != c) return "not idempotent at " + suite.set(s);
            if (space.is_closed(s) != space.is_closed_via_complement(s)) return "closedness routes disagree at " + suite.set(s);
        }
        for (PointSet a : few) {
            for (PointSet b : few) {
                if (!a.subset_of(b)) continue;
                if (!space.interior(a).subset_of(space.interior(b)) || !space.closure(a).subset_of(space.closure(b)))
                    return "not monotone at " + suite.set(a) + " ⊆ " + suite.set(b);
            }
        }
        return {};
    });

    suite.law("interior_closure_complement_duality", [&]() -> std::string {
        for (PointSet s : subsets) {
            if (space.interior(space.complement(s)) != space.complement(space.closure(s)))
                return "interior(P∖S) ≠ P∖closure(S) at " + suite.set(s);
            if (space.closure(space.complement(s)) != space.complement(space.interior(s)))
                return "closure(P∖S) ≠ P∖interior(S) at " + suite.set(s);
        }
        return {};
    });

    suite.law("closure_meets_open_iff_set_meets_open", [&]() -> std::string {
        for (PointSet o : exact("closure/open meeting").opens()) {
            for (PointSet s : few) {
                if (space.closure(s).meets(o) != s.meets(o)) return "S=" + suite.set(s) + " O=" + suite.set(o);
            }
        }
        return {};
    });

    suite.law("closure_of_open_is_regular_closed", [&]() -> std::string {
        for (PointSet o : exact("regular closure").opens()) {
            PointSet c = space.closure(o);
            if (space.closure(space.interior(c)) != c) return "O=" + suite.set(o);
        }
        return {};
    });

    suite.law("subspace_opens_are_restrictions", [&]() -> std::string {
        const auto& fam = exact("subspace").opens();
        for (PointSet t : few) {
            SemiTopology sub = space.subspace(t);
            OpenFamily subfam = sub.enumerate_opens(options.cap);
            subfam.require_exact("subspace family");
            std::vector<Point> keep = t.members();
            std::vector<PointSet> restricted;
            for (PointSet o : fam) {
                PointSet r;
                for (std::size_t i = 0; i < keep.size(); ++i) {
                    if (o.contains(keep[i])) r.insert(i);
                }
                restricted.push_back(r);
            }
            std::sort(restricted.begin(), restricted.end(), CanonicalLess{});
            restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
            if (restricted != subfam.opens()) return "T=" + suite.set(t);
        }
        return {};
    });

    suite.law("transitive_iff_pairwise_intertwined", [&]() -> std::string {
        for (PointSet t : subsets) {
            bool pairwise = true;
            for (Point p : t)
                for (Point q : t) pairwise = pairwise && intertwined(space, p, q);
            if (is_transitive(space, t) != pairwise) return "T=" + suite.set(t);
            bool open_intertwined = !t.empty() && space.is_open(t) && pairwise;
            if (is_topen(space, t) != open_intertwined) return "topen mismatch at T=" + suite.set(t);
        }
        return {};
    });

    suite.law("strong_transitivity_hierarchy", [&]() -> std::string {
        for (PointSet t : subsets) {
            bool st = is_strongly_transitive(space, t), tr = is_transitive(space, t);
            if (st && !tr) return "strongly transitive but not transitive: " + suite.set(t);
            if (tr && !is_hyperconnected(space, t)) return "transitive but not hyperconnected: " + suite.set(t);
            if (is_meet_irreducible_empty(space, t) != st) return "meet-irreducibility mismatch at " + suite.set(t);
            if (is_strong_topen(space, t) && !is_topen(space, t)) return "strong topen but not topen: " + suite.set(t);
        }
        return {};
    });

    suite.law("transitive_sets_closed_under_subsets_and_meeting_unions", [&]() -> std::string {
        for (PointSet a : few) {
            if (!is_transitive(space, a)) continue;
            for (PointSet b : few) {
                if (b.subset_of(a) && !is_transitive(space, b)) return "subset " + suite.set(b) + " of " + suite.set(a);
                if (is_transitive(space, b) && a.meets(b) && (space.is_open(a) || space.is_open(b)) &&
                    !is_transitive(space, a | b))
                    return "union of " + suite.set(a) + " and " + suite.set(b);
            }
        }
        // Chains: a growing union of transitive sets built from one topen.
        for (const auto& row : rows) {
            if (!row.regular) continue;
            PointSet acc;
            for (Point p : row.community) {
                acc.insert(p);
                if (!is_transitive(space, acc)) return "chain prefix " + suite.set(acc);
            }
        }
        return {};
    });

    suite.law("intertwined_space_equivalences", [&]() -> std::string {
        bool a = is_intertwined_space(space);
        bool b = is_transitive(space, all);
        bool c = true, d = true;
        for (PointSet o : exact("intertwined space").opens()) {
            if (o.empty()) continue;
            if (!is_topen(space, o)) d = false;
            for (PointSet o2 : family.opens()) {
                if (!o2.empty() && !o.meets(o2)) c = false;
            }
        }
        if (a == b && b == c && c == d) return {};
        return "conditions disagree";
    });

    suite.law("partition_into_maximal_topens", [&]() -> std::string {
        TopenPartition part = maximal_topen_partition(space);
        PointSet covered;
        for (PointSet t : part.topens) {
            if (!is_topen(space, t)) return suite.set(t) + " is not topen";
            if (covered.meets(t)) return suite.set(t) + " overlaps another topen";
            covered |= t;
            for (PointSet o : exact("partition maximality").opens()) {
                if (t.strict_subset_of(o) && is_topen(space, o)) return suite.set(t) + " is not maximal";
            }
            for (Point p : t) {
                if (maximal_topen_containing(space, PointSet::singleton(p) | t) != t) return "containing(" + suite.pt(p) + ")";
            }
        }
        if (covered != regular_points) return "topens cover " + suite.set(covered) + ", regular points are " + suite.set(regular_points);
        if ((covered | part.residue) != all || covered.meets(part.residue)) return "residue mismatch";
        for (PointSet a : part.topens)
            for (PointSet b : part.topens)
                if (a != b && a.meets(b)) return "intersecting distinct topens";
        return {};
    });

    suite.law("intersecting_topens_have_topen_union", [&]() -> std::string {
        std::vector<PointSet> topens;
        for (PointSet o : exact("topen union").opens()) {
            if (is_topen(space, o)) topens.push_back(o);
        }
        for (PointSet a : topens)
            for (PointSet b : topens)
                if (a.meets(b) && !is_topen(space, a | b)) return suite.set(a) + " ∪ " + suite.set(b);
        // A pairwise-intersecting clique of topens has topen union.
        for (PointSet a : topens) {
            PointSet acc = a;
            for (PointSet b : topens)
                if (acc.meets(b) && std::all_of(topens.begin(), topens.end(), [&](PointSet c) { return !c.subset_of(acc) || c.meets(b); }))
                    acc |= b;
            if (!is_topen(space, acc)) return "clique union " + suite.set(acc);
        }
        return {};
    });

    suite.law("regular_iff_weakly_regular_and_unconflicted", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            if (r.regular != (r.weakly_regular && r.unconflicted)) return "p=" + suite.pt(p);
            if (r.regular && !r.weakly_regular) return "regular not weakly regular at " + suite.pt(p);
            if (r.weakly_regular && !r.quasiregular) return "weakly regular not quasiregular at " + suite.pt(p);
            if (r.community != space.interior(r.intertwined)) return "community ≠ interior(∗p) at " + suite.pt(p);
        }
        return {};
    });

    suite.law("regular_iff_quasiregular_and_hypertransitive", [&]() -> std::string {
        if (cls.family_truncated) family.require_exact("hypertransitivity");
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            if (r.regular != (r.quasiregular && r.hypertransitive)) return "p=" + suite.pt(p);
            if (r.hypertransitive && !r.unconflicted) return "hypertransitive but conflicted at " + suite.pt(p);
        }
        return {};
    });

    suite.law("hypertransitivity_reduces_to_regular_opens", [&]() -> std::string {
        if (n > options.oracle_max_points) return {};
        auto slow = oracle::from_family(space, exact("hypertransitivity oracle"));
        for (Point p = 0; p < n; ++p) {
            if (rows[p].hypertransitive != oracle::is_hypertransitive(slow, p)) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("intertwined_is_intersection_of_closed_neighbourhoods", [&]() -> std::string {
        const auto& fam = exact("closed neighbourhoods");
        for (Point p = 0; p < n; ++p) {
            PointSet meet = all;
            for (PointSet c : closed_neighbourhoods_of(space, p, fam)) meet &= c;
            if (meet != rows[p].intertwined) return "p=" + suite.pt(p) + ": " + suite.set(meet);
            PointSet closures = all;
            for (PointSet o : fam.opens())
                if (o.contains(p)) closures &= space.closure(o);
            if (closures != rows[p].intertwined) return "closure form at p=" + suite.pt(p);
            if (!is_closed_neighbourhood(space, all, p)) return "P is not a closed neighbourhood of " + suite.pt(p);
        }
        return {};
    });

    suite.law("intertwined_set_is_closed", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            if (!space.is_closed(rows[p].intertwined) || !space.is_open(space.complement(rows[p].intertwined)))
                return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("weakly_regular_closure_of_community_is_intertwined", [&]() -> std::string {
        const auto& fam = exact("closed neighbourhoods");
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            auto cns = closed_neighbourhoods_of(space, p, fam);
            bool least = std::find(cns.begin(), cns.end(), r.intertwined) != cns.end() &&
                         std::all_of(cns.begin(), cns.end(), [&](PointSet c) { return r.intertwined.subset_of(c); });
            if (least != r.weakly_regular) return "least-closed-neighbourhood mismatch at " + suite.pt(p);
            if (r.weakly_regular && space.closure(r.community) != r.intertwined) return "closure(K) ≠ ∗p at " + suite.pt(p);
        }
        return {};
    });

    suite.law("regular_implies_minimal_closed_neighbourhood", [&]() -> std::string {
        auto mins = minimal_closed_neighbourhoods(space);
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            bool minimal = std::find(mins.begin(), mins.end(), r.intertwined) != mins.end();
            if (r.regular && !(r.weakly_regular && minimal)) return "p=" + suite.pt(p);
        }
        return {};
    });

    // The converse needs every community member to have a nonempty community inside *p.
    suite.law("minimal_closed_neighbourhood_with_nested_members_implies_regular", [&]() -> std::string {
        auto mins = minimal_closed_neighbourhoods(space);
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            if (!r.weakly_regular) continue;
            if (std::find(mins.begin(), mins.end(), r.intertwined) == mins.end()) continue;
            bool nested = true;
            for (Point q : r.community)
                nested = nested && !rows[q].community.empty() && rows[q].intertwined.subset_of(r.intertwined);
            if (nested && !r.regular) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("regular_iff_weakly_regular_with_constant_communities", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            bool constant = std::all_of(r.community.begin(), r.community.end(),
                                        [&](Point q) { return rows[q].community == r.community; });
            if (r.regular != (r.weakly_regular && constant)) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("regular_communities_meet_iff_equal", [&]() -> std::string {
        for (Point p : regular_points) {
            for (Point q : regular_points) {
                if (rows[p].community.meets(rows[q].community) != (rows[p].community == rows[q].community))
                    return "p=" + suite.pt(p) + " q=" + suite.pt(q);
            }
            for (PointSet o : exact("topens").opens()) {
                if (!is_topen(space, o)) continue;
                if (o.meets(rows[p].community) != o.subset_of(rows[p].community))
                    return "topen " + suite.set(o) + " vs K(" + suite.pt(p) + ")";
            }
        }
        return {};
    });

    suite.law("community_is_regular_open", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            if (!space.is_open(rows[p].community) || !is_regular_open(space, rows[p].community)) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("regular_open_regular_closed_bijection", [&]() -> std::string {
        const auto& fam = exact("regular sets");
        auto ro = regular_opens(space, fam);
        auto rc = regular_closeds(space, fam);
        if (ro.size() != rc.size()) return "sizes differ";
        for (PointSet o : ro) {
            if (!is_regular_open(space, o)) return suite.set(o) + " not regular open";
            PointSet c = space.closure(o);
            if (std::find(rc.begin(), rc.end(), c) == rc.end() || space.interior(c) != o) return "closure of " + suite.set(o);
        }
        for (PointSet c : rc) {
            if (!is_regular_closed(space, c)) return suite.set(c) + " not regular closed";
            PointSet o = space.interior(c);
            if (std::find(ro.begin(), ro.end(), o) == ro.end() || space.closure(o) != c) return "interior of " + suite.set(c);
        }
        for (PointSet a : ro)
            for (PointSet b : ro)
                if (a.subset_of(b) != space.closure(a).subset_of(space.closure(b))) return "order not preserved";
        return {};
    });

    suite.law("minimal_regular_closed_are_minimal_closed_neighbourhoods", [&]() -> std::string {
        const auto& fam = exact("regular closed sets");
        auto rc = regular_closeds(space, fam);
        std::vector<PointSet> minimal_rc;
        for (PointSet c : rc) {
            if (c.empty()) continue;
            bool minimal = std::none_of(rc.begin(), rc.end(), [&](PointSet d) { return !d.empty() && d.strict_subset_of(c); });
            if (minimal) minimal_rc.push_back(c);
        }
        auto mins = minimal_closed_neighbourhoods(space);
        if (minimal_rc != mins) return "regular-closed route and generator route disagree";
        std::vector<PointSet> all_cn = closed_neighbourhoods(space, fam);
        std::vector<PointSet> minimal_cn;
        for (PointSet c : all_cn) {
            if (std::none_of(all_cn.begin(), all_cn.end(), [&](PointSet d) { return d.strict_subset_of(c); }))
                minimal_cn.push_back(c);
        }
        if (minimal_cn != mins) return "enumerated closed neighbourhoods disagree with generator route";
        return {};
    });

    suite.law("maximal_topen_is_interior_of_minimal_closed_neighbourhood", [&]() -> std::string {
        auto mins = minimal_closed_neighbourhoods(space);
        for (PointSet t : maximal_topen_partition(space).topens) {
            bool found = std::any_of(mins.begin(), mins.end(), [&](PointSet c) { return space.interior(c) == t; });
            if (!found) return suite.set(t);
            if (!mins.empty() && std::find(mins.begin(), mins.end(), space.closure(t)) == mins.end())
                return "closure of " + suite.set(t) + " is not minimal";
        }
        return {};
    });

    suite.law("quasiregular_space_has_regular_point", [&]() -> std::string {
        bool quasiregular = std::all_of(rows.begin(), rows.end(), [](const ClassificationRow& r) { return r.quasiregular; });
        auto found = find_regular_point(space);
        if (found && !rows[*found].regular) return suite.pt(*found) + " returned but not regular";
        if (quasiregular && n > 0 && !found) return "no regular point found in a quasiregular space";
        if (found.has_value() != !regular_points.empty()) return "search disagrees with scan";
        return {};
    });

    suite.law("closure_of_point_within_intertwined", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            PointSet c = space.closure(PointSet::singleton(p));
            if (!c.subset_of(rows[p].intertwined)) return "p=" + suite.pt(p);
            if (!space.interior(c).empty() && c != rows[p].intertwined) return "equality fails at " + suite.pt(p);
        }
        return {};
    });

    suite.law("unconflicted_iff_intertwined_least_among_intertwined", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            bool least = true;
            for (Point q : rows[p].intertwined) least = least && rows[p].intertwined.subset_of(rows[q].intertwined);
            if (least != rows[p].unconflicted) return "p=" + suite.pt(p);
            if (rows[p].regular && !rows[p].unconflicted) return "regular but conflicted at " + suite.pt(p);
        }
        return {};
    });

    suite.law("community_members_are_intertwined_below", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            if (!intertwined_preorder_leq(space, p, p)) return "≤⋒ not reflexive at " + suite.pt(p);
            for (Point q : rows[p].community) {
                if (!rows[q].community.subset_of(rows[p].community) || !rows[q].intertwined.subset_of(rows[p].intertwined))
                    return "p=" + suite.pt(p) + " q=" + suite.pt(q);
                if (!intertwined_preorder_leq(space, q, p)) return "q ≤⋒ p fails for p=" + suite.pt(p) + " q=" + suite.pt(q);
            }
        }
        return {};
    });

    suite.law("boundary_points_of_intertwined_sets_are_not_regular", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            PointSet b = boundary(space, rows[p].intertwined);
            if (b != rows[p].intertwined - rows[p].community) return "boundary formula at " + suite.pt(p);
            for (Point q : b) {
                if (rows[q].regular) return "regular " + suite.pt(q) + " on boundary of ∗" + suite.pt(p);
            }
        }
        return {};
    });

    suite.law("conflicted_iff_kissing_witness", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            bool kissing = false, meeting = false;
            for (Point q = 0; q < n; ++q) {
                for (Point r = 0; r < n; ++r) {
                    if (intertwined(space, q, r)) continue;
                    if (kiss(space, rows[q].intertwined, rows[r].intertwined).contains(p)) kissing = true;
                    if ((rows[q].intertwined & rows[r].intertwined).contains(p)) meeting = true;
                }
            }
            bool conflicted = !rows[p].unconflicted;
            if (conflicted != kissing || conflicted != meeting) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("quasiregular_iff_in_closure_of_community", [&]() -> std::string {
        for (Point p = 0; p < n; ++p) {
            const auto& r = rows[p];
            bool in_closure = space.closure(r.community).contains(p);
            const auto& gens = space.generators_at(p);
            bool meets_nbhd = !r.community.empty() &&
                              std::all_of(gens.begin(), gens.end(), [&](PointSet g) { return g.meets(r.community); });
            if (r.quasiregular != in_closure || in_closure != meets_nbhd) return "p=" + suite.pt(p);
        }
        return {};
    });

    suite.law("no_finite_quasiregular_conflicted_space", [&]() -> std::string {
        bool quasiregular = std::all_of(rows.begin(), rows.end(), [](const ClassificationRow& r) { return r.quasiregular; });
        bool conflicted = std::none_of(rows.begin(), rows.end(), [](const ClassificationRow& r) { return r.unconflicted; });
        if (n > 0 && quasiregular && conflicted) return "every point quasiregular and conflicted";
        return {};
    });

    suite.law("quasiregular_hausdorff_is_discrete", [&]() -> std::string {
        bool quasiregular = std::all_of(rows.begin(), rows.end(), [](const ClassificationRow& r) { return r.quasiregular; });
        if (!is_hausdorff(space) || !quasiregular) return {};
        for (Point p = 0; p < n; ++p) {
            if (!space.is_open(PointSet::singleton(p))) return "{" + suite.pt(p) + "} is not open";
        }
        return {};
    });

    // Consensus layer.
    std::vector<ValueAssignment> assignments;
    for (int a = 0; a < options.assignments; ++a) {
        const std::size_t values = 2 + rng() % 2;
        std::vector<ValueId> raw(n);
        for (auto& v : raw) v = rng() % values;
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < values; ++v) labels.push_back(std::string(1, static_cast<char>('A' + v)));
        assignments.emplace_back(std::move(raw), std::move(labels));
    }

    suite.law("continuity_routes_agree", [&]() -> std::string {
        for (std::size_t a = 0; a < assignments.size(); ++a) {
            const auto& f = assignments[a];
            bool pointwise = is_continuous(space, f);
            if (pointwise != is_continuous_by_preimages(space, f) || pointwise != is_continuous_by_closed_preimages(space, f))
                return "assignment " + std::to_string(a);
        }
        return {};
    });

    suite.law("no_continuous_split_of_transitive_sets", [&]() -> std::string {
        for (PointSet t : few) {
            if (!is_transitive(space, t)) continue;
            for (const auto& f : assignments) {
                if (auto split = find_split(space, f, t)) return "T=" + suite.set(t) + " split at " + suite.pt(split->first);
            }
        }
        for (std::size_t a = 0; a < assignments.size(); ++a) {
            const auto& f = assignments[a];
            for (Point p = 0; p < n; ++p)
                for (Point q = 0; q < n; ++q)
                    if (intertwined(space, p, q) && continuous_at(space, f, p) && continuous_at(space, f, q) && f[p] != f[q])
                        return "intertwined " + suite.pt(p) + "," + suite.pt(q) + " disagree";
        }
        return {};
    });

    suite.law("splitting_assignment_exists_iff_not_transitive", [&]() -> std::string {
        for (PointSet t : subsets) {
            auto f = build_splitting_assignment(space, t);
            if (f.has_value() == is_transitive(space, t)) return "T=" + suite.set(t);
            if (f && !find_split(space, *f, t)) return "witness does not split " + suite.set(t);
        }
        return {};
    });

    suite.law("propagation_reaches_closure_in_one_round", [&]() -> std::string {
        for (PointSet o : exact("propagation").opens()) {
            if (o.empty()) continue;
            PropagationResult r = propagate(space, o, 0);
            if ((r.committed_grade1 | r.committed_grade2) != space.closure(o) || r.rounds != 1)
                return "seed " + suite.set(o);
            for (PointSet t : topen_reached_by(space, o)) {
                if (!t.subset_of(space.closure(o))) return "topen " + suite.set(t) + " outside closure of " + suite.set(o);
            }
        }
        return {};
    });

    suite.law("oracle_agreement", [&]() -> std::string {
        if (n > options.oracle_max_points) return {};
        for (const auto& r : oracle::diff(space, oracle::DiffOptions{.assignments = options.assignments,
                                                                       .seed = options.seed,
                                                                       .cap = options.cap})) {
            if (!r.agree) return r.fast + " vs oracle " + r.oracle;
        }
        return {};
    });

    return suite.take();
}

}  // namespace semitop
