#include "support.hpp"

#include <random>

#include "generators.hpp"
#include "reference.hpp"
#include "semitop/classification.hpp"
#include "semitop/relations.hpp"
#include "semitop/theorems.hpp"
#include "semitop/values.hpp"

using namespace semitop;

namespace {

void require_laws(const SemiTopology& s, std::uint64_t seed) {
    CheckOptions options;
    options.seed = seed;
    for (const auto& r : check_theorems(s, options)) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
        CHECK(!r.skipped);
    }
}

}  // namespace

TEST_CASE("every law holds on random small spaces") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) require_laws(gen::space(rng), static_cast<std::uint64_t>(i));
}

TEST_CASE("every law holds on random mid-sized spaces") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) require_laws(gen::space(rng, 12, 14), static_cast<std::uint64_t>(i));
}

TEST_CASE("every law holds on all three-point spaces") {
    for (const auto& s : gen::all_three_point_spaces()) require_laws(s, 0);
}

TEST_CASE("every law holds on every fixture") {
    for (const auto& name : gallery::fixture_names()) {
        CAPTURE(name);
        require_laws(gallery::build(name), 0);
    }
}

TEST_CASE("laws are reported as skipped, not failed, on truncated families") {
    SemiTopology wide(12, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}});
    CheckOptions options;
    options.cap = 64;
    auto results = check_theorems(wide, options);
    CHECK(all_passed(results));
    CHECK(std::any_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.skipped; }));
}

TEST_CASE("the open family is union-closed and contains every generator") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        auto s = gen::space(rng);
        auto fam = s.enumerate_opens();
        CHECK(fam.contains({}));
        CHECK(fam.contains(s.universe()));
        for (PointSet a : fam.opens())
            for (PointSet b : fam.opens()) CHECK(fam.contains(a | b));
        for (PointSet g : s.basis()) CHECK(fam.contains(g));
    }
}

TEST_CASE("interior and closure laws against the reference") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        for (int j = 0; j < 20; ++j) {
            PointSet a = gen::subset(rng, s), b = a & gen::subset(rng, s);
            CHECK(s.interior(b).subset_of(s.interior(a)));
            CHECK(s.closure(b).subset_of(s.closure(a)));
            CHECK(s.interior(a).subset_of(a));
            CHECK(a.subset_of(s.closure(a)));
            CHECK(s.closure(s.closure(a)) == s.closure(a));
            CHECK(s.complement(s.interior(s.complement(a))).bits() == r.closure(a.bits()));
        }
    }
}

TEST_CASE("flags are nested and communities are stable") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 300; ++i) {
        auto s = gen::space(rng);
        auto c = classify_all(s);
        for (Point p = 0; p < s.size(); ++p) {
            const auto& row = c.rows[p];
            if (row.regular) CHECK(row.weakly_regular);
            if (row.weakly_regular) CHECK(row.quasiregular);
            CHECK(row.community == s.interior(row.intertwined));
            CHECK(row.intertwined.contains(p));
            if (row.regular) CHECK(is_topen(s, row.community));
        }
    }
}

TEST_CASE("transitive sets are exactly the unsplittable ones") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 300; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        PointSet t = gen::subset(rng, s);
        auto f = build_splitting_assignment(s, t);
        CHECK(f.has_value() == !r.transitive(t.bits()));
        if (f) {
            auto split = find_split(s, *f, t);
            REQUIRE(split.has_value());
            CHECK((*f)[split->first] != (*f)[split->second]);
        }
        auto g = gen::assignment(rng, s.size());
        if (r.transitive(t.bits())) CHECK(!find_split(s, g, t).has_value());
    }
}

TEST_CASE("propagation stabilises at the closure") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 300; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        const auto s_opens = s.enumerate_opens();
        for (PointSet o : s_opens.opens()) {
            if (o.empty()) continue;
            auto p = propagate(s, o, 0);
            CHECK(p.committed_grade2 == o);
            CHECK((p.committed_grade1 | p.committed_grade2).bits() == r.closure(o.bits()));
            CHECK(p.rounds == 1);
            CHECK(p.trace.front() == o);
        }
    }
}
