#include "support.hpp"

#include <random>

#include "generators.hpp"
#include "reference.hpp"
#include "semitop/error.hpp"
#include "semitop/relations.hpp"
#include "semitop/values.hpp"

using namespace semitop;

namespace {

ValueAssignment line_assignment(ValueId middle) {
    return ValueAssignment({0, 0, 0, middle, 1, 1, 1}, {"A", "B"});
}

}  // namespace

TEST_CASE("value assignment validation") {
    CHECK_THROWS_AS(ValueAssignment({0}, {}), Error);
    CHECK_THROWS_AS(ValueAssignment({0, 2}, {"A", "B"}), Error);
    auto c = ValueAssignment::constant(3);
    CHECK(c.preimage(0) == PointSet{0, 1, 2});
}

TEST_CASE("continuous_at") {
    auto tl = fx("fig2_top_left");
    ValueAssignment f({0, 0, 1}, {"A", "B"});
    CHECK(continuous_at(tl, f, 0));
    CHECK(continuous_at(tl, f, 2));
    CHECK(!continuous_at(tl, f, 1));
    auto c = ValueAssignment::constant(3);
    for (Point p = 0; p < 3; ++p) CHECK(continuous_at(tl, c, p));

    auto line = fx("two_triples_line");
    for (ValueId mid : {0, 1}) {
        auto g = line_assignment(mid);
        CHECK(continuous_at(line, g, 0));
        CHECK(continuous_at(line, g, 6));
        CHECK(!continuous_at(line, g, 3));
    }
}

TEST_CASE("continuous_on and is_continuous") {
    CHECK(is_continuous(fx("square"), ValueAssignment::constant(4)));
    std::mt19937_64 rng(2);
    auto d = fx("discrete");
    for (int i = 0; i < 20; ++i) CHECK(is_continuous(d, gen::assignment(rng, 3)));
    auto t = fx("trivial");
    ValueAssignment f({0, 1, 0}, {"A", "B"});
    CHECK(!is_continuous(t, f));
    CHECK(!continuous_on(t, f, {0}));
    CHECK(continuous_on(t, f, {}));
}

TEST_CASE("find_split") {
    auto line = fx("two_triples_line");
    auto split = find_split(line, line_assignment(0), {0, 6});
    REQUIRE(split.has_value());
    CHECK(split->first == 0);
    CHECK(split->second == 6);

    auto tl = fx("fig2_top_left");
    CHECK(!find_split(tl, ValueAssignment::constant(3), {0, 2}).has_value());
    ValueAssignment f({0, 0, 1}, {"A", "B"});
    CHECK(!find_split(tl, f, {0, 1}).has_value());
}

TEST_CASE("build_splitting_assignment") {
    auto tl = fx("fig2_top_left");
    auto f = build_splitting_assignment(tl, {0, 2});
    REQUIRE(f.has_value());
    CHECK((*f)[0] != (*f)[2]);
    CHECK(find_split(tl, *f, {0, 2}).has_value());
    CHECK(!build_splitting_assignment(tl, {0, 1}).has_value());
    CHECK(!build_splitting_assignment(tl, {}).has_value());
}

TEST_CASE("propagate") {
    auto tl = fx("fig2_top_left");
    auto r = propagate(tl, {0}, 0);
    CHECK(r.committed_grade2 == PointSet{0});
    CHECK(r.committed_grade1 == PointSet{1});
    CHECK(r.rounds == 1);
    CHECK(!(r.committed_grade1 | r.committed_grade2).contains(2));

    auto all = propagate(tl, tl.universe(), 0);
    CHECK(all.committed_grade2 == tl.universe());
    CHECK(all.committed_grade1.empty());

    auto sm = fx("supermajority");
    const auto sm_opens = sm.enumerate_opens();
    for (PointSet o : sm_opens.opens()) {
        if (o.empty()) continue;
        auto p = propagate(sm, o, 0);
        CHECK((p.committed_grade1 | p.committed_grade2) == sm.universe());
    }

    CHECK_THROWS_AS(propagate(tl, {}, 0), Error);
    CHECK_THROWS_AS(propagate(tl, {0, 1}, 0), Error);
}

TEST_CASE("topen_reached_by") {
    auto ll = fx("fig2_lower_left");
    CHECK(topen_reached_by(ll, {1}) == std::vector<PointSet>{{0, 1}});
    CHECK(topen_reached_by(ll, ll.universe()) == maximal_topen_partition(ll).topens);
    CHECK(topen_reached_by(fx("square"), {0, 1}).empty());
    CHECK_THROWS_AS(topen_reached_by(ll, {2}), Error);
}

TEST_CASE("continuity agrees with the reference on random pairs") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        auto f = gen::assignment(rng, s.size());
        bool all = true;
        for (Point p = 0; p < s.size(); ++p) {
            bool want = r.continuous_at(f, p);
            CHECK(continuous_at(s, f, p) == want);
            all = all && want;
        }
        CHECK(is_continuous(s, f) == all);
        CHECK(is_continuous_by_preimages(s, f) == all);
        CHECK(is_continuous_by_closed_preimages(s, f) == all);
    }
}
