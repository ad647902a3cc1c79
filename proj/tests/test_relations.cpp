#include "support.hpp"

#include <random>

#include "generators.hpp"
#include "reference.hpp"
#include "semitop/error.hpp"
#include "semitop/relations.hpp"

using namespace semitop;

TEST_CASE("between") {
    CHECK(between({0, 1}, {1, 2}));
    CHECK(!between({}, {}));
    CHECK(between_in({0, 1}, {1}, {1, 2}));
    std::mt19937_64 rng(3);
    SemiTopology s(6, {});
    for (int i = 0; i < 200; ++i) {
        PointSet x = gen::subset(rng, s), y = gen::subset(rng, s), z = gen::subset(rng, s);
        CHECK(between(x, x) == !x.empty());
        CHECK(between_in(x, y, y) == between(x, y));
        if (between_in(x, y, z)) CHECK(between(x, z));
    }
}

TEST_CASE("is_transitive") {
    auto s = fx("fig2_lower_left");
    for (Point p = 0; p < s.size(); ++p) CHECK(is_transitive(s, PointSet::singleton(p)));
    CHECK(is_transitive(s, {}));
    CHECK(!is_transitive(s, {0, 4}));
}

TEST_CASE("is_strongly_transitive") {
    auto s = fx("not_strongly_transitive");
    CHECK(is_transitive(s, {0, 2}));
    CHECK(!is_strongly_transitive(s, {0, 2}));
    CHECK(is_strongly_transitive(fx("discrete"), {1}));
    CHECK(!is_strongly_transitive(fx("not_strong_topen"), {0, 1}));
}

TEST_CASE("is_topen and is_strong_topen") {
    CHECK(is_topen(fx("fig2_top_left"), {0}));
    auto sq = fx("square");
    const auto sq_opens = sq.enumerate_opens();
    for (PointSet o : sq_opens.opens()) {
        if (!o.empty()) CHECK(!is_topen(sq, o));
    }
    auto nst = fx("not_strong_topen");
    CHECK(is_topen(nst, {0, 1}));
    CHECK(!is_strong_topen(nst, {0, 1}));
    CHECK(!is_topen(nst, {}));
}

TEST_CASE("is_hyperconnected") {
    CHECK(is_hyperconnected(fx("fig2_lower_left"), {0, 4}));
    auto tr = fx("fig2_top_right");
    CHECK(is_hyperconnected(tr, {0, 1}));
    CHECK(!is_transitive(tr, {0, 1}));
}

TEST_CASE("in a topology, open hyperconnected = topen = strong topen") {
    auto s = fx("not_strongly_transitive");
    const auto s_opens = s.enumerate_opens();
    for (PointSet o : s_opens.opens()) {
        if (o.empty()) continue;
        CHECK(is_hyperconnected(s, o) == is_topen(s, o));
        CHECK(is_topen(s, o) == is_strong_topen(s, o));
    }
}

TEST_CASE("intertwined") {
    auto s = fx("fig2_top_left");
    CHECK(intertwined(s, 0, 1));
    CHECK(intertwined(s, 1, 2));
    CHECK(!intertwined(s, 0, 2));
    for (Point p = 0; p < 3; ++p) CHECK(intertwined(s, p, p));
    CHECK(intertwined(fx("sierpinski"), 0, 1));
}

TEST_CASE("intertwined_of") {
    auto s = fx("fig2_top_left");
    CHECK(intertwined_of(s, 0) == PointSet{0, 1});
    CHECK(intertwined_of(s, 1) == PointSet{0, 1, 2});
    CHECK(intertwined_of(s, 2) == PointSet{1, 2});
    auto ll = fx("fig2_lower_left");
    CHECK(intertwined_of(ll, 2) == ll.universe());
    auto sq = fx("square");
    for (Point p = 0; p < 4; ++p) CHECK(intertwined_of(sq, p) == PointSet::singleton(p));
}

TEST_CASE("is_intertwined_space") {
    CHECK(is_intertwined_space(fx("supermajority")));
    CHECK(is_intertwined_space(gallery::build("all_but_one", {5})));
    CHECK(!is_intertwined_space(fx("fig2_top_left")));
}

TEST_CASE("maximal_topen_partition") {
    auto ll = maximal_topen_partition(fx("fig2_lower_left"));
    CHECK(ll.topens == std::vector<PointSet>{{0, 1}, {3, 4}});
    CHECK(ll.residue == PointSet{2});
    auto lr = maximal_topen_partition(fx("fig2_lower_right"));
    CHECK(lr.topens == std::vector<PointSet>{{0}, {1}, {2}});
    CHECK(lr.residue == PointSet{3});
    auto sq = maximal_topen_partition(fx("square"));
    CHECK(sq.topens.empty());
    CHECK(sq.residue == PointSet{0, 1, 2, 3});
}

TEST_CASE("maximal_topen_containing") {
    auto s = fx("fig2_lower_left");
    CHECK(maximal_topen_containing(s, {1}) == PointSet{0, 1});
    CHECK(maximal_topen_containing(s, {0, 1}) == PointSet{0, 1});
    CHECK_THROWS_AS(maximal_topen_containing(s, {2}), Error);
    CHECK_THROWS_AS(maximal_topen_containing(s, {}), Error);
}

TEST_CASE("is_meet_irreducible_empty") {
    auto s = fx("not_strong_topen");
    CHECK(!is_meet_irreducible_empty(s, {0, 1}));
    CHECK(is_meet_irreducible_empty(s, {2}));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto sp = gen::space(rng);
        PointSet t = gen::subset(rng, sp);
        CHECK(is_meet_irreducible_empty(sp, t) == is_strongly_transitive(sp, t));
    }
}

TEST_CASE("relations agree with the reference on random spaces") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        for (int j = 0; j < 12; ++j) {
            PointSet t = gen::subset(rng, s);
            CHECK(is_transitive(s, t) == r.transitive(t.bits()));
            CHECK(is_strongly_transitive(s, t) == r.strongly_transitive(t.bits()));
            CHECK(is_topen(s, t) == r.topen(t.bits()));
        }
        auto all = intertwined_all(s);
        for (Point p = 0; p < s.size(); ++p) {
            CHECK(intertwined_of(s, p).bits() == r.star(p));
            CHECK(all[p].bits() == r.star(p));
            for (Point q = 0; q < s.size(); ++q) CHECK(intertwined(s, p, q) == r.intertwined(p, q));
        }
        auto part = maximal_topen_partition(s);
        CHECK(ref::masks(part.topens) == ref::sorted(r.maximal_topens()));
    }
}
