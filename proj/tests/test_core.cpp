#include "support.hpp"

#include <random>

#include "generators.hpp"
#include "reference.hpp"
#include "semitop/error.hpp"
#include "semitop/semitopology.hpp"

using namespace semitop;

TEST_CASE("point set basics") {
    PointSet a{0, 1}, b{1, 2};
    CHECK(a.meets(b));
    CHECK((a & b) == PointSet{1});
    CHECK((a | b) == PointSet{0, 1, 2});
    CHECK((a - b) == PointSet{0});
    CHECK(a.size() == 2);
    CHECK(PointSet{}.empty());
    CHECK(!PointSet{}.meets(PointSet{}));
    CHECK(PointSet::full(3).complement_in(PointSet::full(3)).empty());
    CHECK(PointSet::full(64).size() == 64);
    CHECK(a.members() == std::vector<Point>{0, 1});
}

TEST_CASE("canonical order is by size then lexicographic") {
    CHECK(canonical_less(PointSet{2}, PointSet{0, 1}));
    CHECK(canonical_less(PointSet{0, 2}, PointSet{1, 2}));
    CHECK(canonical_less(PointSet{0, 1}, PointSet{0, 2}));
    CHECK(!canonical_less(PointSet{0, 1}, PointSet{0, 1}));
    CHECK(canonical_less(PointSet{}, PointSet{0}));
}

TEST_CASE("is_open") {
    SemiTopology s(3, {{0}, {2}});
    CHECK(s.is_open({0, 2}));
    CHECK(!s.is_open({0, 1}));
    CHECK(s.is_open({}));
    CHECK(s.is_open({0, 1, 2}));
}

TEST_CASE("interior") {
    auto s = fx("fig2_top_left");
    CHECK(s.interior({0, 1, 2}) == PointSet{0, 1, 2});
    CHECK(s.interior({0, 1}) == PointSet{0});
    CHECK(fx("square").interior({0}) == PointSet{});
}

TEST_CASE("closure") {
    auto s = fx("sierpinski");
    CHECK(s.closure({0}) == PointSet{0});
    CHECK(s.closure({1}) == PointSet{0, 1});
    CHECK(s.closure({}) == PointSet{});
    CHECK(fx("trivial").closure({1}) == PointSet{0, 1, 2});
}

TEST_CASE("is_closed") {
    CHECK(fx("sierpinski").is_closed({0}));
    CHECK(fx("fig2_top_left").is_closed({0, 1}));
    CHECK(fx("square").is_closed({0, 1, 2, 3}));
    CHECK(fx("square").is_closed({}));
    CHECK(!fx("sierpinski").is_closed({1}));
}

TEST_CASE("complement") {
    SemiTopology s(3, {});
    CHECK(s.complement({0}) == PointSet{1, 2});
    CHECK(s.complement({}) == PointSet{0, 1, 2});
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        PointSet x = gen::subset(rng, s);
        CHECK(s.complement(s.complement(x)) == x);
    }
}

TEST_CASE("enumerate_opens") {
    auto fam = fx("fig2_top_left").enumerate_opens();
    CHECK(!fam.truncated());
    CHECK(fam.opens() == std::vector<PointSet>{{}, {0}, {2}, {0, 2}, {0, 1, 2}});
    CHECK(fx("trivial").enumerate_opens().opens() == std::vector<PointSet>{{}, {0, 1, 2}});
    CHECK(SemiTopology(2, {{0}, {1}}).enumerate_opens().size() == 4);
}

TEST_CASE("enumerate_opens truncates at the cap") {
    SemiTopology s(10, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}});
    auto fam = s.enumerate_opens(100);
    CHECK(fam.truncated());
    CHECK(fam.size() <= 100);
    CHECK_THROWS_AS(fam.require_exact("test"), Error);
    CHECK(s.enumerate_opens().size() == 1024);
}

TEST_CASE("generators are canonicalised") {
    SemiTopology s(3, {{0}, {}, {0}, {1, 2}});
    CHECK(s.basis() == std::vector<PointSet>{{0}, {1, 2}});
    CHECK(s.generators_at(1) == std::vector<PointSet>{{1, 2}});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(SemiTopology(2, {{0, 5}}), Error);
    CHECK_THROWS_AS(SemiTopology(std::vector<std::string>{"a", "a"}, {}), Error);
    CHECK_THROWS_AS(SemiTopology(std::vector<std::string>(65, "x"), {}), Error);
    try {
        SemiTopology(2, {{3}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadParams);
    }
}

TEST_CASE("subspace") {
    auto s = fx("not_strong_topen");
    auto sub = s.subspace({0, 1});
    auto fam = sub.enumerate_opens();
    CHECK(fam.contains({0}));
    CHECK(fam.contains({1}));
    CHECK(sub.labels() == std::vector<std::string>{"0", "1"});

    CHECK(s.subspace(s.universe()).enumerate_opens().opens() == s.enumerate_opens().opens());

    auto empty = s.subspace({});
    CHECK(empty.size() == 0);
    CHECK(empty.enumerate_opens().opens() == std::vector<PointSet>{{}});
}

TEST_CASE("final semitopology on one point") {
    SemiTopology s(std::vector<std::string>{"a"}, {});
    CHECK(s.enumerate_opens().opens() == std::vector<PointSet>{{}, {0}});
}

TEST_CASE("format_set uses labels") {
    auto s = fx("fig2_lower_right");
    CHECK(format_set(s, {1, 3}) == "{1,*}");
    CHECK(format_set(s, {}) == "{}");
}

TEST_CASE("fast set operations agree with the reference on random spaces") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto s = gen::space(rng);
        ref::Space r(s);
        CHECK(ref::masks(s.enumerate_opens().opens()) == r.opens);
        for (int j = 0; j < 16; ++j) {
            PointSet x = gen::subset(rng, s);
            CHECK(s.is_open(x) == r.open(x.bits()));
            CHECK(s.interior(x).bits() == r.interior(x.bits()));
            CHECK(s.closure(x).bits() == r.closure(x.bits()));
            CHECK(s.is_closed(x) == r.closed(x.bits()));
            CHECK(s.is_closed_via_complement(x) == r.closed(x.bits()));
        }
    }
}
