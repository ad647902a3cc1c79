#include "support.hpp"

#include <set>

#include "reference.hpp"
#include "semitop/classification.hpp"
#include "semitop/error.hpp"
#include "semitop/gallery.hpp"
#include "semitop/relations.hpp"

using namespace semitop;

TEST_CASE("every pinned fixture matches the classification") {
    for (const auto& f : gallery::fixtures()) {
        if (!f.expected) continue;
        CAPTURE(f.name);
        auto s = gallery::build(f.name);
        auto c = classify_all(s);
        const auto& e = *f.expected;
        REQUIRE(e.rows.size() == s.size());
        for (Point p = 0; p < s.size(); ++p) {
            CAPTURE(p);
            const auto& want = e.rows[p];
            const auto& got = c.rows[p];
            CHECK(got.intertwined == want.intertwined);
            CHECK(got.community == want.community);
            CHECK(got.regular == want.regular);
            CHECK(got.weakly_regular == want.weakly_regular);
            CHECK(got.quasiregular == want.quasiregular);
            CHECK(got.unconflicted == want.unconflicted);
            if (want.hypertransitive) CHECK(got.hypertransitive == *want.hypertransitive);
        }
        auto part = maximal_topen_partition(s);
        CHECK(part.topens == e.partition.topens);
        CHECK(part.residue == e.partition.residue);
    }
}

TEST_CASE("pinned tables agree with the reference brute force") {
    for (const auto& f : gallery::fixtures()) {
        if (!f.expected) continue;
        CAPTURE(f.name);
        auto s = gallery::build(f.name);
        ref::Space r(s);
        const auto& e = *f.expected;
        for (Point p = 0; p < s.size(); ++p) {
            CAPTURE(p);
            const auto& want = e.rows[p];
            CHECK(want.intertwined.bits() == r.star(p));
            CHECK(want.community.bits() == r.community(p));
            CHECK(want.regular == r.regular(p));
            CHECK(want.weakly_regular == r.weakly_regular(p));
            CHECK(want.quasiregular == r.quasiregular(p));
            CHECK(want.unconflicted == r.unconflicted(p));
            if (want.hypertransitive) CHECK(*want.hypertransitive == r.hypertransitive(p));
        }
        CHECK(ref::masks(e.partition.topens) == ref::sorted(r.maximal_topens()));
    }
}

TEST_CASE("fixture specifics") {
    auto ll = maximal_topen_partition(fx("fig2_lower_left"));
    CHECK(ll.topens == std::vector<PointSet>{{0, 1}, {3, 4}});
    CHECK(ll.residue == PointSet{2});

    auto sm = gallery::build("supermajority", {4});
    auto c = classify_all(sm);
    for (const auto& row : c.rows) CHECK(row.regular);
    CHECK(maximal_topen_partition(sm).topens == std::vector<PointSet>{sm.universe()});
    CHECK(is_intertwined_space(sm));

    auto mto = gallery::build("more_than_one", {4});
    for (const auto& row : classify_all(mto).rows) CHECK(!row.quasiregular);

    auto lr = fx("fig2_lower_right");
    CHECK(lr.label(3) == "*");
}

TEST_CASE("parametric fixtures agree with the reference across parameters") {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"discrete", {1}},       {"discrete", {5}},         {"trivial", {1}},       {"trivial", {6}},
        {"supermajority", {3}},  {"supermajority", {6}},    {"all_but_one", {3}},   {"all_but_one", {6}},
        {"more_than_one", {3}},  {"more_than_one", {5}},    {"grid_quorum", {2}},   {"grid_quorum", {3}},
        {"two_triples_line", {1}}, {"two_triples_line", {2}}, {"final_segment_block", {13}},
    };
    for (const auto& [name, params] : cases) {
        CAPTURE(name);
        CAPTURE(params[0]);
        auto s = gallery::build(name, params);
        ref::Space r(s);
        auto c = classify_all(s);
        for (Point p = 0; p < s.size(); ++p) {
            CHECK(c.rows[p].intertwined.bits() == r.star(p));
            CHECK(c.rows[p].regular == r.regular(p));
            CHECK(c.rows[p].unconflicted == r.unconflicted(p));
        }
    }
}

TEST_CASE("more_than_one is quasiregular only below four points") {
    for (const auto& row : classify_all(gallery::build("more_than_one", {3})).rows) CHECK(row.regular);
    for (int n = 4; n <= 6; ++n)
        for (const auto& row : classify_all(gallery::build("more_than_one", {n})).rows) CHECK(!row.quasiregular);
}

TEST_CASE("lookup errors") {
    CHECK_THROWS_AS(gallery::fixture("no_such_fixture"), Error);
    CHECK_THROWS_AS(gallery::build("discrete", {0, 1}), Error);
    CHECK_THROWS_AS(gallery::build("square", {3}), Error);
    CHECK_THROWS_AS(gallery::build("final_segment_block", {5}), Error);
    try {
        gallery::build("nope");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownFixture);
    }
    auto names = gallery::fixture_names();
    std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == names.size());
    CHECK(names.size() == gallery::fixtures().size());
}

TEST_CASE("random_semitopology") {
    auto t = gallery::random_semitopology(3, 0, 42);
    CHECK(t.basis().empty());
    auto one = gallery::random_semitopology(1, 5, 7);
    CHECK(one.enumerate_opens().opens() == std::vector<PointSet>{{}, {0}});
    CHECK(gallery::random_semitopology(8, 10, 99) == gallery::random_semitopology(8, 10, 99));
    CHECK_THROWS_AS(gallery::random_semitopology(0, 1, 1), Error);
    CHECK_THROWS_AS(gallery::random_semitopology(17, 1, 1), Error);
    CHECK_THROWS_AS(gallery::random_semitopology(3, -1, 1), Error);
}
