#include <doctest.h>

#include "support/builders.hpp"
#include "trisect/bigon.hpp"
#include "trisect/diagram.hpp"
#include "trisect/invariants.hpp"
#include "trisect/moves.hpp"

using namespace trisect;

TEST_CASE("rel_slide_check") {
    CHECK(rel_slide_check({{3, 1}, {4, 2}}, {1, 2}));
    CHECK(!rel_slide_check({{1, 3}}, {1, 2}));
    CHECK(rel_slide_check({}, {}));
    CHECK(rel_slide_check({}, {5}));
}

TEST_CASE("slides on a genus-2 standard diagram") {
    auto d = catalog_sk(1, 1, 0);
    auto slides = enumerate_slides(d.arrangement, "alpha", 0, 1, 2, 6);
    REQUIRE(!slides.empty());

    SUBCASE("results are valid cut systems") {
        for (const auto& cand : slides) {
            CAPTURE(cand.band.to_spec());
            CHECK(validate_cut_system(cand.result, "alpha").pass);
        }
    }
    SUBCASE("homology row addition") {
        auto before = algebraic_intersection_matrix(d.arrangement, "alpha", "beta");
        const auto& cand = slides.front();
        auto after = algebraic_intersection_matrix(cand.result, "alpha", "beta");
        // Row 0 becomes row0 +- row1; rows are defined up to sign.
        bool plus = true, minus = true, plus_neg = true, minus_neg = true;
        for (int j = 0; j < before.cols(); ++j) {
            MInt want_p = before.at(0, j) + before.at(1, j);
            MInt want_m = before.at(0, j) - before.at(1, j);
            if (after.at(0, j) != want_p) plus = false;
            if (after.at(0, j) != want_m) minus = false;
            if (after.at(0, j) != -want_p) plus_neg = false;
            if (after.at(0, j) != -want_m) minus_neg = false;
        }
        CHECK((plus || minus || plus_neg || minus_neg));
        // The other row is untouched.
        for (int j = 0; j < before.cols(); ++j) CHECK(after.at(1, j) == before.at(1, j));
    }
    SUBCASE("a slide can be undone by another slide") {
        const auto& cand = slides.front();
        auto back = enumerate_slides(cand.result, "alpha", 0, 1, 2, 6);
        bool restored = false;
        for (const auto& b : back)
            if (b.result.canonical_form() == d.arrangement.canonical_form()) restored = true;
        CHECK(restored);
    }
    SUBCASE("slides preserve the other families") {
        const auto& cand = slides.front();
        auto before_bg = geometric_intersection_matrix(d.arrangement, "beta", "gamma");
        auto after_bg = geometric_intersection_matrix(cand.result, "beta", "gamma");
        CHECK(before_bg == after_bg);
        for (const char* fam : {"beta", "gamma"}) {
            auto before = restrict_to_families(d.arrangement, {fam}).canonical_form();
            auto after = restrict_to_families(cand.result, {fam}).canonical_form();
            CHECK(before == after);
        }
    }
    SUBCASE("geometric dominates algebraic entrywise") {
        for (const auto& cand : slides) {
            auto geo = geometric_intersection_matrix(cand.result, "alpha", "beta");
            auto alg = algebraic_intersection_matrix(cand.result, "alpha", "beta");
            for (int i = 0; i < geo.rows(); ++i)
                for (int j = 0; j < geo.cols(); ++j) {
                    MInt a = alg.at(i, j);
                    CHECK(geo.at(i, j) >= (a < 0 ? -a : a));
                }
        }
    }
}

TEST_CASE("illegal slides are rejected") {
    auto d = catalog_sk(1, 1, 0);
    SUBCASE("i == j") {
        BandArc b;
        b.curve_i = b.curve_j = 0;
        CHECK_THROWS_AS(slide(d.arrangement, "alpha", 0, 0, b), IllegalSlide);
    }
    SUBCASE("mismatched band anchors") {
        BandArc b;
        b.curve_i = 1;
        b.curve_j = 0;
        CHECK_THROWS_AS(slide(d.arrangement, "alpha", 0, 1, b), IllegalSlide);
    }
    SUBCASE("out of range") {
        BandArc b;
        b.curve_i = 0;
        b.curve_j = 5;
        CHECK_THROWS_AS(slide(d.arrangement, "alpha", 0, 5, b), IllegalSlide);
    }
}

TEST_CASE("band spec round trip") {
    auto d = catalog_sk(1, 1, 0);
    auto slides = enumerate_slides(d.arrangement, "alpha", 0, 1, 2, 6);
    REQUIRE(!slides.empty());
    for (const auto& cand : slides) {
        auto spec = cand.band.to_spec();
        auto parsed = BandArc::from_spec(spec, d.arrangement.surface());
        auto redo = slide(d.arrangement, "alpha", 0, 1, parsed);
        CHECK(redo.canonical_form() == cand.result.canonical_form());
    }
}

TEST_CASE("no bands between curves of a genus-1 family") {
    auto d = catalog("CP2+");
    // single-curve families admit no (i, j) pairs at all
    CHECK(enumerate_slides(d.arrangement, "alpha", 0, 0, 2, 6).empty());
}

TEST_CASE("zero budgets forbid bands that must cross something") {
    auto d = catalog_sk(1, 1, 0);
    // With zero transitions the band must start and end at the same face.
    auto tight = enumerate_slides(d.arrangement, "alpha", 0, 1, 0, 0);
    auto loose = enumerate_slides(d.arrangement, "alpha", 0, 1, 2, 6);
    CHECK(tight.size() <= loose.size());
}

TEST_CASE("eventless bands on the standard genus-2 diagram stay in single faces") {
    auto d = catalog_sk(1, 1, 0);
    auto single_face = enumerate_slides(d.arrangement, "alpha", 0, 1, 0, 0);
    auto multi_face = enumerate_slides(d.arrangement, "alpha", 0, 1, 0, 6);
    CHECK(!single_face.empty());
    REQUIRE(single_face.size() == multi_face.size());
    for (size_t k = 0; k < single_face.size(); ++k)
        CHECK(single_face[k].canonical == multi_face[k].canonical);
}

TEST_CASE("no bands reach a curve behind a family wall") {
    // c1 is sandwiched between two parallel family members, so no band from
    // c1 can reach c2 whatever the budgets.
    SurfaceModel s{2};
    using trisect::testing::make_curve;
    auto arr = Arrangement::create(
        s, {Family{"x",
                   {make_curve(s, "w1", {{"a1", 1}}), make_curve(s, "c1", {{"a1", 2}}),
                    make_curve(s, "w2", {{"a1", 3}}), make_curve(s, "c2", {{"a2", 1}})}}});
    CHECK(enumerate_slides(arr, "x", 1, 3, 0, 0).empty());
    CHECK(enumerate_slides(arr, "x", 1, 3, 2, 6).empty());
    // sliding over the adjacent wall is still possible
    CHECK(!enumerate_slides(arr, "x", 1, 0, 2, 6).empty());
}

TEST_CASE("connect sum and stabilization arithmetic") {
    auto cp2 = catalog("CP2+");
    SUBCASE("CP2 # S100") {
        auto d = connect_sum(cp2, catalog("S100"));
        CHECK(d.claimed == TrisectionParams{2, 1, 0, 0});
        CHECK(euler_characteristic(*d.claimed) == 3);
        CHECK(euler_characteristic(*cp2.claimed) + euler_characteristic(*catalog("S100").claimed) - 2 == 3);
    }
    SUBCASE("S100 # S010") {
        auto d = connect_sum(catalog("S100"), catalog("S010"));
        CHECK(d.claimed == TrisectionParams{2, 1, 1, 0});
        CHECK(euler_characteristic(*d.claimed) == 2);
    }
    SUBCASE("stabilize S0 in each slot") {
        CHECK(stabilize(catalog("S0"), 1).arrangement.canonical_form() ==
              catalog("S100").arrangement.canonical_form());
        CHECK(stabilize(catalog("S0"), 2).arrangement.canonical_form() ==
              catalog("S010").arrangement.canonical_form());
        CHECK(stabilize(catalog("S0"), 3).arrangement.canonical_form() ==
              catalog("S001").arrangement.canonical_form());
        CHECK_THROWS_AS(stabilize(catalog("S0"), 4), ValidationError);
    }
    SUBCASE("stabilizations commute on parameters and standard form") {
        auto d12 = stabilize(stabilize(cp2, 1), 2);
        auto d21 = stabilize(stabilize(cp2, 2), 1);
        CHECK(d12.claimed == d21.claimed);
        auto w12 = is_standard_trisection(d12);
        auto w21 = is_standard_trisection(d21);
        REQUIRE(w12.has_value());
        REQUIRE(w21.has_value());
        CHECK(w12->params == w21->params);
    }
    SUBCASE("chi is preserved by stabilization") {
        for (int kind : {1, 2, 3}) {
            auto d = stabilize(cp2, kind);
            CHECK(euler_characteristic(*d.claimed) == euler_characteristic(*cp2.claimed));
        }
    }
    SUBCASE("connect sum is associative and commutative on parameters") {
        auto a = catalog("S100");
        auto b = catalog("S010");
        auto cc = catalog("CP2+");
        auto left = connect_sum(connect_sum(a, b), cc);
        auto right = connect_sum(a, connect_sum(b, cc));
        CHECK(left.claimed == right.claimed);
        auto ab = connect_sum(a, b);
        auto ba = connect_sum(b, a);
        CHECK(ab.claimed == ba.claimed);
        auto wab = is_standard_trisection(ab);
        auto wba = is_standard_trisection(ba);
        REQUIRE(wab.has_value());
        REQUIRE(wba.has_value());
        CHECK(wab->params == wba->params);
    }
}
