#include <doctest.h>

#include "support/builders.hpp"
#include "trisect/surface.hpp"

#include <set>

using namespace trisect;
using trisect::testing::make_curve;

TEST_CASE("segment naming and parsing") {
    SurfaceModel s{2};
    CHECK(s.segment_name(0) == "a1");
    CHECK(s.segment_name(1) == "b1");
    CHECK(s.segment_name(2) == "A1");
    CHECK(s.segment_name(3) == "B1");
    CHECK(s.segment_name(4) == "a2");
    CHECK(s.parse_segment("B2") == 7);
    CHECK(s.parse_segment("a3") == std::nullopt);
    CHECK(s.parse_segment("c1") == std::nullopt);
    CHECK(s.parse_segment("a") == std::nullopt);
    CHECK(SurfaceModel::partner(0) == 2);
    CHECK(SurfaceModel::partner(3) == 1);
    CHECK(SurfaceModel::edge_of(0) == SurfaceModel::edge_of(2));
    CHECK(SurfaceModel::edge_of(1) == SurfaceModel::edge_of(3));
}

TEST_CASE("boundary order on the torus, one slot each") {
    auto arr = trisect::testing::torus_mu_lambda();
    auto order = arr.boundary_order();
    REQUIRE(order.size() == 4);
    SurfaceModel s{1};
    CHECK(order[0] == CrossingEvent{*s.parse_segment("a1"), 1});
    CHECK(order[1] == CrossingEvent{*s.parse_segment("b1"), 1});
    CHECK(order[2] == CrossingEvent{*s.parse_segment("A1"), 1});
    CHECK(order[3] == CrossingEvent{*s.parse_segment("B1"), 1});
}

TEST_CASE("boundary order with two slots per edge") {
    SurfaceModel s{1};
    Family fu{"u", {make_curve(s, "m1", {{"a1", 1}}), make_curve(s, "m2", {{"a1", 2}})}};
    Family fv{"v", {make_curve(s, "l1", {{"b1", 1}}), make_curve(s, "l2", {{"b1", 2}})}};
    auto arr = Arrangement::create(s, {fu, fv});
    auto order = arr.boundary_order();
    REQUIRE(order.size() == 8);
    CHECK(order[0] == CrossingEvent{0, 1});
    CHECK(order[1] == CrossingEvent{0, 2});
    CHECK(order[2] == CrossingEvent{1, 1});
    CHECK(order[3] == CrossingEvent{1, 2});
    CHECK(order[4] == CrossingEvent{2, 1});
}

TEST_CASE("genus 2 empty arrangement has empty boundary order") {
    auto arr = Arrangement::create(SurfaceModel{2}, {Family{"u", {}}});
    CHECK(arr.boundary_order().empty());
}

TEST_CASE("slot table validation") {
    SurfaceModel s{1};
    SUBCASE("double occupancy via partner aliasing") {
        // With two crossings on edge b, b1@1 and B1@2 name the same glued point.
        Family f1{"u", {make_curve(s, "x", {{"b1", 1}})}};
        Family f2{"v", {make_curve(s, "y", {{"B1", 2}})}};
        CHECK_THROWS_AS(Arrangement::create(s, {f1, f2}), ValidationError);
    }
    SUBCASE("slot gap") {
        Family f{"u", {make_curve(s, "x", {{"a1", 2}})}};
        CHECK_THROWS_AS(Arrangement::create(s, {f}), ValidationError);
    }
    SUBCASE("empty curve") {
        Family f{"u", {Curve{"x", {}}}};
        CHECK_THROWS_AS(Arrangement::create(s, {f}), ValidationError);
    }
    SUBCASE("genus 0 rejects curves") {
        SurfaceModel s0{0};
        Family f{"u", {make_curve(s, "x", {{"a1", 1}})}};
        CHECK_THROWS_AS(Arrangement::create(s0, {f}), ValidationError);
    }
    SUBCASE("crossing curves in one family rejected") {
        Family f{"u", {make_curve(s, "x", {{"a1", 1}}), make_curve(s, "y", {{"b1", 1}})}};
        CHECK_THROWS_AS(Arrangement::create(s, {f}), ValidationError);
    }
}

TEST_CASE("chord crossings on the torus") {
    auto arr = trisect::testing::torus_mu_lambda();
    CurveId mu{0, 0}, lambda{1, 0};
    SUBCASE("mu and lambda cross exactly once") {
        auto xs = arr.chord_crossings(mu, lambda);
        REQUIRE(xs.size() == 1);
        CHECK((xs[0].sign == 1 || xs[0].sign == -1));
    }
    SUBCASE("self-check mode reports no crossings") {
        CHECK(arr.chord_crossings(mu, mu).empty());
    }
    SUBCASE("symmetry with opposite signs") {
        auto uv = arr.chord_crossings(mu, lambda);
        auto vu = arr.chord_crossings(lambda, mu);
        REQUIRE(uv.size() == vu.size());
        CHECK(uv[0].sign == -vu[0].sign);
    }
}

TEST_CASE("torus (1,1) curve crosses mu once") {
    SurfaceModel s{1};
    Family fu{"u", {make_curve(s, "mu", {{"a1", 1}})}};
    Family fv{"v", {make_curve(s, "lambda", {{"b1", 1}})}};
    Family fw{"w", {make_curve(s, "tau", {{"a1", 2}, {"b1", 2}})}};
    auto arr = Arrangement::create(s, {fu, fv, fw});
    CurveId mu{0, 0}, lambda{1, 0}, tau{2, 0};
    CHECK(arr.geometric_crossings(tau, mu) == 1);
    CHECK(arr.geometric_crossings(tau, lambda) == 1);
    CHECK(arr.geometric_crossings(mu, lambda) == 1);
}

TEST_CASE("canonical form invariances") {
    SurfaceModel s{1};
    auto tau = make_curve(s, "t", {{"a1", 2}, {"b1", 2}});
    auto base = Arrangement::create(
        s, {Family{"u", {make_curve(s, "m", {{"a1", 1}})}},
            Family{"v", {make_curve(s, "l", {{"b1", 1}})}}, Family{"w", {tau}}});

    SUBCASE("rotation of the event cycle") {
        auto rot = make_curve(s, "t", {{"b1", 2}, {"a1", 2}});
        auto other = Arrangement::create(
            s, {Family{"u", {make_curve(s, "m", {{"a1", 1}})}},
                Family{"v", {make_curve(s, "l", {{"b1", 1}})}}, Family{"w", {rot}}});
        CHECK(base.canonical_form() == other.canonical_form());
    }
    SUBCASE("curve renaming within a family") {
        auto ren = make_curve(s, "zz", {{"a1", 2}, {"b1", 2}});
        auto other = Arrangement::create(
            s, {Family{"u", {make_curve(s, "m", {{"a1", 1}})}},
                Family{"v", {make_curve(s, "l", {{"b1", 1}})}}, Family{"w", {ren}}});
        CHECK(base.canonical_form() == other.canonical_form());
    }
    SUBCASE("orientation reversal of one curve") {
        auto rev_events = base.reversed_events(tau.events);
        Curve rev{"t", rev_events};
        auto other = Arrangement::create(
            s, {Family{"u", {make_curve(s, "m", {{"a1", 1}})}},
                Family{"v", {make_curve(s, "l", {{"b1", 1}})}}, Family{"w", {rev}}});
        CHECK(base.canonical_form() == other.canonical_form());
    }
    SUBCASE("mu and lambda differ") {
        auto a = Arrangement::create(s, {Family{"u", {make_curve(s, "m", {{"a1", 1}})}}});
        auto b = Arrangement::create(s, {Family{"u", {make_curve(s, "l", {{"b1", 1}})}}});
        CHECK(a.canonical_form() != b.canonical_form());
    }
}

TEST_CASE("reversal is an involution") {
    SurfaceModel s{2};
    Family fu{"u", {make_curve(s, "c", {{"a1", 1}, {"a2", 1}})}};
    Family fv{"v", {make_curve(s, "d", {{"b1", 1}})}};
    auto arr = Arrangement::create(s, {fu, fv});
    const auto& ev = arr.family(0).curves[0].events;
    auto twice = arr.reversed_events(arr.reversed_events(ev));
    // Double reversal returns the same cyclic sequence (possibly rotated).
    CHECK(arr.canonical_curve_key(ev) == arr.canonical_curve_key(twice));
}
