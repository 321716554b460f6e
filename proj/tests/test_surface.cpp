// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "whgeo/surface.hpp"

using namespace whgeo;

namespace {

using M = WeightedPolynomial::Monomial;

// x1^2 + x2^2 - x3^4
WeightedPolynomial circle_horn() {
    return WeightedPolynomial(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 2, 0}},
                                  M{Rational(-1), {0, 0, 4}}});
}

// x1^2 + x2^2 - x3^2
WeightedPolynomial cone() {
    return WeightedPolynomial(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 2, 0}},
                                  M{Rational(-1), {0, 0, 2}}});
}

// x1^2 + x2^4 - x3^8
WeightedPolynomial quartic_horn() {
    return WeightedPolynomial(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 4, 0}},
                                  M{Rational(-1), {0, 0, 8}}});
}

// x1^2 + x2^2 + x3^4 (only the origin)
WeightedPolynomial point_only() {
    return WeightedPolynomial(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 2, 0}},
                                  M{Rational(1), {0, 0, 4}}});
}

}  // namespace

TEST_CASE("weighted_degree_check") {
    CHECK(weighted_degree_check(circle_horn(), validate_weights({2, 2, 1})) == 4);
    WeightedPolynomial f2(2, {M{Rational(1), {2, 0}}, M{Rational(1), {0, 3}}});
    CHECK(weighted_degree_check(f2, validate_weights({3, 2})) == 6);
    CHECK_THROWS_WITH_AS(weighted_degree_check(f2, validate_weights({1, 1})),
                         doctest::Contains("{2,3}"), Error);
}

TEST_CASE("polynomial canonicalization combines like terms") {
    WeightedPolynomial f(2, {M{Rational(1), {1, 0}}, M{Rational(2), {1, 0}},
                             M{Rational(1), {0, 1}}, M{Rational(-1), {0, 1}}});
    REQUIRE(f.monomials().size() == 1);
    CHECK(f.monomials()[0].coeff == Rational(3));
}

TEST_CASE("flow_invariance_identity") {
    auto s = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    CHECK(flow_invariance_identity(s));
    WeightedPolynomial f2(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 3, 0}}});
    auto g = SurfaceGerm::create(f2, validate_weights({3, 2, 1}));
    CHECK(flow_invariance_identity(g));
    auto forged = SurfaceGerm::forge(circle_horn(), validate_weights({2, 2, 1}), 5);
    CHECK(!flow_invariance_identity(forged));
}

TEST_CASE("slice_curve traces the unit circle") {
    auto s = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    for (int sign : {+1, -1}) {
        auto slice = slice_curve(s, sign, 2.0, 256);
        REQUIRE(slice.components.size() == 1);
        CHECK(slice.components[0].closed);
        CHECK(slice.components[0].points.size() > 100);
        CHECK(slice.max_residual <= 1e-3 * (1 + s.f.max_abs_coeff()));
        for (const auto& p : slice.components[0].points) {
            CHECK(std::fabs(p[0] * p[0] + p[1] * p[1] - 1.0) < 0.05);
        }
    }
}

TEST_CASE("slice_curve on an empty slice") {
    auto s = SurfaceGerm::create(point_only(), validate_weights({2, 2, 1}));
    auto slice = slice_curve(s, +1, 2.0, 64);
    CHECK(slice.components.empty());
}

TEST_CASE("slice_curve survives exact zeros on grid nodes via the offset retry") {
    // m = 17 over [-2,2] puts nodes on the unit circle (e.g. (0,1)) where
    // f evaluates exactly to zero; the deterministic 1/3-cell offset clears it
    auto s = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    CHECK(s.f.eval({0.0, 1.0, 1.0}) == 0.0);
    auto slice = slice_curve(s, +1, 2.0, 17);
    REQUIRE(slice.components.size() == 1);
    CHECK(slice.components[0].closed);
}

TEST_CASE("trace_link bundles both slices") {
    auto s = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    auto link = trace_link(s);
    CHECK(link.component_count() == 2);
    CHECK(link.plus.slice_sign == 1);
    CHECK(link.minus.slice_sign == -1);
    CHECK(link.max_residual() <= 1e-3 * (1 + s.f.max_abs_coeff()));
    CHECK(link.snap_denominator == 1000000);
}

TEST_CASE("polynomial canonical text round trip") {
    auto f = circle_horn();
    CHECK(f.to_string() == "x1^2 + x2^2 - x3^4");
    WeightedPolynomial g(3, {M{Rational(3, 2), {2, 1, 0}}, M{Rational(-1), {0, 0, 1}},
                             M{Rational(1), {1, 1, 1}}});
    CHECK(g.to_string() == "3/2*x1^2*x2 + x1*x2*x3 - x3");
    CHECK(WeightedPolynomial(3, {}).to_string() == "0");
}

TEST_CASE("slice_curve reports a too-small box") {
    auto s = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    CHECK_THROWS_WITH_AS(slice_curve(s, +1, 0.9, 64), doctest::Contains("BoxTooSmall"), Error);
}

TEST_CASE("origin_slice_trivial") {
    CHECK(origin_slice_trivial(SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}))));
    CHECK(origin_slice_trivial(SurfaceGerm::create(quartic_horn(), validate_weights({4, 2, 1}))));
    // x1^2 - x2^2 - x3^2: zeros along x1 = +/- x2
    WeightedPolynomial saddle(3, {M{Rational(1), {2, 0, 0}}, M{Rational(-1), {0, 2, 0}},
                                  M{Rational(-1), {0, 0, 2}}});
    CHECK(!origin_slice_trivial(SurfaceGerm::create(saddle, validate_weights({1, 1, 1}))));
    // f with x3 dividing every monomial: the whole plane {x3=0} lies in X
    WeightedPolynomial planey(3, {M{Rational(1), {0, 0, 1}}});
    CHECK(!origin_slice_trivial(SurfaceGerm::create(planey, validate_weights({1, 1, 1}))));
    // tangential touch: (x1^2 + x2^2 - x3^2)^ ... use x1^2 only: g = x1^2 >= 0 touches 0
    WeightedPolynomial tangent(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 0, 2}}});
    CHECK_THROWS_WITH_AS(
        origin_slice_trivial(SurfaceGerm::create(tangent, validate_weights({1, 1, 1}))),
        doctest::Contains("Inconclusive"), Error);
}

TEST_CASE("snap_rational and slice_to_leaf") {
    CHECK(snap_rational(0.5) == Rational(1, 2));
    CHECK(snap_rational(-0.25) == Rational(-1, 4));
    CHECK(snap_rational(1.0 / 3.0, 1000) == Rational(1, 3));
    CHECK(snap_rational(0.0) == Rational(0));

    auto w = validate_weights({2, 2, 1});
    auto leaf = slice_to_leaf(w, {1.0, 0.0}, +1);
    CHECK(leaf.seed == Point{Rational(1), Rational(0), Rational(1)});
    auto leaf2 = slice_to_leaf(validate_weights({4, 2, 1}), {0.0, 1.0}, +1);
    CHECK(leaf2.seed == Point{Rational(0), Rational(1), Rational(1)});
    auto leaf3 = slice_to_leaf(w, {1.0 / 3.0, 0.0}, -1, 1000);
    CHECK(leaf3.seed[0] == Rational(1, 3));
    CHECK(leaf3.seed[2] == Rational(-1));
}

TEST_CASE("component_exponent on golden slices") {
    auto circle = SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1}));
    auto slice = slice_curve(circle, +1, 2.0, 256);
    REQUIRE(slice.components.size() == 1);
    CHECK(component_exponent(circle.w, slice.components[0], +1) == Rational(2));

    auto quartic = SurfaceGerm::create(quartic_horn(), validate_weights({4, 2, 1}));
    auto qslice = slice_curve(quartic, +1, 2.0, 256);
    REQUIRE(qslice.components.size() == 1);
    CHECK(component_exponent(quartic.w, qslice.components[0], +1) == Rational(2));

    // synthetic degenerate component: all x2 equal
    SlicePolyline line;
    for (int i = 0; i <= 20; ++i)
        line.points.push_back({-1.0 + 0.1 * i, 0.5});
    CHECK_THROWS_WITH_AS(component_exponent(circle.w, line, +1),
                         doctest::Contains("Degenerate"), Error);

    SlicePolyline tiny;
    tiny.points.push_back({0.0, 0.0});
    CHECK_THROWS_WITH_AS(component_exponent(circle.w, tiny, +1),
                         doctest::Contains("TooFewPoints"), Error);
}

TEST_CASE("horn_exponent goldens") {
    // x1^2 + x2^2 - x3^4, w = (2,2,1): two slice circles, each beta = 2
    auto r1 = horn_exponent(SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1})));
    CHECK(r1.origin_slice_trivial);
    CHECK(r1.link_component_count == 2);
    REQUIRE(r1.components.size() == 2);
    for (const auto& c : r1.components) {
        REQUIRE(c.beta.has_value());
        CHECK(*c.beta == Rational(2));
        CHECK(c.closed);
    }
    REQUIRE(r1.beta.has_value());
    CHECK(*r1.beta == Rational(2));
    CHECK(r1.applicable);
    CHECK(r1.gradient_evidence);

    // x1^2 + x2^2 - x3^2, w = (1,1,1): beta = 1
    auto r2 = horn_exponent(SurfaceGerm::create(cone(), validate_weights({1, 1, 1})));
    CHECK(r2.origin_slice_trivial);
    REQUIRE(r2.beta.has_value());
    CHECK(*r2.beta == Rational(1));

    // x1^2 + x2^4 - x3^8, w = (4,2,1): two components, each 2 = a2/a3
    auto r3 = horn_exponent(SurfaceGerm::create(quartic_horn(), validate_weights({4, 2, 1})));
    CHECK(r3.link_component_count == 2);
    REQUIRE(r3.beta.has_value());
    CHECK(*r3.beta == Rational(2));

    // nontrivial origin slice: beta = 1 without tracing
    WeightedPolynomial saddle(3, {M{Rational(1), {2, 0, 0}}, M{Rational(-1), {0, 2, 0}},
                                  M{Rational(-1), {0, 0, 2}}});
    auto r4 = horn_exponent(SurfaceGerm::create(saddle, validate_weights({1, 1, 1})));
    CHECK(!r4.origin_slice_trivial);
    REQUIRE(r4.beta.has_value());
    CHECK(*r4.beta == Rational(1));
    CHECK(r4.applicable);

    // empty link
    auto r5 = horn_exponent(SurfaceGerm::create(point_only(), validate_weights({2, 2, 1})));
    CHECK(r5.link_component_count == 0);
    CHECK(!r5.beta.has_value());
}

TEST_CASE("complex_of_surface") {
    auto c1 = complex_of_surface(SurfaceGerm::create(circle_horn(), validate_weights({2, 2, 1})));
    CHECK(c1.vertices().size() == 4);  // two loop-vertex pairs
    REQUIRE(c1.edges().size() == 4);
    for (const auto& e : c1.edges()) CHECK(e.beta == Rational(2));
    CHECK(is_canonical(c1));

    auto c2 = complex_of_surface(SurfaceGerm::create(point_only(), validate_weights({2, 2, 1})));
    CHECK(c2.vertices().empty());
    CHECK(c2.edges().empty());

    WeightedPolynomial saddle(3, {M{Rational(1), {2, 0, 0}}, M{Rational(-1), {0, 2, 0}},
                                  M{Rational(-1), {0, 0, 2}}});
    CHECK_THROWS_WITH_AS(
        complex_of_surface(SurfaceGerm::create(saddle, validate_weights({1, 1, 1}))),
        doctest::Contains("OriginSliceNontrivial"), Error);

    auto c3 = complex_of_surface(SurfaceGerm::create(quartic_horn(), validate_weights({4, 2, 1})));
    CHECK(c3.vertices().size() == 4);
    for (const auto& e : c3.edges()) CHECK(e.beta == Rational(2));
}

TEST_CASE("box sweep finds links beyond the initial box") {
    // x1^2 + x2^2 - 16 x3^4: slice circles of radius 4, entirely outside the
    // default box and not touching its boundary
    WeightedPolynomial far(3, {M{Rational(1), {2, 0, 0}}, M{Rational(1), {0, 2, 0}},
                               M{Rational(-16), {0, 0, 4}}});
    auto r = horn_exponent(SurfaceGerm::create(far, validate_weights({2, 2, 1})));
    CHECK(r.link_component_count == 2);
    REQUIRE(r.beta.has_value());
    CHECK(*r.beta == Rational(2));
    CHECK(r.box_used >= 4.0);

    // product of two horns: link circles at radii 1 and 8 in each slice
    WeightedPolynomial product(
        3, {M{Rational(1), {4, 0, 0}}, M{Rational(2), {2, 2, 0}}, M{Rational(1), {0, 4, 0}},
            M{Rational(-65), {2, 0, 4}}, M{Rational(-65), {0, 2, 4}}, M{Rational(64), {0, 0, 8}}});
    auto rp = horn_exponent(SurfaceGerm::create(product, validate_weights({2, 2, 1})));
    CHECK(rp.link_component_count == 4);
    for (const auto& c : rp.components) {
        REQUIRE(c.beta.has_value());
        CHECK(*c.beta == Rational(2));
    }
}

TEST_CASE("sampling stability: doubling grid or samples keeps exponents") {
    auto s = SurfaceGerm::create(quartic_horn(), validate_weights({4, 2, 1}));
    HornOptions base;
    auto r = horn_exponent(s, base);
    HornOptions denser = base;
    denser.grid = 512;
    auto r2 = horn_exponent(s, denser);
    HornOptions more = base;
    more.samples = 24;
    auto r3 = horn_exponent(s, more);
    REQUIRE(r.beta.has_value());
    REQUIRE(r2.beta.has_value());
    REQUIRE(r3.beta.has_value());
    CHECK(*r.beta == *r2.beta);
    CHECK(*r.beta == *r3.beta);
}
