// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "whgeo/parse.hpp"

using namespace whgeo;

TEST_CASE("parse_polynomial spec examples") {
    auto f = parse_polynomial("x1^2 + x2^2 - x3^4");
    CHECK(f.monomials().size() == 3);

    auto g = parse_polynomial("x^2 - y*z");
    REQUIRE(g.monomials().size() == 2);
    CHECK(g.monomials()[0].exps == std::vector<long long>{0, 1, 1});
    CHECK(g.monomials()[0].coeff == Rational(-1));
    CHECK(g.monomials()[1].exps == std::vector<long long>{2, 0, 0});
    CHECK(g.monomials()[1].coeff == Rational(1));

    CHECK_THROWS_WITH_AS(parse_polynomial("x1^2 +"), doctest::Contains("offset 7"), Error);
    CHECK_THROWS_WITH_AS(parse_polynomial("x4 + x1"), doctest::Contains("UnknownVariable"),
                         Error);
}

TEST_CASE("parse_polynomial coefficients and structure") {
    auto f = parse_polynomial("3/2*x1^2*x2 - 2*x3");
    REQUIRE(f.monomials().size() == 2);
    CHECK(f.monomials()[0].coeff == Rational(-2));
    CHECK(f.monomials()[0].exps == std::vector<long long>{0, 0, 1});
    CHECK(f.monomials()[1].coeff == Rational(3, 2));
    CHECK(f.monomials()[1].exps == std::vector<long long>{2, 1, 0});

    // like terms combine; cancellation removes the monomial
    CHECK(parse_polynomial("x1 - x1 + x2").monomials().size() == 1);
    // implicit multiplication is forbidden
    CHECK_THROWS_AS(parse_polynomial("2x1"), Error);
    CHECK_THROWS_AS(parse_polynomial(""), Error);
    // leading minus is fine
    CHECK(parse_polynomial("-x1^2").monomials()[0].coeff == Rational(-1));
}

TEST_CASE("parse_arc spec examples") {
    auto a = parse_arc("t + 2*t^2; t^3/2");
    REQUIRE(a.dimension() == 2);
    REQUIRE(a.coords()[0].terms.size() == 2);
    CHECK(a.coords()[0].terms[0].exp == Rational(1));
    CHECK(a.coords()[0].terms[1].coeff == Rational(2));
    REQUIRE(a.coords()[1].terms.size() == 1);
    CHECK(a.coords()[1].terms[0].exp == Rational(3, 2));  // t^3/2 binds to the exponent

    auto b = parse_arc("0; t");
    CHECK(b.coords()[0].terms.empty());
    CHECK(b.coords()[1].terms.size() == 1);

    CHECK_THROWS_WITH_AS(parse_arc("t^0; t"), doctest::Contains("NonPositiveExponent"), Error);
}

TEST_CASE("parse_arc resorts and merges terms") {
    auto a = parse_arc("2*t^3 + t - t^3");
    REQUIRE(a.coords()[0].terms.size() == 2);
    CHECK(a.coords()[0].terms[0].exp == Rational(1));
    CHECK(a.coords()[0].terms[1].exp == Rational(3));
    CHECK(a.coords()[0].terms[1].coeff == Rational(1));

    CHECK_THROWS_AS(parse_arc("t +"), Error);
    CHECK_THROWS_AS(parse_arc("2t"), Error);
    CHECK_THROWS_AS(parse_arc("0; 0"), Error);  // no nonzero coordinate
    // negative fractional coefficient
    auto c = parse_arc("-1/2*t^5/3; t");
    CHECK(c.coords()[0].terms[0].coeff == Rational(-1, 2));
    CHECK(c.coords()[0].terms[0].exp == Rational(5, 3));
}

TEST_CASE("parse lists and points") {
    CHECK(parse_integer_list("3,2,1") == std::vector<long long>{3, 2, 1});
    CHECK(parse_integer_list("-1") == std::vector<long long>{-1});
    auto p = parse_point("1,1/2,-3");
    REQUIRE(p.size() == 3);
    CHECK(p[1] == Rational(1, 2));
    CHECK(p[2] == Rational(-3));
    CHECK_THROWS_AS(parse_integer_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_point(""), Error);
}
