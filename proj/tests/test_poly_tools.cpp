#include <doctest.h>

#include "simclass/poly_tools.hpp"

using namespace simclass;

TEST_SUITE("poly_tools") {
  TEST_CASE("derivative") {
    Ring z2 = Ring::zloc(2);
    CHECK(derivative(z2, parse_monic(z2, "x^2-5")) == KPoly{z2.zero(), z2.from_int(2)});
    Ring f2 = Ring::fptloc(2);
    CHECK(derivative(f2, parse_monic(f2, "x^2-t")).empty());
    CHECK(derivative(f2, parse_monic(f2, "x^2-t*x-t")) == KPoly{f2.parse("t")});
  }

  TEST_CASE("separability") {
    Ring z2 = Ring::zloc(2), f2 = Ring::fptloc(2);
    CHECK(is_separable(z2, parse_monic(z2, "x^2-5")));
    CHECK_FALSE(is_separable(f2, parse_monic(f2, "x^2-t^3")));
    CHECK(is_separable(f2, parse_monic(f2, "x^2-t*x-t")));
  }

  TEST_CASE("discriminant") {
    Ring z2 = Ring::zloc(2), z3 = Ring::zloc(3);
    CHECK(disc_quad(z2, parse_monic(z2, "x^2-5")) == z2.from_int(5));
    CHECK(disc_quad(z3, parse_monic(z3, "x^2-18")) == z3.from_int(18));
    CHECK(disc_quad(z3, parse_monic(z3, "x^2-2*x-3")) == z3.from_int(4));
    Ring f2 = Ring::fptloc(2);
    CHECK_THROWS_AS(disc_quad(f2, parse_monic(f2, "x^2-t")), Error);
  }

  TEST_CASE("factoring") {
    Ring z5 = Ring::zloc(5);
    auto r = quad_factor(z5, parse_monic(z5, "x^2-3*x+2"));
    CHECK(r.reducible);
    CHECK(r.lambda1 == z5.from_int(1));
    CHECK(r.lambda2 == z5.from_int(2));
    Ring z2 = Ring::zloc(2);
    CHECK_FALSE(quad_factor(z2, parse_monic(z2, "x^2-5")).reducible);
    Ring f2 = Ring::fptloc(2);
    CHECK_FALSE(quad_factor(f2, parse_monic(f2, "x^2-t*x-(t^2+t^3)")).reducible);
    auto s = quad_factor(f2, parse_monic(f2, "x^2+(1+t)*x+t"));
    CHECK(s.reducible);
    CHECK(f2.mul(s.lambda1, s.lambda2) == f2.parse("t"));
    // larger valuation first
    Ring z3 = Ring::zloc(3);
    auto q = quad_factor(z3, parse_monic(z3, "x^2-4*x+3"));
    CHECK(q.lambda1 == z3.from_int(3));
  }

  TEST_CASE("square roots") {
    Ring f3 = Ring::fptloc(3);
    auto s = sqrt_elem(f3, f3.parse("(1+t)^2/(1+t^2)^2"));
    REQUIRE(s);
    CHECK(f3.mul(*s, *s) == f3.parse("(1+t)^2/(1+t^2)^2"));
    CHECK_FALSE(sqrt_elem(f3, f3.parse("t")));
    Ring f2 = Ring::fptloc(2);
    auto r = sqrt_elem(f2, f2.parse("t^2/(1+t^4)"));
    REQUIRE(r);
    CHECK(f2.mul(*r, *r) == f2.parse("t^2/(1+t^4)"));
    Ring z2 = Ring::zloc(2);
    CHECK(sqrt_elem(z2, z2.parse("9/4")));
    CHECK_FALSE(sqrt_elem(z2, z2.from_int(5)));
  }

  TEST_CASE("artin-schreier") {
    Ring f2 = Ring::fptloc(2);
    auto z = solve_artin_schreier(f2, f2.parse("t^2+t"));
    REQUIRE(z);
    CHECK(f2.add(f2.mul(*z, *z), *z) == f2.parse("t^2+t"));
    CHECK_FALSE(solve_artin_schreier(f2, f2.parse("1/t")));
    CHECK_FALSE(solve_artin_schreier(f2, f2.parse("1+t")));
  }

  TEST_CASE("parse and format") {
    Ring z2 = Ring::zloc(2);
    MonicPoly f = parse_monic(z2, "x^2 - x - 1");
    CHECK(format_poly(z2, f) == "x^2 - x - 1");
    CHECK(parse_monic(z2, format_poly(z2, f)) == f);
    CHECK_THROWS_AS(parse_monic(z2, "2*x^2"), Error);
    CHECK_THROWS_AS(parse_monic(z2, "x^2 +"), Error);
  }
}
