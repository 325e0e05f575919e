#include <doctest.h>

#include "simclass/lm_correspondence.hpp"
#include "simclass/quad_classify.hpp"

using namespace simclass;

namespace {

KMat zmat(const Ring& q, std::initializer_list<std::initializer_list<long>> rows) {
  KMat m;
  for (auto r : rows) {
    KVec v;
    for (long x : r) v.push_back(q.from_int(x));
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST_SUITE("lm_correspondence") {
  const Coefficients zz = Coefficients::integers();
  const Ring& q = zz.field();

  TEST_CASE("companion") {
    CHECK(companion(zz, parse_monic(q, "x^2+6")) == zmat(q, {{0, -6}, {1, 0}}));
    CHECK(companion(zz, parse_monic(q, "x^2-5")) == zmat(q, {{0, 5}, {1, 0}}));
    CHECK(companion(zz, parse_monic(q, "x^3-1")) == zmat(q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  }

  TEST_CASE("matrix to ideal") {
    MonicPoly f = parse_monic(q, "x^2+6");
    KMat a = zmat(q, {{0, 1}, {-6, 0}}), b = zmat(q, {{0, 2}, {-3, 0}});
    IdealBasis ja = matrix_to_ideal(zz, f, a);
    CHECK(ja.basis == zmat(q, {{1, 0}, {0, 1}}));
    IdealBasis jb = matrix_to_ideal(zz, f, b);
    CHECK(jb.basis == zmat(q, {{2, 0}, {0, 1}}));
    CHECK(check_theta_identity(jb, b));
    // the companion of x^2-5 lands on theta*(1, theta), principal
    MonicPoly g = parse_monic(q, "x^2-5");
    IdealBasis jc = matrix_to_ideal(zz, g, companion(zz, g));
    CHECK(jc.basis == zmat(q, {{5, 0}, {0, 1}}));
    CHECK(reduce_form(ideal_to_form(matrix_to_ideal(zz, f, a))) == BQForm{1, 0, 6});
    CHECK_THROWS_AS(matrix_to_ideal(zz, f, zmat(q, {{0, 1}, {6, 0}})), Error);
    MonicPoly sq = parse_monic(q, "x^2");
    CHECK_THROWS_AS(matrix_to_ideal(zz, sq, zmat(q, {{0, 1}, {0, 0}})), Error);
  }

  TEST_CASE("ideal to matrix") {
    MonicPoly f = parse_monic(q, "x^2+6");
    CHECK(ideal_to_matrix(IdealBasis{zz, f, zmat(q, {{2, 0}, {0, 1}}), q.one()}) == zmat(q, {{0, 2}, {-3, 0}}));
    CHECK(ideal_to_matrix(IdealBasis{zz, f, zmat(q, {{1, 0}, {0, 1}}), q.one()}) == zmat(q, {{0, 1}, {-6, 0}}));
    CHECK_THROWS_AS(ideal_to_matrix(IdealBasis{zz, f, zmat(q, {{5, 0}, {0, 1}}), q.one()}), Error);
  }

  TEST_CASE("non-zero-divisors") {
    MonicPoly f = parse_monic(q, "x^2+6");
    CHECK(is_non_zero_divisor(zz, f, {q.from_int(2), q.zero()}));
    CHECK_FALSE(is_non_zero_divisor(zz, f, {q.zero(), q.zero()}));
    CHECK(is_non_zero_divisor(zz, f, {q.zero(), q.one()}));
    MonicPoly g = parse_monic(q, "x^2-1");
    CHECK_FALSE(is_non_zero_divisor(zz, g, {q.one(), q.one()}));
  }

  TEST_CASE("forms") {
    MonicPoly f = parse_monic(q, "x^2+6");
    CHECK(ideal_to_form(IdealBasis{zz, f, zmat(q, {{1, 0}, {0, 1}}), q.one()}) == BQForm{1, 0, 6});
    CHECK(ideal_to_form(IdealBasis{zz, f, zmat(q, {{2, 0}, {0, 1}}), q.one()}) == BQForm{2, 0, 3});
    MonicPoly g = parse_monic(q, "x^2+1");
    CHECK(ideal_to_form(IdealBasis{zz, g, zmat(q, {{1, 0}, {0, 1}}), q.one()}) == BQForm{1, 0, 1});
    MonicPoly r = parse_monic(q, "x^2-5");
    CHECK_THROWS_AS(ideal_to_form(IdealBasis{zz, r, zmat(q, {{1, 0}, {0, 1}}), q.one()}), Error);
  }

  TEST_CASE("reduction") {
    CHECK(reduce_form(BQForm{2, 0, 3}) == BQForm{2, 0, 3});
    CHECK(reduce_form(BQForm{1, 0, 6}) == BQForm{1, 0, 6});
    CHECK(reduce_form(BQForm{5, 6, 3}) == BQForm{2, 0, 3});
    CHECK(reduce_form(BQForm{7, 2, 1}) == BQForm{1, 0, 6});
    // the reduced forms of discriminant -24, by brute force
    int count = 0;
    for (long a = 1; a * a * 3 <= 24; ++a)
      for (long b = -a + 1; b <= a; ++b) {
        if ((b * b + 24) % (4 * a)) continue;
        long c = (b * b + 24) / (4 * a);
        if (c < a || (c == a && b < 0)) continue;
        ++count;
        CHECK(reduce_form(BQForm{a, b, c}) == BQForm{a, b, c});
      }
    CHECK(count == 2);
    CHECK_THROWS_AS(reduce_form(BQForm{1, 0, -1}), Error);
  }

  TEST_CASE("equivalence") {
    MonicPoly f = parse_monic(q, "x^2+6");
    IdealBasis one{zz, f, zmat(q, {{1, 0}, {0, 1}}), q.one()};
    IdealBasis two{zz, f, zmat(q, {{2, 0}, {0, 1}}), q.one()};
    CHECK_FALSE(equivalent(one, two));
    IdealBasis scaled = scale_ideal(two, {q.zero(), q.one()});
    CHECK(scaled.basis == zmat(q, {{0, 2}, {-6, 0}}));
    CHECK(equivalent(two, scaled));

    Ring z2 = Ring::zloc(2);
    Coefficients d2 = Coefficients::dvr(z2);
    MonicPoly g = parse_monic(z2, "x^2-5");
    auto reps = ideal_reps(z2, g);
    CHECK_FALSE(equivalent(reps[0], reps[1]));
    CHECK(equivalent(reps[1], scale_ideal(reps[1], {z2.from_int(3), z2.one()})));
  }
}
