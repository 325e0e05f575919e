#include <doctest.h>

#include "simclass/dedekind_lattice.hpp"
#include "simclass/error.hpp"

using namespace simclass;

namespace {

LElem lc(mpq_class a, mpq_class b, mpq_class c, mpq_class d) { return lelem_from_coords({a, b, c, d}); }

struct Examples {
  QuadBase base = QuadBase::make(-5);
  RelQuadPoly f28 = parse_rel_poly(base, "x^2-2");
  RelQuadPoly f29 = parse_rel_poly(base, "x^2-x+7");
  // R[theta]2 + R[theta](1 + (w-1)/2 theta)
  LLattice j28 = lattice_from_generators(base, f28, {lc(2, 0, 0, 0), lc(1, 0, mpq_class(-1, 2), mpq_class(1, 2))});
  // R[theta]3 + R[theta](1 + (2-theta)/3 w)
  LLattice j29 = lattice_from_generators(base, f29, {lc(3, 0, 0, 0), lc(1, mpq_class(2, 3), 0, mpq_class(-1, 3))});
};

FracIdealR ideal(const QuadBase& b, std::vector<QuadNum> g) { return ideal_from_gens(b, g); }

}  // namespace

TEST_SUITE("dedekind_lattice") {
  TEST_CASE("base rings") {
    CHECK(QuadBase::make(-5).d == -5);
    CHECK(QuadBase::make(-1).d == -1);
    CHECK_THROWS_AS(QuadBase::make(-3), Error);  // 1 mod 4
    CHECK_THROWS_AS(QuadBase::make(5), Error);
    CHECK_THROWS_AS(QuadBase::make(-4 * 5), Error);
  }

  TEST_CASE("numbers") {
    QuadBase b = QuadBase::make(-5);
    QuadNum x = qn_parse(b, "2+w");
    CHECK(qn_norm(b, x) == 9);
    CHECK(qn_mul(b, x, qn_inv(b, x)) == qn(1));
    CHECK(qn_format(x) == "2+w");
    CHECK(qn_parse(b, qn_format(qn_parse(b, "-1/2-3/4*w"))) == qn_parse(b, "-1/2-3/4*w"));
    CHECK(qn_sqrt(b, qn(-5)) == qn(0, 1));
    CHECK(qn_sqrt(b, qn_mul(b, x, x)));
    CHECK_FALSE(qn_sqrt(b, qn(2)));
    CHECK_THROWS_AS(parse_rel_poly(b, "x^2+5"), Error);  // (x-w)(x+w)
  }

  TEST_CASE("ideal arithmetic") {
    QuadBase b = QuadBase::make(-5);
    FracIdealR p2 = ideal(b, {qn(2), qn(1, 1)});
    CHECK(p2.to_string() == "(2, 1+w)");
    CHECK(ideal_mul(b, p2, p2) == ideal(b, {qn(2)}));
    CHECK(ideal_mul(b, ideal(b, {qn(3), qn(2, 1)}), ideal(b, {qn(3), qn(2, -1)})) == ideal(b, {qn(3)}));
    CHECK(ideal_mul(b, ideal(b, {qn(1)}), p2) == p2);
    CHECK(ideal_norm(p2) == 2);
    CHECK(ideal_mul(b, p2, ideal_inverse(b, p2)) == ideal(b, {qn(1)}));
    CHECK(ideal(b, {qn(3)}).to_string() == "(3)");
    CHECK(ideal_contains(p2, qn(3, 1)));
    CHECK_FALSE(ideal_contains(p2, qn(1)));
  }

  TEST_CASE("principality") {
    QuadBase b = QuadBase::make(-5);
    CHECK(is_principal(b, ideal(b, {qn(2)})) == qn(2));
    CHECK_FALSE(is_principal(b, ideal(b, {qn(2), qn(1, 1)})));
    CHECK_FALSE(is_principal(b, ideal(b, {qn(3), qn(2, 1)})));
    auto g = is_principal(b, ideal(b, {qn(1, 2)}));
    REQUIRE(g);
    CHECK(ideal(b, {*g}) == ideal(b, {qn(1, 2)}));
    CHECK(is_principal(b, ideal(b, {QuadNum{mpq_class(1, 3), 0}})) == QuadNum{mpq_class(1, 3), 0});
  }

  TEST_CASE("full ring") {
    QuadBase b = QuadBase::make(-5);
    RelQuadPoly f = parse_rel_poly(b, "x^2-2");
    LLattice j = lattice_from_generators(b, f, {lc(1, 0, 0, 0)});
    CHECK(intersect_base(j) == ideal(b, {qn(1)}));
    CHECK(coefficient_ideal(j, lc(0, 0, 1, 0)) == ideal(b, {qn(1)}));
    CHECK(steinitz(j, lc(0, 0, 1, 0)) == ideal(b, {qn(1)}));
    FreeResult r = is_free(j);
    REQUIRE(r.free);
    CHECK(r.basis == std::vector<LElem>{lc(1, 0, 0, 0), lc(0, 0, 1, 0)});
    RMat2 a = mult_matrix(j, r.basis);
    CHECK(a == RMat2{qn(0), qn(1), qn(2), qn(0)});
    CHECK_THROWS_AS(coefficient_ideal(j, lc(1, 1, 0, 0)), Error);
    CHECK_THROWS_AS(lattice_from_generators(b, f, {}), Error);
  }

  TEST_CASE("first worked lattice over Z[sqrt(-5)]") {
    Examples ex;
    const QuadBase& b = ex.base;
    // the generator list expands to this R-basis
    LLattice expanded = lattice_r_span(b, ex.f28, {lc(2, 0, 0, 0), lc(0, 0, 2, 0), lc(1, 0, mpq_class(-1, 2), mpq_class(1, 2)), lc(-1, 1, 1, 0)});
    CHECK(expanded == ex.j28);
    LElem x0 = lc(0, 0, mpq_class(1, 2), 0);
    CHECK(auto_x0(ex.j28) == x0);
    CHECK(coefficient_ideal(ex.j28, x0) == ideal(b, {qn(2), qn(1, 1)}));
    // exact intersection with K is 2R: 1+w is not in J
    CHECK(intersect_base(ex.j28) == ideal(b, {qn(2)}));
    CHECK(lattice_contains(ex.j28, lc(2, 0, 0, 0)));
    CHECK_FALSE(lattice_contains(ex.j28, lc(1, 1, 0, 0)));
    FracIdealR st = steinitz(ex.j28, x0);
    CHECK(st == ideal(b, {qn(4), qn(2, 2)}));
    CHECK_FALSE(is_principal(b, st));
    CHECK_FALSE(is_free(ex.j28).free);
    CHECK_THROWS_AS(mult_matrix(ex.j28, {}), Error);
  }

  TEST_CASE("second worked lattice over Z[sqrt(-5)]") {
    Examples ex;
    const QuadBase& b = ex.base;
    LLattice expanded = lattice_r_span(
        b, ex.f29,
        {lc(3, 0, 0, 0), lc(0, 0, 3, 0), lc(1, mpq_class(2, 3), 0, mpq_class(-1, 3)), lc(0, mpq_class(7, 3), 1, mpq_class(1, 3))});
    CHECK(expanded == ex.j29);
    LElem x0 = lc(0, 0, mpq_class(1, 3), 0);
    CHECK(auto_x0(ex.j29) == x0);
    CHECK(coefficient_ideal(ex.j29, x0) == ideal(b, {qn(1)}));
    CHECK(intersect_base(ex.j29) == ideal(b, {qn(3)}));
    CHECK_FALSE(lattice_contains(ex.j29, lc(2, 1, 0, 0)));
    FreeResult r = is_free(ex.j29);
    REQUIRE(r.free);
    CHECK(r.steinitz == ideal(b, {qn(3)}));
    CHECK(lattice_r_span(b, ex.f29, r.basis) == ex.j29);
    RMat2 a = mult_matrix(ex.j29, r.basis);
    CHECK(qn_add(a[0], a[3]) == qn(1));
    CHECK(rmat_det(b, a) == qn(7));
  }

  TEST_CASE("steinitz class does not depend on x0") {
    Examples ex;
    const QuadBase& b = ex.base;
    std::vector<LElem> choices{lc(0, 0, mpq_class(1, 2), 0), lc(0, 0, 1, 0), lc(1, 0, 1, 0), lc(0, 0, 0, 1)};
    std::vector<FracIdealR> st;
    for (const auto& x0 : choices) st.push_back(steinitz(ex.j28, x0));
    for (std::size_t i = 0; i < st.size(); ++i)
      for (std::size_t k = 0; k < st.size(); ++k) {
        CHECK(is_principal(b, st[i]).has_value() == is_principal(b, st[k]).has_value());
        CHECK(is_principal(b, ideal_mul(b, st[i], ideal_inverse(b, st[k]))));
      }
  }

  TEST_CASE("gaussian witness") {
    QuadBase g = QuadBase::make(-1);
    RMat2 u{qn(0, 2), qn(1), qn(-3), qn(0, 1)};
    RMat2 a{qn(0), qn(1), qn(-6), qn(0)};
    RMat2 bm{qn(0), qn(2), qn(-3), qn(0)};
    CHECK(rmat_det(g, u) == qn(1));
    CHECK(rmat_is_conjugator(g, u, a, bm));
    CHECK_FALSE(rmat_is_conjugator(g, u, bm, a));
  }
}
