#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simclass/int_lattice.hpp"

namespace simclass {

// R = Z[w], w^2 = d, d < 0 squarefree with d = 2,3 mod 4
struct QuadBase {
  long d;
  static QuadBase make(long d);
  std::string describe() const;
  friend bool operator==(const QuadBase&, const QuadBase&) = default;
};

// x + y*w in K
struct QuadNum {
  mpq_class x, y;
  friend bool operator==(const QuadNum& a, const QuadNum& b) { return a.x == b.x && a.y == b.y; }
};

QuadNum qn(long x, long y = 0);
QuadNum qn_add(const QuadNum& a, const QuadNum& b);
QuadNum qn_sub(const QuadNum& a, const QuadNum& b);
QuadNum qn_neg(const QuadNum& a);
QuadNum qn_mul(const QuadBase& base, const QuadNum& a, const QuadNum& b);
QuadNum qn_inv(const QuadBase& base, const QuadNum& a);
QuadNum qn_div(const QuadBase& base, const QuadNum& a, const QuadNum& b);
QuadNum qn_conj(const QuadNum& a);
mpq_class qn_norm(const QuadBase& base, const QuadNum& a);
bool qn_is_zero(const QuadNum& a);
bool qn_is_integral(const QuadNum& a);
std::string qn_format(const QuadNum& a);
QuadNum qn_parse(const QuadBase& base, std::string_view s);
std::optional<QuadNum> qn_sqrt(const QuadBase& base, const QuadNum& a);

// x^2 + c1 x + c0 over R
struct RelQuadPoly {
  QuadNum c1, c0;
  friend bool operator==(const RelQuadPoly&, const RelQuadPoly&) = default;
};
RelQuadPoly parse_rel_poly(const QuadBase& base, std::string_view s);
std::string format_rel_poly(const RelQuadPoly& f);

// alpha + beta*theta in L = K[theta]
struct LElem {
  QuadNum alpha, beta;
  friend bool operator==(const LElem&, const LElem&) = default;
};
// coordinates over (1, w, theta, w*theta)
LElem lelem_from_coords(const std::array<mpq_class, 4>& c);
std::array<mpq_class, 4> lelem_coords(const LElem& e);
LElem l_mul(const QuadBase& base, const RelQuadPoly& f, const LElem& a, const LElem& b);
std::string lelem_format(const LElem& e);

// Z-lattice a*Z + (b + c*w)*Z, all over den; a, c > 0, 0 <= b < a
struct FracIdealR {
  mpz_class a, b, c, den;
  // "(a, b+c*w)", or "(a)" when the ideal is a*R
  std::string to_string() const;
  friend bool operator==(const FracIdealR& p, const FracIdealR& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.den == q.den;
  }
};

// fractional ideal generated over R by gens
FracIdealR ideal_from_gens(const QuadBase& base, const std::vector<QuadNum>& gens);
std::array<QuadNum, 2> ideal_zbasis(const FracIdealR& i);
bool ideal_is_r_module(const QuadBase& base, const FracIdealR& i);
FracIdealR ideal_mul(const QuadBase& base, const FracIdealR& i1, const FracIdealR& i2);
FracIdealR ideal_conj(const QuadBase& base, const FracIdealR& i);
mpq_class ideal_norm(const FracIdealR& i);
FracIdealR ideal_inverse(const QuadBase& base, const FracIdealR& i);
bool ideal_contains(const FracIdealR& i, const QuadNum& x);
// a generator when the ideal is principal
std::optional<QuadNum> is_principal(const QuadBase& base, const FracIdealR& i);

// Z-lattice of rank 4 in L; rows of hnf over den, columns ordered (theta, w*theta, 1, w)
struct LLattice {
  QuadBase base;
  RelQuadPoly f;
  ZMat hnf;
  mpz_class den;
  friend bool operator==(const LLattice& p, const LLattice& q) {
    return p.base == q.base && p.f == q.f && p.hnf == q.hnf && p.den == q.den;
  }
};

// R[theta]-span of gens
LLattice lattice_from_generators(const QuadBase& base, const RelQuadPoly& f, const std::vector<LElem>& gens);
// R-span of gens (rank may be below 4)
LLattice lattice_r_span(const QuadBase& base, const RelQuadPoly& f, const std::vector<LElem>& gens);
std::vector<LElem> lattice_zbasis(const LLattice& j);
bool lattice_contains(const LLattice& j, const LElem& x);

FracIdealR intersect_base(const LLattice& j);
// an x0 whose theta coefficient generates the projection's leading pivot
LElem auto_x0(const LLattice& j);
FracIdealR coefficient_ideal(const LLattice& j, const LElem& x0);
FracIdealR steinitz(const LLattice& j, const LElem& x0);

struct FreeResult {
  bool free = false;
  std::vector<LElem> basis;  // two elements when free
  LElem x0;
  FracIdealR coefficient, intersection, steinitz;
  std::optional<QuadNum> generator;
};
FreeResult is_free(const LLattice& j);

using RMat2 = std::array<QuadNum, 4>;  // row-major
std::string rmat_format(const RMat2& m);
// theta * b_i = sum_j A_ij b_j
RMat2 mult_matrix(const LLattice& j, const std::vector<LElem>& basis);
RMat2 rmat_mul(const QuadBase& base, const RMat2& a, const RMat2& b);
QuadNum rmat_det(const QuadBase& base, const RMat2& m);
bool rmat_is_unit(const QuadBase& base, const QuadNum& x);
// U*A = B*U, entries of U in R, det U a unit of R
bool rmat_is_conjugator(const QuadBase& base, const RMat2& u, const RMat2& a, const RMat2& b);

}  // namespace simclass
