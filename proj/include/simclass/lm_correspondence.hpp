#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "simclass/exact_rings.hpp"
#include "simclass/linalg.hpp"
#include "simclass/poly_tools.hpp"

namespace simclass {

// The coefficient ring of a matrix: Z, or one of the DVR instances.
class Coefficients {
 public:
  static Coefficients integers();
  static Coefficients dvr(const Ring& ring);

  bool is_integers() const { return integers_; }
  // arithmetic of the fraction field (Q for the integers)
  const Ring& field() const { return field_; }
  bool is_integral(const KElem& x) const;
  // nonzero d in R with d*x integral for every x
  KElem clearing_factor(const std::vector<KElem>& xs) const;
  std::string describe() const;

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.integers_ == b.integers_ && a.field_ == b.field_;
  }

 private:
  Coefficients(bool integers, Ring field) : integers_(integers), field_(std::move(field)) {}
  bool integers_;
  Ring field_;
};

// R-span of n elements of K[theta], each a coordinate vector in (1, theta, ..)
struct IdealBasis {
  Coefficients coeffs;
  MonicPoly f;
  std::vector<KVec> basis;
  KElem scale;  // factor used to clear denominators
};

struct BQForm {
  mpz_class a, b, c;  // a x^2 + b xy + c y^2

  mpz_class disc() const { return b * b - 4 * a * c; }
  std::string to_string() const;
  friend bool operator==(const BQForm& x, const BQForm& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

KMat companion(const Coefficients& coeffs, const MonicPoly& f);
// product in K[x]/(f) on coordinate vectors
KVec mul_mod_f(const Ring& ring, const MonicPoly& f, const KVec& u, const KVec& v);
KVec theta_times(const Ring& ring, const MonicPoly& f, const KVec& u);

// theta * X_i = sum_j A_ij X_j
IdealBasis matrix_to_ideal(const Coefficients& coeffs, const MonicPoly& f, const KMat& a);
KMat ideal_to_matrix(const IdealBasis& j);
bool check_theta_identity(const IdealBasis& j, const KMat& a);
bool is_non_zero_divisor(const Coefficients& coeffs, const MonicPoly& f, const KVec& alpha);
IdealBasis scale_ideal(const IdealBasis& j, const KVec& alpha);

BQForm ideal_to_form(const IdealBasis& j);
BQForm reduce_form(const BQForm& form);
bool equivalent(const IdealBasis& j1, const IdealBasis& j2);

}  // namespace simclass
