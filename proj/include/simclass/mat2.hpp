#pragma once

#include <array>
#include <optional>
#include <string>

#include "simclass/exact_rings.hpp"
#include "simclass/linalg.hpp"
#include "simclass/poly_tools.hpp"

namespace simclass {

struct Mat2 {
  std::array<KElem, 4> e;

  KElem& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
  const KElem& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat2(const KElem& a11, const KElem& a12, const KElem& a21, const KElem& a22);
Mat2 mat2_int(const Ring& ring, long a11, long a12, long a21, long a22);
Mat2 m2_identity(const Ring& ring);
Mat2 m2_scalar(const Ring& ring, const KElem& c);
Mat2 m2_add(const Ring& ring, const Mat2& a, const Mat2& b);
Mat2 m2_sub(const Ring& ring, const Mat2& a, const Mat2& b);
Mat2 m2_mul(const Ring& ring, const Mat2& a, const Mat2& b);
Mat2 m2_transpose(const Mat2& a);
KElem m2_det(const Ring& ring, const Mat2& a);
KElem m2_trace(const Ring& ring, const Mat2& a);
std::optional<Mat2> m2_inverse(const Ring& ring, const Mat2& a);
MonicPoly m2_char_poly(const Ring& ring, const Mat2& a);
bool m2_is_integral(const Ring& ring, const Mat2& a);
bool m2_is_scalar(const Ring& ring, const Mat2& a);
// minimum entry valuation
Val m2_content(const Ring& ring, const Mat2& a);
// U*A == B*U with det U a unit
bool m2_is_conjugator(const Ring& ring, const Mat2& u, const Mat2& a, const Mat2& b);
// entrywise residue mod pi^n
Mat2 m2_residue(const Ring& ring, const Mat2& a, long n);
KMat m2_to_kmat(const Mat2& a);
Mat2 kmat_to_m2(const KMat& a);
std::string m2_format(const Ring& ring, const Mat2& a);

}  // namespace simclass
