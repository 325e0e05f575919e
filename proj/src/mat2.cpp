#include "simclass/mat2.hpp"

#include <algorithm>

namespace simclass {

Mat2 mat2(const KElem& a11, const KElem& a12, const KElem& a21, const KElem& a22) {
  return Mat2{{a11, a12, a21, a22}};
}

Mat2 mat2_int(const Ring& ring, long a11, long a12, long a21, long a22) {
  return mat2(ring.from_int(a11), ring.from_int(a12), ring.from_int(a21), ring.from_int(a22));
}

Mat2 m2_identity(const Ring& ring) { return m2_scalar(ring, ring.one()); }

Mat2 m2_scalar(const Ring& ring, const KElem& c) { return mat2(c, ring.zero(), ring.zero(), c); }

Mat2 m2_add(const Ring& ring, const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = ring.add(a.e[i], b.e[i]);
  return r;
}

Mat2 m2_sub(const Ring& ring, const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = ring.sub(a.e[i], b.e[i]);
  return r;
}

Mat2 m2_mul(const Ring& ring, const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = ring.add(ring.mul(a(i, 0), b(0, j)), ring.mul(a(i, 1), b(1, j)));
  return r;
}

Mat2 m2_transpose(const Mat2& a) { return mat2(a(0, 0), a(1, 0), a(0, 1), a(1, 1)); }

KElem m2_det(const Ring& ring, const Mat2& a) {
  return ring.sub(ring.mul(a(0, 0), a(1, 1)), ring.mul(a(0, 1), a(1, 0)));
}

KElem m2_trace(const Ring& ring, const Mat2& a) { return ring.add(a(0, 0), a(1, 1)); }

std::optional<Mat2> m2_inverse(const Ring& ring, const Mat2& a) {
  KElem d = m2_det(ring, a);
  if (ring.is_zero(d)) return std::nullopt;
  KElem di = ring.inv(d);
  return mat2(ring.mul(a(1, 1), di), ring.neg(ring.mul(a(0, 1), di)), ring.neg(ring.mul(a(1, 0), di)),
              ring.mul(a(0, 0), di));
}

MonicPoly m2_char_poly(const Ring& ring, const Mat2& a) {
  return make_quadratic(ring, m2_trace(ring, a), ring.neg(m2_det(ring, a)));
}

bool m2_is_integral(const Ring& ring, const Mat2& a) {
  return std::all_of(a.e.begin(), a.e.end(), [&](const KElem& x) { return ring.is_integral(x); });
}

bool m2_is_scalar(const Ring& ring, const Mat2& a) {
  return ring.is_zero(a(0, 1)) && ring.is_zero(a(1, 0)) && a(0, 0) == a(1, 1);
}

Val m2_content(const Ring& ring, const Mat2& a) {
  Val v = Val::inf();
  for (const auto& x : a.e) v = std::min(v, ring.val(x));
  return v;
}

bool m2_is_conjugator(const Ring& ring, const Mat2& u, const Mat2& a, const Mat2& b) {
  if (!m2_is_integral(ring, u)) return false;
  if (!ring.is_unit(m2_det(ring, u))) return false;
  return m2_mul(ring, u, a) == m2_mul(ring, b, u);
}

Mat2 m2_residue(const Ring& ring, const Mat2& a, long n) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = ring.residue(a.e[i], n);
  return r;
}

KMat m2_to_kmat(const Mat2& a) { return KMat{{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}}; }

Mat2 kmat_to_m2(const KMat& a) { return mat2(a[0][0], a[0][1], a[1][0], a[1][1]); }

std::string m2_format(const Ring& ring, const Mat2& a) {
  return "[[" + ring.format(a(0, 0)) + ", " + ring.format(a(0, 1)) + "], [" + ring.format(a(1, 0)) + ", " +
         ring.format(a(1, 1)) + "]]";
}

}  // namespace simclass
