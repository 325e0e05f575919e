#include "simclass/linalg.hpp"

namespace simclass {

KMat kmat_identity(const Ring& ring, std::size_t n) {
  KMat m(n, KVec(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring.one();
  return m;
}

KMat kmat_mul(const Ring& ring, const KMat& a, const KMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  KMat r(n, KVec(m, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (ring.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = ring.add(r[i][j], ring.mul(a[i][l], b[l][j]));
    }
  return r;
}

KVec kvec_mat(const Ring& ring, const KVec& v, const KMat& m) {
  return kmat_mul(ring, KMat{v}, m)[0];
}

KElem kmat_det(const Ring& ring, KMat a) {
  std::size_t n = a.size();
  KElem det = ring.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && ring.is_zero(a[piv][c])) ++piv;
    if (piv == n) return ring.zero();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = ring.neg(det);
    }
    det = ring.mul(det, a[c][c]);
    KElem inv = ring.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (ring.is_zero(a[r][c])) continue;
      KElem f = ring.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = ring.sub(a[r][k], ring.mul(f, a[c][k]));
    }
  }
  return det;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(const Ring& ring, KMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && ring.is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    KElem inv = ring.inv(a[row][c]);
    for (auto& x : a[row]) x = ring.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || ring.is_zero(a[r][c])) continue;
      KElem f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ring.sub(a[r][k], ring.mul(f, a[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t kmat_rank(const Ring& ring, KMat a) { return rref(ring, a).size(); }

std::optional<KMat> kmat_inverse(const Ring& ring, const KMat& a) {
  std::size_t n = a.size();
  KMat aug(n, KVec(2 * n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = ring.one();
  }
  auto piv = rref(ring, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  KMat inv(n, KVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<KVec> kmat_kernel(const Ring& ring, const KMat& m) {
  KMat a = m;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto piv = rref(ring, a);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<KVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    KVec v(cols, ring.zero());
    v[f] = ring.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = ring.neg(a[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

MonicPoly kmat_char_poly(const Ring& ring, const KMat& a) {
  std::size_t n = a.size();
  KMat h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && ring.is_zero(h[piv][j])) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    KElem inv = ring.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (ring.is_zero(h[k][j])) continue;
      KElem u = ring.mul(h[k][j], inv);
      for (std::size_t c = 0; c < n; ++c) h[k][c] = ring.sub(h[k][c], ring.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = ring.add(h[r][j + 1], ring.mul(u, h[r][k]));
    }
  }
  // p[m] = char poly of the leading m x m block
  std::vector<KPoly> p(n + 1);
  p[0] = {ring.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    KPoly lin{ring.neg(h[m - 1][m - 1]), ring.one()};
    KPoly acc = poly_mul(ring, lin, p[m - 1]);
    KElem prod = ring.one();
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = ring.mul(prod, h[i + 1][i]);
      KElem coef = ring.mul(h[i][m - 1], prod);
      if (ring.is_zero(coef)) continue;
      KPoly term;
      for (const auto& c : p[i]) term.push_back(ring.mul(c, coef));
      acc = poly_sub(ring, acc, term);
    }
    p[m] = acc;
  }
  return MonicPoly{p[n]};
}

bool kmat_is_integral(const Ring& ring, const KMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!ring.is_integral(x)) return false;
  return true;
}

}  // namespace simclass
