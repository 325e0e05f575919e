#include "simclass/int_lattice.hpp"

#include <stdexcept>

namespace simclass {

namespace {

void combine(ZVec& r, ZVec& s, const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  // (r, s) <- (a r + b s, c r + d s)
  for (std::size_t k = 0; k < r.size(); ++k) {
    mpz_class nr = a * r[k] + b * s[k];
    mpz_class ns = c * r[k] + d * s[k];
    r[k] = nr;
    s[k] = ns;
  }
}

void axpy(ZVec& r, const mpz_class& q, const ZVec& s) {
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= q * s[k];
}

}  // namespace

HnfResult hnf_with_transform(const ZMat& rows) {
  std::size_t m = rows.size();
  std::size_t n = m ? rows[0].size() : 0;
  ZMat h = rows;
  ZMat t(m, ZVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) t[i][i] = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h[i][col] == 0) continue;
      mpz_class g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), h[r][col].get_mpz_t(), h[i][col].get_mpz_t());
      mpz_class a = h[r][col] / g, b = h[i][col] / g;
      combine(h[r], h[i], s, u, -b, a);
      combine(t[r], t[i], s, u, -b, a);
    }
    if (h[r][col] == 0) continue;
    if (h[r][col] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : t[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[r][col].get_mpz_t());
      if (q == 0) continue;
      axpy(h[i], q, h[r]);
      axpy(t[i], q, t[r]);
    }
    ++r;
  }
  return HnfResult{std::move(h), std::move(t), r};
}

ZMat hnf_rows(const ZMat& rows) {
  HnfResult res = hnf_with_transform(rows);
  res.h.resize(res.rank);
  return res.h;
}

std::optional<ZVec> solve_integer(const ZMat& rows, const ZVec& target) {
  HnfResult res = hnf_with_transform(rows);
  ZVec rest = target;
  ZVec x(rows.size(), 0);
  std::size_t col = 0;
  for (std::size_t i = 0; i < res.rank; ++i) {
    while (res.h[i][col] == 0) ++col;
    if (!mpz_divisible_p(rest[col].get_mpz_t(), res.h[i][col].get_mpz_t())) return std::nullopt;
    mpz_class q = rest[col] / res.h[i][col];
    axpy(rest, q, res.h[i]);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += q * res.t[i][k];
  }
  for (const auto& v : rest)
    if (v != 0) return std::nullopt;
  return x;
}

}  // namespace simclass
