#include "simclass/poly_tools.hpp"

#include <algorithm>
#include <stdexcept>

#include "simclass/expr_parser.hpp"
#include "simclass/ring_ops.hpp"

namespace simclass {

MonicPoly make_quadratic(const Ring& ring, const KElem& a, const KElem& b) {
  return MonicPoly{{ring.neg(b), ring.neg(a), ring.one()}};
}

KElem quad_a(const Ring& ring, const MonicPoly& f) {
  if (f.degree() != 2) throw Error(ErrorKind::InvalidParams, "expected a quadratic");
  return ring.neg(f.coeffs[1]);
}

KElem quad_b(const Ring& ring, const MonicPoly& f) {
  if (f.degree() != 2) throw Error(ErrorKind::InvalidParams, "expected a quadratic");
  return ring.neg(f.coeffs[0]);
}

MonicPoly to_monic(const Ring& ring, const KPoly& p) {
  KPoly q = poly_trim(ring, p);
  if (q.empty() || !(q.back() == ring.one()))
    throw Error(ErrorKind::InvalidParams, "polynomial is not monic");
  return MonicPoly{q};
}

bool is_over_r(const Ring& ring, const MonicPoly& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [&](const KElem& c) { return ring.is_integral(c); });
}

MonicPoly parse_monic(const Ring& ring, std::string_view s) {
  RingOps ops{ring};
  return to_monic(ring, ExprParser<RingOps>(ops, s, true).parse());
}

std::string format_poly(const Ring& ring, const KPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (ring.is_zero(p[i])) continue;
    std::string cs = ring.format(p[i]);
    bool negative = false;
    std::string mag = cs;
    if (cs[0] == '-' && cs.find_first_of("+ ") == std::string::npos && cs.find('-', 1) == std::string::npos) {
      negative = true;
      mag = cs.substr(1);
    }
    bool compound = mag.find_first_of("+/ -") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = compound ? "(" + mag + ")" : mag;
    } else {
      if (mag != "1") term = (compound ? "(" + mag + ")" : mag) + "*";
      term += "x";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

KPoly poly_trim(const Ring& ring, KPoly p) {
  while (!p.empty() && ring.is_zero(p.back())) p.pop_back();
  return p;
}

KPoly poly_add(const Ring& ring, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = ring.add(r[i], a[i]);
    if (i < b.size()) r[i] = ring.add(r[i], b[i]);
  }
  return poly_trim(ring, std::move(r));
}

KPoly poly_sub(const Ring& ring, const KPoly& a, const KPoly& b) {
  KPoly nb;
  for (const auto& c : b) nb.push_back(ring.neg(c));
  return poly_add(ring, a, nb);
}

KPoly poly_mul(const Ring& ring, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
  return poly_trim(ring, std::move(r));
}

std::pair<KPoly, KPoly> poly_divmod(const Ring& ring, const KPoly& a, const KPoly& b) {
  KPoly bb = poly_trim(ring, b);
  if (bb.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  KPoly r = poly_trim(ring, a);
  if (r.size() < bb.size()) return {{}, r};
  KPoly q(r.size() - bb.size() + 1, ring.zero());
  KElem inv = ring.inv(bb.back());
  while (!r.empty() && r.size() >= bb.size()) {
    std::size_t shift = r.size() - bb.size();
    KElem c = ring.mul(r.back(), inv);
    q[shift] = c;
    KPoly sub(shift, ring.zero());
    for (const auto& x : bb) sub.push_back(ring.mul(x, c));
    r = poly_sub(ring, r, sub);
  }
  return {poly_trim(ring, std::move(q)), r};
}

KPoly poly_gcd(const Ring& ring, KPoly a, KPoly b) {
  a = poly_trim(ring, std::move(a));
  b = poly_trim(ring, std::move(b));
  while (!b.empty()) {
    KPoly r = poly_divmod(ring, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  KElem inv = ring.inv(a.back());
  for (auto& c : a) c = ring.mul(c, inv);
  return a;
}

KElem poly_eval(const Ring& ring, const KPoly& p, const KElem& x) {
  KElem acc = ring.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), p[i]);
  return acc;
}

KPoly derivative(const Ring& ring, const MonicPoly& f) {
  KPoly d;
  for (std::size_t i = 1; i < f.coeffs.size(); ++i)
    d.push_back(ring.mul(ring.from_int(static_cast<long>(i)), f.coeffs[i]));
  return poly_trim(ring, std::move(d));
}

bool is_separable(const Ring& ring, const MonicPoly& f) {
  return poly_gcd(ring, f.coeffs, derivative(ring, f)).size() == 1;
}

KElem disc_quad(const Ring& ring, const MonicPoly& f) {
  if (ring.characteristic() == 2) throw Error(ErrorKind::CharTwo, "a^2/4 + b needs 2 invertible");
  KElem a = quad_a(ring, f);
  KElem half = ring.div(a, ring.from_int(2));
  return ring.add(ring.mul(half, half), quad_b(ring, f));
}

namespace {

// square root in the base field
std::optional<KElem> base_sqrt(const Ring& base, const KElem& x) {
  if (base.is_zero(x)) return x;
  if (base.base_kind() == RingKind::ZLoc) {
    const mpq_class& q = std::get<mpq_class>(x.x());
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t()))
      return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return base.from_base(mpq_class(n, d));
  }
  const FpRational& f = std::get<FpRational>(x.x());
  auto s = (f.num() * f.den()).sqrt();
  if (!s) return std::nullopt;
  return base.from_base(FpRational(*s, f.den()));
}

// solve P^2 + P*Q = N over F_2
std::optional<FpPoly> solve_pq(const FpPoly& n, const FpPoly& q) {
  if (n.is_zero()) return FpPoly(2);
  int bound = std::max((n.degree() + 1) / 2, q.degree());
  std::size_t cols = static_cast<std::size_t>(bound) + 1;
  std::size_t rows = static_cast<std::size_t>(std::max({2 * bound, bound + q.degree(), n.degree()})) + 1;
  // augmented matrix over GF(2)
  std::vector<std::vector<unsigned char>> m(rows, std::vector<unsigned char>(cols + 1, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    FpPoly ti = FpPoly::monomial(2, 1, i);
    FpPoly img = ti * ti + ti * q;
    for (std::size_t r = 0; r < rows; ++r) m[r][i] = static_cast<unsigned char>(img.coeff(r));
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = static_cast<unsigned char>(n.coeff(r));
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && !m[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != row && m[r][c])
        for (std::size_t k = c; k <= cols; ++k) m[r][k] ^= m[row][k];
    pivot_of_col[c] = static_cast<int>(row);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols]) return std::nullopt;
  std::vector<u64> p(cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) p[c] = m[static_cast<std::size_t>(pivot_of_col[c])][cols];
  return FpPoly(2, p);
}

std::optional<KElem> base_artin_schreier(const Ring& base, const KElem& c) {
  const FpRational& f = std::get<FpRational>(c.x());
  auto q = f.den().sqrt();
  if (!q) return std::nullopt;
  auto p = solve_pq(f.num(), *q);
  if (!p) return std::nullopt;
  KElem z = base.from_base(FpRational(*p, *q));
  if (!(base.add(base.mul(z, z), z) == c)) throw std::logic_error("Artin-Schreier solution failed verification");
  return z;
}

// x = alpha^2 + t*beta^2 in F_2(t)
std::pair<KElem, KElem> even_odd_split(const Ring& base, const KElem& x) {
  const FpRational& f = std::get<FpRational>(x.x());
  FpPoly nd = f.num() * f.den();
  std::vector<u64> ev, od;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0, nd.degree())); ++i) {
    if (i % 2 == 0)
      ev.push_back(nd.coeff(i));
    else
      od.push_back(nd.coeff(i));
  }
  return {base.from_base(FpRational(FpPoly(2, ev), f.den())), base.from_base(FpRational(FpPoly(2, od), f.den()))};
}

}  // namespace

std::optional<KElem> sqrt_elem(const Ring& ring, const KElem& x) {
  if (ring.is_zero(x)) return x;
  if (!ring.is_quad_ext()) return base_sqrt(ring, x);
  Ring base = ring.base();
  KElem a = base.from_base(ring.minpoly_a().x());
  KElem b = base.from_base(ring.minpoly_b().x());
  KElem c0 = base.from_base(x.x());
  KElem c1 = base.from_base(x.y());
  std::optional<KElem> result;
  if (ring.characteristic() == 2) {
    if (!base.is_zero(a)) {
      auto y = base_sqrt(base, base.div(c1, a));
      if (!y) return std::nullopt;
      auto xx = base_sqrt(base, base.add(c0, base.mul(b, base.mul(*y, *y))));
      if (!xx) return std::nullopt;
      result = KElem(xx->x(), y->x());
    } else {
      if (!base.is_zero(c1)) return std::nullopt;
      auto [al, be] = even_odd_split(base, c0);
      auto [b0, b1] = even_odd_split(base, b);
      KElem y = base.div(be, b1);
      KElem xx = base.add(al, base.mul(be, base.div(b0, b1)));
      result = KElem(xx.x(), y.x());
    }
  } else {
    KElem two = base.from_int(2);
    KElem delta = base.add(base.mul(a, a), base.mul(base.from_int(4), b));
    KElem t = base.div(c1, two);
    KElem s = base.add(c0, base.mul(a, t));
    KElem xp, yp;
    bool found = false;
    if (base.is_zero(t)) {
      if (auto r = base_sqrt(base, s)) {
        xp = *r;
        yp = base.zero();
        found = true;
      } else if (auto r2 = base_sqrt(base, base.div(s, delta))) {
        xp = base.zero();
        yp = *r2;
        found = true;
      }
    } else {
      auto n = base_sqrt(base, base.sub(base.mul(s, s), base.mul(delta, base.mul(t, t))));
      if (n) {
        for (const KElem& cand : {base.add(s, *n), base.sub(s, *n)}) {
          auto r = base_sqrt(base, base.div(cand, two));
          if (r && !base.is_zero(*r)) {
            xp = *r;
            yp = base.div(t, base.mul(two, *r));
            found = true;
            break;
          }
        }
      }
    }
    if (!found) return std::nullopt;
    result = KElem(base.sub(xp, base.mul(a, yp)).x(), base.mul(two, yp).x());
  }
  if (!(ring.mul(*result, *result) == x)) return std::nullopt;
  return result;
}

std::optional<KElem> solve_artin_schreier(const Ring& ring, const KElem& c) {
  if (ring.characteristic() != 2) throw Error(ErrorKind::InvalidParams, "Artin-Schreier needs characteristic 2");
  if (!ring.is_quad_ext()) return base_artin_schreier(ring, c);
  Ring base = ring.base();
  KElem a = base.from_base(ring.minpoly_a().x());
  KElem b = base.from_base(ring.minpoly_b().x());
  KElem c0 = base.from_base(c.x());
  KElem c1 = base.from_base(c.y());
  std::vector<KElem> ys;
  if (!base.is_zero(a)) {
    auto w = base_artin_schreier(base, base.mul(a, c1));
    if (!w) return std::nullopt;
    ys.push_back(base.div(*w, a));
    ys.push_back(base.div(base.add(*w, base.one()), a));
  } else {
    ys.push_back(c1);
  }
  for (const auto& y : ys) {
    auto xx = base_artin_schreier(base, base.add(c0, base.mul(b, base.mul(y, y))));
    if (!xx) continue;
    KElem z(xx->x(), y.x());
    if (ring.add(ring.mul(z, z), z) == c) return z;
  }
  return std::nullopt;
}

QuadFactorization quad_factor(const Ring& ring, const MonicPoly& f) {
  KElem a = quad_a(ring, f);
  KElem b = quad_b(ring, f);
  std::optional<std::pair<KElem, KElem>> roots;
  if (ring.characteristic() != 2) {
    KElem delta = ring.add(ring.mul(a, a), ring.mul(ring.from_int(4), b));
    if (auto s = sqrt_elem(ring, delta)) {
      KElem two = ring.from_int(2);
      roots = {ring.div(ring.add(a, *s), two), ring.div(ring.sub(a, *s), two)};
    }
  } else if (!ring.is_zero(a)) {
    if (auto z = solve_artin_schreier(ring, ring.div(b, ring.mul(a, a)))) {
      KElem r = ring.mul(a, *z);
      roots = {r, ring.add(r, a)};
    }
  } else if (auto s = sqrt_elem(ring, b)) {
    roots = {*s, *s};
  }
  if (!roots) return {};
  auto [l1, l2] = *roots;
  if (!(ring.add(l1, l2) == a) || !(ring.mul(l1, l2) == ring.neg(b)))
    throw std::logic_error("quadratic roots failed verification");
  Val v1 = ring.val(l1);
  Val v2 = ring.val(l2);
  if (v1 < v2 || (v1 == v2 && l2 < l1)) std::swap(l1, l2);
  return QuadFactorization{true, l1, l2};
}

}  // namespace simclass
