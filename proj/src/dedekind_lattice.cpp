#include "simclass/dedekind_lattice.hpp"

#include <numeric>
#include <stdexcept>

#include "simclass/error.hpp"
#include "simclass/expr_parser.hpp"

namespace simclass {

namespace {

struct QuadOps {
  const QuadBase& base;
  QuadNum zero() const { return qn(0); }
  QuadNum one() const { return qn(1); }
  QuadNum from_integer(const mpz_class& n) const { return QuadNum{mpq_class(n), 0}; }
  QuadNum add(const QuadNum& a, const QuadNum& b) const { return qn_add(a, b); }
  QuadNum sub(const QuadNum& a, const QuadNum& b) const { return qn_sub(a, b); }
  QuadNum mul(const QuadNum& a, const QuadNum& b) const { return qn_mul(base, a, b); }
  QuadNum div(const QuadNum& a, const QuadNum& b) const { return qn_div(base, a, b); }
  QuadNum neg(const QuadNum& a) const { return qn_neg(a); }
  std::optional<QuadNum> symbol(std::string_view s) const {
    if (s == "w") return qn(0, 1);
    return std::nullopt;
  }
};

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

mpz_class lcm_dens(const std::vector<mpq_class>& xs) {
  mpz_class l = 1;
  for (const auto& x : xs) l = lcm(l, mpz_class(x.get_den()));
  return l;
}

QuadNum scale(const QuadNum& a, const mpq_class& s) { return QuadNum{a.x * s, a.y * s}; }

// internal column order (theta, w*theta, 1, w)
using Internal = std::array<mpq_class, 4>;
Internal to_internal(const LElem& e) { return {e.beta.x, e.beta.y, e.alpha.x, e.alpha.y}; }
LElem from_internal(const ZVec& row, const mpz_class& den) {
  return LElem{QuadNum{mpq_class(row[2], den), mpq_class(row[3], den)},
               QuadNum{mpq_class(row[0], den), mpq_class(row[1], den)}};
}

LLattice make_lattice(const QuadBase& base, const RelQuadPoly& f, const std::vector<LElem>& elems) {
  std::vector<mpq_class> all;
  for (const auto& e : elems)
    for (const auto& c : to_internal(e)) all.push_back(c);
  mpz_class den = lcm_dens(all);
  ZMat rows;
  for (const auto& e : elems) {
    ZVec r;
    for (const auto& c : to_internal(e)) r.push_back(mpq_class(c * den).get_num());
    rows.push_back(r);
  }
  ZMat h = hnf_rows(rows);
  mpz_class g = den;
  for (const auto& r : h)
    for (const auto& x : r) g = gcd(g, x);
  for (auto& r : h)
    for (auto& x : r) x /= g;
  return LLattice{base, f, h, den / g};
}

LElem w_elem() { return LElem{qn(0, 1), qn(0)}; }
LElem theta_elem() { return LElem{qn(0), qn(1)}; }
LElem from_k(const QuadNum& k) { return LElem{k, qn(0)}; }

FracIdealR projection(const LLattice& j) {
  return ideal_from_gens(j.base, {from_internal(j.hnf[0], j.den).beta, from_internal(j.hnf[1], j.den).beta});
}

void require_full(const LLattice& j) {
  if (j.hnf.size() != 4) throw Error(ErrorKind::NotFullRank, "lattice does not have rank 4");
}

// integer solution of sum x_i v_i = target over K
std::optional<ZVec> solve_in_k(const std::vector<QuadNum>& v, const QuadNum& target) {
  std::vector<mpq_class> all{target.x, target.y};
  for (const auto& e : v) {
    all.push_back(e.x);
    all.push_back(e.y);
  }
  mpz_class d = lcm_dens(all);
  ZMat rows;
  for (const auto& e : v) rows.push_back({mpq_class(e.x * d).get_num(), mpq_class(e.y * d).get_num()});
  return solve_integer(rows, {mpq_class(target.x * d).get_num(), mpq_class(target.y * d).get_num()});
}

QuadNum combo(const QuadNum& a, const mpz_class& m, const QuadNum& b, const mpz_class& n) {
  return qn_add(scale(a, mpq_class(m)), scale(b, mpq_class(n)));
}

}  // namespace

QuadBase QuadBase::make(long d) {
  if (d >= 0) throw Error(ErrorKind::NotImaginaryQuadratic, "d must be negative");
  long r = ((d % 4) + 4) % 4;
  if (r != 2 && r != 3) throw Error(ErrorKind::UnsupportedRing, "only d = 2, 3 mod 4 is supported");
  for (long k = 2; k * k <= -d; ++k)
    if ((-d) % (k * k) == 0) throw Error(ErrorKind::InvalidParams, "d must be squarefree");
  return QuadBase{d};
}

std::string QuadBase::describe() const { return "Z[sqrt(" + std::to_string(d) + ")]"; }

QuadNum qn(long x, long y) { return QuadNum{mpq_class(x), mpq_class(y)}; }
QuadNum qn_add(const QuadNum& a, const QuadNum& b) { return QuadNum{a.x + b.x, a.y + b.y}; }
QuadNum qn_sub(const QuadNum& a, const QuadNum& b) { return QuadNum{a.x - b.x, a.y - b.y}; }
QuadNum qn_neg(const QuadNum& a) { return QuadNum{-a.x, -a.y}; }
QuadNum qn_mul(const QuadBase& base, const QuadNum& a, const QuadNum& b) {
  return QuadNum{a.x * b.x + base.d * a.y * b.y, a.x * b.y + a.y * b.x};
}
QuadNum qn_conj(const QuadNum& a) { return QuadNum{a.x, -a.y}; }
mpq_class qn_norm(const QuadBase& base, const QuadNum& a) { return a.x * a.x - base.d * a.y * a.y; }
QuadNum qn_inv(const QuadBase& base, const QuadNum& a) {
  mpq_class n = qn_norm(base, a);
  if (n == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return scale(qn_conj(a), 1 / n);
}
QuadNum qn_div(const QuadBase& base, const QuadNum& a, const QuadNum& b) { return qn_mul(base, a, qn_inv(base, b)); }
bool qn_is_zero(const QuadNum& a) { return a.x == 0 && a.y == 0; }
bool qn_is_integral(const QuadNum& a) { return a.x.get_den() == 1 && a.y.get_den() == 1; }

std::string qn_format(const QuadNum& a) {
  if (a.y == 0) return a.x.get_str();
  std::string ys = a.y == 1 ? "w" : a.y == -1 ? "-w" : a.y.get_str() + "*w";
  if (a.x == 0) return ys;
  return a.x.get_str() + (a.y > 0 ? "+" : "") + ys;
}

QuadNum qn_parse(const QuadBase& base, std::string_view s) {
  QuadOps ops{base};
  auto p = ExprParser<QuadOps>(ops, s, false).parse();
  return p.empty() ? qn(0) : p[0];
}

std::optional<QuadNum> qn_sqrt(const QuadBase& base, const QuadNum& a) {
  if (a.y == 0) {
    if (auto r = rational_sqrt(a.x)) return QuadNum{*r, 0};
    if (auto r = rational_sqrt(a.x / base.d)) return QuadNum{0, *r};
    return std::nullopt;
  }
  // (p + q w)^2 = x + y w: d Q^2 - x Q + y^2/4 = 0 with Q = q^2
  auto disc = rational_sqrt(a.x * a.x - base.d * a.y * a.y);
  if (!disc) return std::nullopt;
  for (const mpq_class& big : {mpq_class(a.x + *disc), mpq_class(a.x - *disc)}) {
    mpq_class q2 = big / (2 * base.d);
    auto q = rational_sqrt(q2);
    if (!q || *q == 0) continue;
    QuadNum cand{a.y / (2 * *q), *q};
    if (qn_mul(base, cand, cand) == a) return cand;
  }
  return std::nullopt;
}

RelQuadPoly parse_rel_poly(const QuadBase& base, std::string_view s) {
  QuadOps ops{base};
  auto p = ExprParser<QuadOps>(ops, s, true).parse();
  if (p.size() != 3 || !(p[2] == qn(1))) throw Error(ErrorKind::InvalidParams, "expected a monic quadratic");
  if (!qn_is_integral(p[0]) || !qn_is_integral(p[1])) throw Error(ErrorKind::NotIntegral, "coefficients must lie in R");
  RelQuadPoly f{p[1], p[0]};
  QuadNum disc = qn_sub(qn_mul(base, f.c1, f.c1), scale(f.c0, 4));
  if (qn_sqrt(base, disc)) throw Error(ErrorKind::NotIrreducible, "polynomial splits over K");
  return f;
}

std::string format_rel_poly(const RelQuadPoly& f) {
  auto term = [](const QuadNum& c, const std::string& mono) -> std::string {
    if (qn_is_zero(c)) return "";
    std::string s = qn_format(c);
    bool compound = c.x != 0 && c.y != 0;
    if (mono.empty()) return compound ? " + (" + s + ")" : (s[0] == '-' ? " - " + s.substr(1) : " + " + s);
    if (c == qn(1)) return " + " + mono;
    if (c == qn(-1)) return " - " + mono;
    if (compound) return " + (" + s + ")*" + mono;
    return s[0] == '-' ? " - " + s.substr(1) + "*" + mono : " + " + s + "*" + mono;
  };
  return "x^2" + term(f.c1, "x") + term(f.c0, "");
}

LElem lelem_from_coords(const std::array<mpq_class, 4>& c) { return LElem{QuadNum{c[0], c[1]}, QuadNum{c[2], c[3]}}; }
std::array<mpq_class, 4> lelem_coords(const LElem& e) { return {e.alpha.x, e.alpha.y, e.beta.x, e.beta.y}; }

LElem l_mul(const QuadBase& base, const RelQuadPoly& f, const LElem& a, const LElem& b) {
  // theta^2 = -c1 theta - c0
  QuadNum bb = qn_mul(base, a.beta, b.beta);
  QuadNum alpha = qn_sub(qn_mul(base, a.alpha, b.alpha), qn_mul(base, bb, f.c0));
  QuadNum beta = qn_sub(qn_add(qn_mul(base, a.alpha, b.beta), qn_mul(base, a.beta, b.alpha)), qn_mul(base, bb, f.c1));
  return LElem{alpha, beta};
}

std::string lelem_format(const LElem& e) {
  if (qn_is_zero(e.beta)) return qn_format(e.alpha);
  std::string t = e.beta == qn(1) ? "theta" : "(" + qn_format(e.beta) + ")*theta";
  if (qn_is_zero(e.alpha)) return t;
  return "(" + qn_format(e.alpha) + ") + " + t;
}

std::string FracIdealR::to_string() const {
  QuadNum g1{mpq_class(a, den), 0};
  QuadNum g2{mpq_class(b, den), mpq_class(c, den)};
  if (a == c && b == 0) return "(" + qn_format(g1) + ")";
  return "(" + qn_format(g1) + ", " + qn_format(g2) + ")";
}

FracIdealR ideal_from_gens(const QuadBase& base, const std::vector<QuadNum>& gens) {
  std::vector<QuadNum> span;
  for (const auto& g : gens) {
    span.push_back(g);
    span.push_back(qn_mul(base, g, qn(0, 1)));
  }
  std::vector<mpq_class> all;
  for (const auto& g : span) {
    all.push_back(g.x);
    all.push_back(g.y);
  }
  mpz_class den = lcm_dens(all);
  ZMat rows;
  for (const auto& g : span) rows.push_back({mpq_class(g.y * den).get_num(), mpq_class(g.x * den).get_num()});
  ZMat h = hnf_rows(rows);
  if (h.size() != 2) throw Error(ErrorKind::InvalidParams, "the zero ideal is not a fractional ideal");
  FracIdealR out{h[1][1], h[0][1], h[0][0], den};
  mpz_class g = gcd(gcd(out.a, out.b), gcd(out.c, out.den));
  out.a /= g;
  out.b /= g;
  out.c /= g;
  out.den /= g;
  return out;
}

std::array<QuadNum, 2> ideal_zbasis(const FracIdealR& i) {
  return {QuadNum{mpq_class(i.a, i.den), 0}, QuadNum{mpq_class(i.b, i.den), mpq_class(i.c, i.den)}};
}

bool ideal_contains(const FracIdealR& i, const QuadNum& x) {
  mpq_class y = x.y * i.den / i.c;
  if (y.get_den() != 1) return false;
  mpq_class rest = (x.x * i.den - y * i.b) / i.a;
  return rest.get_den() == 1;
}

bool ideal_is_r_module(const QuadBase& base, const FracIdealR& i) {
  for (const auto& g : ideal_zbasis(i))
    if (!ideal_contains(i, qn_mul(base, g, qn(0, 1)))) return false;
  return true;
}

FracIdealR ideal_mul(const QuadBase& base, const FracIdealR& i1, const FracIdealR& i2) {
  std::vector<QuadNum> gens;
  for (const auto& g : ideal_zbasis(i1))
    for (const auto& h : ideal_zbasis(i2)) gens.push_back(qn_mul(base, g, h));
  return ideal_from_gens(base, gens);
}

FracIdealR ideal_conj(const QuadBase& base, const FracIdealR& i) {
  auto zb = ideal_zbasis(i);
  return ideal_from_gens(base, {qn_conj(zb[0]), qn_conj(zb[1])});
}

mpq_class ideal_norm(const FracIdealR& i) { return mpq_class(i.a * i.c, i.den * i.den); }

FracIdealR ideal_inverse(const QuadBase& base, const FracIdealR& i) {
  mpq_class n = ideal_norm(i);
  auto zb = ideal_zbasis(i);
  return ideal_from_gens(base, {scale(qn_conj(zb[0]), 1 / n), scale(qn_conj(zb[1]), 1 / n)});
}

std::optional<QuadNum> is_principal(const QuadBase& base, const FracIdealR& i) {
  FracIdealR integral{i.a, i.b, i.c, 1};
  mpz_class n = i.a * i.c;
  mpz_class ad = -base.d;
  for (mpz_class y = 0; ad * y * y <= n; ++y) {
    mpz_class rest = n - ad * y * y;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    mpz_class x;
    mpz_sqrt(x.get_mpz_t(), rest.get_mpz_t());
    for (const mpz_class& sy : {mpz_class(y), mpz_class(-y)}) {
      QuadNum g{mpq_class(x), mpq_class(sy)};
      if (ideal_from_gens(base, {g}) == integral) return scale(g, mpq_class(1, i.den));
    }
  }
  return std::nullopt;
}

LLattice lattice_from_generators(const QuadBase& base, const RelQuadPoly& f, const std::vector<LElem>& gens) {
  if (gens.empty()) throw Error(ErrorKind::NotFullRank, "no generators");
  std::vector<LElem> span;
  LElem w = w_elem(), t = theta_elem(), wt = l_mul(base, f, w, t);
  for (const auto& g : gens) {
    if (qn_is_zero(g.alpha) && qn_is_zero(g.beta)) throw Error(ErrorKind::InvalidParams, "zero generator");
    span.push_back(g);
    span.push_back(l_mul(base, f, w, g));
    span.push_back(l_mul(base, f, t, g));
    span.push_back(l_mul(base, f, wt, g));
  }
  LLattice j = make_lattice(base, f, span);
  require_full(j);
  for (const auto& e : lattice_zbasis(j))
    if (!lattice_contains(j, l_mul(base, f, w, e)) || !lattice_contains(j, l_mul(base, f, t, e)))
      throw std::logic_error("lattice span is not closed under w and theta");
  return j;
}

LLattice lattice_r_span(const QuadBase& base, const RelQuadPoly& f, const std::vector<LElem>& gens) {
  std::vector<LElem> span;
  for (const auto& g : gens) {
    span.push_back(g);
    span.push_back(l_mul(base, f, w_elem(), g));
  }
  return make_lattice(base, f, span);
}

std::vector<LElem> lattice_zbasis(const LLattice& j) {
  std::vector<LElem> out;
  for (const auto& r : j.hnf) out.push_back(from_internal(r, j.den));
  return out;
}

bool lattice_contains(const LLattice& j, const LElem& x) {
  ZVec target;
  for (const auto& c : to_internal(x)) {
    mpq_class v = c * j.den;
    if (v.get_den() != 1) return false;
    target.push_back(v.get_num());
  }
  return solve_integer(j.hnf, target).has_value();
}

FracIdealR intersect_base(const LLattice& j) {
  require_full(j);
  FracIdealR out = ideal_from_gens(j.base, {from_internal(j.hnf[2], j.den).alpha, from_internal(j.hnf[3], j.den).alpha});
  if (!ideal_is_r_module(j.base, out)) throw std::logic_error("J meet K is not an R-module");
  return out;
}

LElem auto_x0(const LLattice& j) {
  require_full(j);
  FracIdealR p = projection(j);
  return LElem{qn(0), QuadNum{mpq_class(p.c, p.den), 0}};
}

FracIdealR coefficient_ideal(const LLattice& j, const LElem& x0) {
  require_full(j);
  if (qn_is_zero(x0.beta)) throw Error(ErrorKind::X0InBase, "x0 lies in K");
  QuadNum einv = qn_inv(j.base, x0.beta);
  auto zb = ideal_zbasis(projection(j));
  FracIdealR out = ideal_from_gens(j.base, {qn_mul(j.base, zb[0], einv), qn_mul(j.base, zb[1], einv)});
  if (!ideal_is_r_module(j.base, out)) throw std::logic_error("coefficient ideal is not an R-module");
  return out;
}

FracIdealR steinitz(const LLattice& j, const LElem& x0) {
  return ideal_mul(j.base, coefficient_ideal(j, x0), intersect_base(j));
}

FreeResult is_free(const LLattice& j) {
  require_full(j);
  const QuadBase& base = j.base;
  FreeResult res;
  res.x0 = auto_x0(j);
  res.coefficient = coefficient_ideal(j, res.x0);
  res.intersection = intersect_base(j);
  res.steinitz = ideal_mul(base, res.coefficient, res.intersection);
  res.generator = is_principal(base, res.steinitz);
  if (!res.generator) return res;
  res.free = true;

  // y0 = x0 + u0 with coefficient ideal a: a*y0 lies in J
  LElem r0 = from_internal(j.hnf[0], j.den), r1 = from_internal(j.hnf[1], j.den);
  LElem c0 = from_internal(j.hnf[2], j.den), c1 = from_internal(j.hnf[3], j.den);
  QuadNum q = qn_div(base, r1.beta, r0.beta);
  QuadNum target = qn_sub(r1.alpha, qn_mul(base, q, r0.alpha));
  auto m = solve_in_k({qn_mul(base, q, c0.alpha), qn_mul(base, q, c1.alpha), qn_neg(c0.alpha), qn_neg(c1.alpha)}, target);
  if (!m) throw std::logic_error("no lift of the coefficient line found");
  QuadNum z0 = combo(c0.alpha, (*m)[0], c1.alpha, (*m)[1]);
  QuadNum c = qn_div(base, qn_add(r0.alpha, z0), r0.beta);
  const QuadNum& e = res.x0.beta;
  LElem y0{qn_mul(base, e, c), e};
  auto ka = ideal_zbasis(res.coefficient);
  for (const auto& k : ka)
    if (!lattice_contains(j, l_mul(base, j.f, from_k(k), y0))) throw std::logic_error("a*y0 escapes J");

  auto alpha0 = is_principal(base, res.coefficient);
  auto beta0 = is_principal(base, res.intersection);
  if (alpha0 && beta0) {
    res.basis = {from_k(*beta0), l_mul(base, j.f, from_k(*alpha0), y0)};
  } else {
    // k1 mu1 + k2 mu2 = 1 with k in a, mu in a^-1; then (a y0) + gamma a^-1 is free on
    // k1 y0 - gamma mu2, k2 y0 + gamma mu1
    auto nu = ideal_zbasis(ideal_inverse(base, res.coefficient));
    auto x = solve_in_k({qn_mul(base, ka[0], nu[0]), qn_mul(base, ka[0], nu[1]), qn_mul(base, ka[1], nu[0]),
                         qn_mul(base, ka[1], nu[1])},
                        qn(1));
    if (!x) throw std::logic_error("a * a^-1 does not contain 1");
    QuadNum mu1 = combo(nu[0], (*x)[0], nu[1], (*x)[1]);
    QuadNum mu2 = combo(nu[0], (*x)[2], nu[1], (*x)[3]);
    const QuadNum& g = *res.generator;
    LElem b1 = l_mul(base, j.f, from_k(ka[0]), y0);
    b1.alpha = qn_sub(b1.alpha, qn_mul(base, g, mu2));
    LElem b2 = l_mul(base, j.f, from_k(ka[1]), y0);
    b2.alpha = qn_add(b2.alpha, qn_mul(base, g, mu1));
    res.basis = {b1, b2};
  }
  if (!(lattice_r_span(base, j.f, res.basis) == j)) throw std::logic_error("free basis does not span J");
  return res;
}

std::string rmat_format(const RMat2& m) {
  return "[[" + qn_format(m[0]) + ", " + qn_format(m[1]) + "], [" + qn_format(m[2]) + ", " + qn_format(m[3]) + "]]";
}

RMat2 rmat_mul(const QuadBase& base, const RMat2& a, const RMat2& b) {
  auto dot = [&](int i, int j) {
    return qn_add(qn_mul(base, a[2 * i], b[j]), qn_mul(base, a[2 * i + 1], b[2 + j]));
  };
  return {dot(0, 0), dot(0, 1), dot(1, 0), dot(1, 1)};
}

QuadNum rmat_det(const QuadBase& base, const RMat2& m) {
  return qn_sub(qn_mul(base, m[0], m[3]), qn_mul(base, m[1], m[2]));
}

bool rmat_is_unit(const QuadBase& base, const QuadNum& x) { return qn_is_integral(x) && qn_norm(base, x) == 1; }

bool rmat_is_conjugator(const QuadBase& base, const RMat2& u, const RMat2& a, const RMat2& b) {
  for (const auto& x : u)
    if (!qn_is_integral(x)) return false;
  return rmat_is_unit(base, rmat_det(base, u)) && rmat_mul(base, u, a) == rmat_mul(base, b, u);
}

RMat2 mult_matrix(const LLattice& j, const std::vector<LElem>& basis) {
  if (basis.size() != 2) throw Error(ErrorKind::NotFreeError, "lattice has no free basis");
  const QuadBase& base = j.base;
  RMat2 bm{basis[0].alpha, basis[0].beta, basis[1].alpha, basis[1].beta};
  RMat2 c{qn(0), qn(1), qn_neg(j.f.c0), qn_neg(j.f.c1)};
  QuadNum det = rmat_det(base, bm);
  if (qn_is_zero(det)) throw Error(ErrorKind::NotFullRank, "basis is degenerate");
  QuadNum di = qn_inv(base, det);
  RMat2 inv{qn_mul(base, bm[3], di), qn_neg(qn_mul(base, bm[1], di)), qn_neg(qn_mul(base, bm[2], di)),
            qn_mul(base, bm[0], di)};
  RMat2 a = rmat_mul(base, rmat_mul(base, bm, c), inv);
  for (const auto& x : a)
    if (!qn_is_integral(x)) throw std::logic_error("multiplication matrix is not over R");
  if (!(qn_add(a[0], a[3]) == qn_neg(j.f.c1)) || !(rmat_det(base, a) == j.f.c0))
    throw std::logic_error("multiplication matrix has the wrong characteristic polynomial");
  return a;
}

}  // namespace simclass
