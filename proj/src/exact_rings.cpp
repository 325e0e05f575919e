#include "simclass/exact_rings.hpp"

#include <algorithm>
#include <stdexcept>

#include "simclass/expr_parser.hpp"
#include "simclass/ring_ops.hpp"

namespace simclass {

namespace {

template <class Q, class F>
BaseElem binary(const BaseElem& a, const BaseElem& b, Q q, F f) {
  if (a.index() != b.index()) throw std::logic_error("mixed base fields");
  if (a.index() == 0) return mpq_class(q(std::get<0>(a), std::get<0>(b)));
  return f(std::get<1>(a), std::get<1>(b));
}

long mpz_valuation(const mpz_class& n, u64 p) {
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

bool needs_parens(const std::string& s) {
  return s.find_first_of("+/ ") != std::string::npos;
}

}  // namespace

std::strong_ordering compare_base(const BaseElem& a, const BaseElem& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.index() == 0) {
    int c = cmp(std::get<0>(a), std::get<0>(b));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<1>(a) <=> std::get<1>(b);
}

bool base_equal(const BaseElem& a, const BaseElem& b) { return compare_base(a, b) == 0; }

BaseElem base_add(const BaseElem& a, const BaseElem& b) {
  return binary(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
                [](const FpRational& x, const FpRational& y) { return x + y; });
}

BaseElem base_sub(const BaseElem& a, const BaseElem& b) {
  return binary(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
                [](const FpRational& x, const FpRational& y) { return x - y; });
}

BaseElem base_mul(const BaseElem& a, const BaseElem& b) {
  return binary(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
                [](const FpRational& x, const FpRational& y) { return x * y; });
}

BaseElem base_div(const BaseElem& a, const BaseElem& b) {
  if (base_is_zero(b)) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return binary(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x / y); },
                [](const FpRational& x, const FpRational& y) { return x / y; });
}

BaseElem base_neg(const BaseElem& a) {
  if (a.index() == 0) return mpq_class(-std::get<0>(a));
  return -std::get<1>(a);
}

bool base_is_zero(const BaseElem& a) {
  if (a.index() == 0) return sgn(std::get<0>(a)) == 0;
  return std::get<1>(a).is_zero();
}

long Val::value() const {
  if (inf_) throw std::logic_error("valuation is infinite");
  return v_;
}

Val operator+(Val a, Val b) {
  if (a.inf_ || b.inf_) return Val::inf();
  return Val::of(a.v_ + b.v_);
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
  if (a.inf_ || b.inf_) return (a.inf_ ? 1 : 0) <=> (b.inf_ ? 1 : 0);
  return a.v_ <=> b.v_;
}

std::string Val::to_string() const { return inf_ ? "inf" : std::to_string(v_); }

Ring Ring::zloc(u64 p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidRing, "p must be prime");
  Ring r;
  r.kind_ = r.base_kind_ = RingKind::ZLoc;
  r.p_ = p;
  return r;
}

Ring Ring::fptloc(u64 p) {
  if (!is_prime_u64(p) || p >= (1ULL << 31)) throw Error(ErrorKind::InvalidRing, "p must be a prime below 2^31");
  Ring r;
  r.kind_ = r.base_kind_ = RingKind::FpTLoc;
  r.p_ = p;
  r.qa_ = r.zero();
  r.qb_ = r.zero();
  return r;
}

Ring Ring::quad_ext(const Ring& base, const KElem& a, const KElem& b, Ramification ram) {
  if (base.is_quad_ext()) throw Error(ErrorKind::InvalidRing, "extensions of extensions are not supported");
  if (!base.is_base_elem(a) || !base.is_base_elem(b) || a.x().index() != base.zero().x().index() ||
      b.x().index() != base.zero().x().index())
    throw Error(ErrorKind::InvalidRing, "minimal polynomial must have base coefficients");
  if (!base.is_integral(a) || !base.is_integral(b))
    throw Error(ErrorKind::InvalidRing, "minimal polynomial must be integral");
  if (ram == Ramification::Unramified) {
    for (u64 z = 0; z < base.prime(); ++z) {
      KElem zz = base.from_int(static_cast<long>(z));
      KElem val = base.sub(base.sub(base.mul(zz, zz), base.mul(a, zz)), b);
      if (base.residue(val, 1) == base.zero())
        throw Error(ErrorKind::InvalidRing, "unramified minimal polynomial must be irreducible mod pi");
    }
  } else {
    if (base.val(a) < 1 || !(base.val(b) == 1))
      throw Error(ErrorKind::InvalidRing, "Eisenstein polynomial needs v(a)>=1 and v(b)=1");
  }
  Ring r = base;
  r.kind_ = RingKind::QuadExt;
  r.ram_ = ram;
  r.qa_ = a;
  r.qb_ = b;
  return r;
}

Ring Ring::base() const {
  if (!is_quad_ext()) return *this;
  return base_kind_ == RingKind::ZLoc ? zloc(p_) : fptloc(p_);
}

BaseElem Ring::base_zero() const {
  if (base_kind_ == RingKind::ZLoc) return mpq_class(0);
  return FpRational::zero(p_);
}

BaseElem Ring::base_one() const {
  if (base_kind_ == RingKind::ZLoc) return mpq_class(1);
  return FpRational::one(p_);
}

KElem Ring::zero() const { return KElem(base_zero(), base_zero()); }
KElem Ring::one() const { return KElem(base_one(), base_zero()); }

KElem Ring::from_mpz(const mpz_class& n) const {
  if (base_kind_ == RingKind::ZLoc) return KElem(mpq_class(n), base_zero());
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return KElem(FpRational(FpPoly::constant(p_, r.get_ui())), base_zero());
}

KElem Ring::from_int(long n) const { return from_mpz(mpz_class(n)); }

KElem Ring::from_base(const BaseElem& x) const { return KElem(x, base_zero()); }

KElem Ring::generator() const {
  if (is_quad_ext()) return KElem(base_zero(), base_one());
  if (kind_ == RingKind::FpTLoc) return KElem(FpRational(FpPoly::monomial(p_, 1, 1)), base_zero());
  throw Error(ErrorKind::InvalidParams, "ZLoc has no generator symbol");
}

bool Ring::is_base_elem(const KElem& x) const { return base_is_zero(x.y()); }

KElem Ring::add(const KElem& a, const KElem& b) const {
  return KElem(base_add(a.x(), b.x()), base_add(a.y(), b.y()));
}

KElem Ring::sub(const KElem& a, const KElem& b) const {
  return KElem(base_sub(a.x(), b.x()), base_sub(a.y(), b.y()));
}

KElem Ring::neg(const KElem& a) const { return KElem(base_neg(a.x()), base_neg(a.y())); }

KElem Ring::mul(const KElem& a, const KElem& b) const {
  if (!is_quad_ext()) return KElem(base_mul(a.x(), b.x()), base_zero());
  BaseElem yy = base_mul(a.y(), b.y());
  BaseElem x = base_add(base_mul(a.x(), b.x()), base_mul(qb_.x(), yy));
  BaseElem y = base_add(base_add(base_mul(a.x(), b.y()), base_mul(a.y(), b.x())), base_mul(qa_.x(), yy));
  return KElem(std::move(x), std::move(y));
}

KElem Ring::conj(const KElem& a) const {
  if (!is_quad_ext()) return a;
  return KElem(base_add(a.x(), base_mul(qa_.x(), a.y())), base_neg(a.y()));
}

KElem Ring::norm(const KElem& a) const {
  if (!is_quad_ext()) return a;
  BaseElem n = base_add(base_mul(a.x(), a.x()), base_mul(qa_.x(), base_mul(a.x(), a.y())));
  n = base_sub(n, base_mul(qb_.x(), base_mul(a.y(), a.y())));
  return KElem(std::move(n), base_zero());
}

KElem Ring::inv(const KElem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!is_quad_ext()) return KElem(base_div(base_one(), a.x()), base_zero());
  BaseElem n = norm(a).x();
  KElem c = conj(a);
  return KElem(base_div(c.x(), n), base_div(c.y(), n));
}

KElem Ring::div(const KElem& a, const KElem& b) const { return mul(a, inv(b)); }

KElem Ring::pow(const KElem& a, long n) const {
  if (n < 0) return pow(inv(a), -n);
  KElem result = one();
  KElem base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Val Ring::base_val(const BaseElem& x) const {
  if (base_is_zero(x)) return Val::inf();
  if (x.index() == 0) {
    const mpq_class& q = std::get<0>(x);
    return Val::of(mpz_valuation(q.get_num(), p_) - mpz_valuation(q.get_den(), p_));
  }
  return Val::of(std::get<1>(x).t_valuation());
}

Val Ring::val(const KElem& a) const {
  if (!is_quad_ext()) return base_val(a.x());
  if (ram_ == Ramification::Unramified) {
    Val n = base_val(norm(a).x());
    if (n.is_inf()) return n;
    if (n.value() % 2) throw std::logic_error("odd norm valuation in an unramified extension");
    return Val::of(n.value() / 2);
  }
  Val vx = base_val(a.x());
  Val vy = base_val(a.y());
  Val ex = vx.is_inf() ? vx : Val::of(2 * vx.value());
  Val ey = vy.is_inf() ? vy : Val::of(2 * vy.value() + 1);
  return std::min(ex, ey);
}

KElem Ring::uniformizer() const {
  if (is_quad_ext() && ram_ == Ramification::Eisenstein) return generator();
  if (base_kind_ == RingKind::ZLoc) return from_mpz(mpz_class(static_cast<unsigned long>(p_)));
  return KElem(FpRational(FpPoly::monomial(p_, 1, 1)), base_zero());
}

KElem Ring::pi_pow(long k) const { return pow(uniformizer(), k); }

Val Ring::two_valuation() const { return val(from_int(2)); }

BaseElem Ring::base_residue(const BaseElem& x, long n) const {
  if (n <= 0) return base_zero();
  if (x.index() == 0) {
    const mpq_class& q = std::get<0>(x);
    mpz_class mod;
    mpz_pow_ui(mod.get_mpz_t(), mpz_class(static_cast<unsigned long>(p_)).get_mpz_t(),
               static_cast<unsigned long>(n));
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), mod.get_mpz_t()))
      throw Error(ErrorKind::NotIntegral, "denominator not coprime to p");
    mpz_class r = (q.get_num() * inv) % mod;
    if (r < 0) r += mod;
    return mpq_class(r);
  }
  const FpRational& f = std::get<1>(x);
  std::size_t m = static_cast<std::size_t>(n);
  return FpRational((f.num() * inverse_mod_tn(f.den(), m)).truncated(m));
}

KElem Ring::residue(const KElem& a, long n) const {
  if (!is_integral(a)) throw Error(ErrorKind::NotIntegral, "residue of a non-integral element");
  if (!is_quad_ext()) return KElem(base_residue(a.x(), n), base_zero());
  if (ram_ == Ramification::Unramified) return KElem(base_residue(a.x(), n), base_residue(a.y(), n));
  return KElem(base_residue(a.x(), (n + 1) / 2), base_residue(a.y(), n / 2));
}

mpz_class Ring::residue_count(long n) const {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class r;
  unsigned long e = static_cast<unsigned long>(std::max(0L, n));
  if (is_quad_ext() && ram_ == Ramification::Unramified) e *= 2;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

std::vector<BaseElem> Ring::base_residues(long n) const {
  std::vector<BaseElem> out;
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), mpz_class(static_cast<unsigned long>(p_)).get_mpz_t(),
             static_cast<unsigned long>(std::max(0L, n)));
  u64 c = count.get_ui();
  out.reserve(c);
  for (u64 i = 0; i < c; ++i) {
    if (base_kind_ == RingKind::ZLoc)
      out.emplace_back(mpq_class(static_cast<unsigned long>(i)));
    else
      out.emplace_back(FpRational(decode_poly(p_, i)));
  }
  return out;
}

std::vector<KElem> Ring::residues(long n, std::size_t limit) const {
  if (residue_count(n) > limit)
    throw Error(ErrorKind::BudgetExceeded, "residue ring too large to enumerate");
  std::vector<KElem> out;
  if (!is_quad_ext()) {
    for (auto& b : base_residues(n)) out.emplace_back(std::move(b), base_zero());
    return out;
  }
  long nx = ram_ == Ramification::Unramified ? n : (n + 1) / 2;
  long ny = ram_ == Ramification::Unramified ? n : n / 2;
  auto xs = base_residues(nx);
  auto ys = base_residues(ny);
  for (const auto& x : xs)
    for (const auto& y : ys) out.emplace_back(x, y);
  return out;
}

namespace {

std::string format_base(const BaseElem& x) {
  if (x.index() == 0) return std::get<0>(x).get_str();
  return std::get<1>(x).to_string();
}



}  // namespace

std::string Ring::format(const KElem& a) const {
  if (!is_quad_ext() || base_is_zero(a.y())) return format_base(a.x());
  std::string ys = format_base(a.y());
  bool minus = !needs_parens(ys) && ys[0] == '-';
  if (minus) ys = ys.substr(1);
  std::string term = ys == "1" ? "w" : (needs_parens(ys) ? "(" + ys + ")" : ys) + "*w";
  if (base_is_zero(a.x())) return minus ? "-" + term : term;
  std::string xs = format_base(a.x());
  if (needs_parens(xs)) xs = "(" + xs + ")";
  return xs + (minus ? " - " : " + ") + term;
}

KElem Ring::parse(std::string_view s) const {
  RingOps ops{*this};
  auto poly = ExprParser<RingOps>(ops, s, false).parse();
  if (poly.empty()) return zero();
  return poly[0];
}

std::string Ring::describe() const {
  std::string p = std::to_string(p_);
  std::string b = base_kind_ == RingKind::ZLoc ? "ZLoc(" + p + ")" : "FpTLoc(" + p + ")";
  if (!is_quad_ext()) return b;
  Ring br = base();
  std::string poly = "x^2 - (" + br.format(qa_) + ")*x - (" + br.format(qb_) + ")";
  return "QuadExt(" + b + ", " + poly + ", " +
         (ram_ == Ramification::Unramified ? "unramified" : "eisenstein") + ")";
}

bool operator==(const Ring& a, const Ring& b) {
  return a.kind_ == b.kind_ && a.base_kind_ == b.base_kind_ && a.p_ == b.p_ &&
         (!a.is_quad_ext() || (a.ram_ == b.ram_ && a.qa_ == b.qa_ && a.qb_ == b.qb_));
}

}  // namespace simclass
