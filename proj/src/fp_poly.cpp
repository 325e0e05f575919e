#include "simclass/fp_poly.hpp"

#include <algorithm>

#include "simclass/error.hpp"

namespace simclass {

namespace {

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 mod_pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse mod p");
  return mod_pow(a, p - 2, p);
}

std::optional<u64> mod_sqrt(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = mod_pow(z, q, p);
  u64 t = mod_pow(a, q, p);
  u64 r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(u64 p, u64 c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(u64 p, u64 c, std::size_t degree) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::t_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return -1;
}

FpPoly FpPoly::truncated(std::size_t n) const {
  std::vector<u64> v(c_.begin(), c_.begin() + std::min(n, c_.size()));
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return FpPoly(p_);
  return FpPoly(p_, std::vector<u64>(c_.begin() + k, c_.end()));
}

FpPoly FpPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<u64> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::scaled(u64 c) const {
  std::vector<u64> v(c_);
  for (auto& x : v) x = mulmod(x, c % p_, p_);
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inv(lead(), p_));
}

std::optional<FpPoly> FpPoly::sqrt() const {
  if (is_zero()) return *this;
  if (degree() % 2) return std::nullopt;
  std::size_t n = static_cast<std::size_t>(degree()) / 2;
  std::vector<u64> g(n + 1, 0);
  if (p_ == 2) {
    for (std::size_t i = 0; i <= n; ++i) g[i] = coeff(2 * i);
  } else {
    auto lead_root = mod_sqrt(lead(), p_);
    if (!lead_root) return std::nullopt;
    g[n] = *lead_root;
    u64 inv2g = mod_inv(mulmod(2, g[n], p_), p_);
    for (std::size_t k = n; k-- > 0;) {
      // coefficient of t^{n+k} in g^2, excluding the 2*g_n*g_k term
      u64 acc = 0;
      for (std::size_t i = k + 1; i < n; ++i) {
        std::size_t j = n + k - i;
        if (j <= k || j >= n) continue;
        acc = (acc + mulmod(g[i], g[j], p_)) % p_;
      }
      u64 target = (coeff(n + k) + p_ - acc) % p_;
      g[k] = mulmod(target, inv2g, p_);
    }
  }
  FpPoly root(p_, std::move(g));
  if (root * root != *this) return std::nullopt;
  return root;
}

FpPoly FpPoly::operator-() const {
  std::vector<u64> v(c_);
  for (auto& x : v) x = (p_ - x) % p_;
  return FpPoly(p_, std::move(v));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  u64 p = a.p_ ? a.p_ : b.p_;
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % p;
  return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  u64 p = a.p_ ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return FpPoly(p);
  std::vector<u64> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], p)) % p;
  }
  return FpPoly(p, std::move(v));
}

std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  return std::strong_ordering::equal;
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  u64 p = b.prime();
  FpPoly r = a;
  if (r.degree() < b.degree()) return {FpPoly(p), r};
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  u64 inv = mod_inv(b.lead(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    u64 c = mulmod(r.lead(), inv, p);
    q[shift] = c;
    r = r - b.scaled(c).shifted_up(shift);
  }
  return {FpPoly(p, std::move(q)), r};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly inverse_mod_tn(const FpPoly& f, std::size_t n) {
  u64 p = f.prime();
  if (f.coeff(0) == 0) throw Error(ErrorKind::NotIntegral, "series inverse needs a unit constant term");
  std::vector<u64> g(n, 0);
  u64 inv0 = mod_inv(f.coeff(0), p);
  for (std::size_t k = 0; k < n; ++k) {
    u64 acc = k == 0 ? 1 : 0;
    for (std::size_t i = 1; i <= k; ++i) acc = (acc + p - mulmod(f.coeff(i), g[k - i], p)) % p;
    g[k] = mulmod(acc, inv0, p);
  }
  return FpPoly(p, std::move(g));
}

FpPoly decode_poly(u64 p, u64 index) {
  std::vector<u64> v;
  while (index) {
    v.push_back(index % p);
    index /= p;
  }
  return FpPoly(p, std::move(v));
}

FpRational::FpRational(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.prime(), 1)) {}

FpRational::FpRational(FpPoly num, FpPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  u64 p = den.prime();
  if (num.is_zero()) {
    num_ = FpPoly(p);
    den_ = FpPoly::constant(p, 1);
    return;
  }
  FpPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  u64 inv = mod_inv(den.lead(), p);
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

long FpRational::t_valuation() const { return num_.t_valuation() - den_.t_valuation(); }

FpRational FpRational::operator-() const {
  FpRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FpRational operator+(const FpRational& a, const FpRational& b) {
  if (a.den_ == b.den_) return FpRational(a.num_ + b.num_, a.den_);
  return FpRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FpRational operator-(const FpRational& a, const FpRational& b) { return a + (-b); }

FpRational operator*(const FpRational& a, const FpRational& b) {
  return FpRational(a.num_ * b.num_, a.den_ * b.den_);
}

FpRational operator/(const FpRational& a, const FpRational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in F_p(t)");
  return FpRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const FpRational& a, const FpRational& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string FpRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const FpPoly& f) {
    std::string s = f.to_string();
    return s.find('+') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace simclass
