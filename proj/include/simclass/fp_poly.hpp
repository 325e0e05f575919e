#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace simclass {

using u64 = std::uint64_t;

bool is_prime_u64(u64 n);
u64 mod_pow(u64 a, u64 e, u64 p);
u64 mod_inv(u64 a, u64 p);
// Tonelli-Shanks; p prime
std::optional<u64> mod_sqrt(u64 a, u64 p);

// Polynomials over F_p in t, coefficients low to high, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(u64 p) : p_(p) {}
  FpPoly(u64 p, std::vector<u64> coeffs);

  static FpPoly constant(u64 p, u64 c);
  static FpPoly monomial(u64 p, u64 c, std::size_t degree);

  u64 prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u64>& coeffs() const { return c_; }

  // lowest nonzero exponent; -1 for zero
  int t_valuation() const;
  FpPoly truncated(std::size_t n) const;
  FpPoly shifted_down(std::size_t k) const;
  FpPoly shifted_up(std::size_t k) const;
  FpPoly scaled(u64 c) const;
  FpPoly monic() const;
  std::optional<FpPoly> sqrt() const;

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;
  // degree first, then coefficients from the top: same as comparing sum c_i p^i
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b);

  std::string to_string(char var = 't') const;

 private:
  void trim();
  u64 p_ = 0;
  std::vector<u64> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
// f^{-1} mod t^n, needs f(0) != 0
FpPoly inverse_mod_tn(const FpPoly& f, std::size_t n);
// i-th element of F_p[t]_{<n} in the integer encoding order
FpPoly decode_poly(u64 p, u64 index);

// Reduced fraction num/den with den monic.
class FpRational {
 public:
  FpRational() = default;
  explicit FpRational(FpPoly num);
  FpRational(FpPoly num, FpPoly den);

  static FpRational zero(u64 p) { return FpRational(FpPoly(p)); }
  static FpRational one(u64 p) { return FpRational(FpPoly::constant(p, 1)); }

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  u64 prime() const { return num_.prime(); }
  bool is_zero() const { return num_.is_zero(); }
  // requires nonzero
  long t_valuation() const;

  FpRational operator-() const;
  friend FpRational operator+(const FpRational& a, const FpRational& b);
  friend FpRational operator-(const FpRational& a, const FpRational& b);
  friend FpRational operator*(const FpRational& a, const FpRational& b);
  friend FpRational operator/(const FpRational& a, const FpRational& b);
  friend bool operator==(const FpRational& a, const FpRational& b) = default;
  friend std::strong_ordering operator<=>(const FpRational& a, const FpRational& b);

  std::string to_string() const;

 private:
  FpPoly num_;
  FpPoly den_;
};

}  // namespace simclass
