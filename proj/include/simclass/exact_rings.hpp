#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simclass/error.hpp"
#include "simclass/fp_poly.hpp"

namespace simclass {

// Element of the base field: Q for ZLoc, F_p(t) for FpTLoc.
using BaseElem = std::variant<mpq_class, FpRational>;

std::strong_ordering compare_base(const BaseElem& a, const BaseElem& b);
bool base_equal(const BaseElem& a, const BaseElem& b);

// Valuation value, +inf for zero.
class Val {
 public:
  static Val inf() { return Val(); }
  static Val of(long v) { return Val(v); }

  bool is_inf() const { return inf_; }
  long value() const;

  friend Val operator+(Val a, Val b);
  friend bool operator==(const Val& a, const Val& b) = default;
  friend std::strong_ordering operator<=>(const Val& a, const Val& b);
  friend bool operator==(const Val& a, long b) { return !a.inf_ && a.v_ == b; }
  friend std::strong_ordering operator<=>(const Val& a, long b) { return a <=> Val::of(b); }

  std::string to_string() const;

 private:
  Val() = default;
  explicit Val(long v) : inf_(false), v_(v) {}
  bool inf_ = true;
  long v_ = 0;
};

// x + y*theta; y is zero for the base rings.
class KElem {
 public:
  KElem() : x_(mpq_class(0)), y_(mpq_class(0)) {}
  KElem(BaseElem x, BaseElem y) : x_(std::move(x)), y_(std::move(y)) {}

  const BaseElem& x() const { return x_; }
  const BaseElem& y() const { return y_; }

  friend bool operator==(const KElem& a, const KElem& b) {
    return base_equal(a.x_, b.x_) && base_equal(a.y_, b.y_);
  }
  friend std::strong_ordering operator<=>(const KElem& a, const KElem& b) {
    if (auto c = compare_base(a.x_, b.x_); c != 0) return c;
    return compare_base(a.y_, b.y_);
  }

 private:
  BaseElem x_;
  BaseElem y_;
};

enum class RingKind { ZLoc, FpTLoc, QuadExt };
enum class Ramification { Unramified, Eisenstein };

// A discrete valuation ring R together with its fraction field K.
class Ring {
 public:
  static Ring zloc(u64 p);
  static Ring fptloc(u64 p);
  // R[theta] with theta^2 = a*theta + b, a and b in the base ring
  static Ring quad_ext(const Ring& base, const KElem& a, const KElem& b, Ramification ram);

  RingKind kind() const { return kind_; }
  bool is_quad_ext() const { return kind_ == RingKind::QuadExt; }
  RingKind base_kind() const { return base_kind_; }
  u64 prime() const { return p_; }
  Ring base() const;
  Ramification ramification() const { return ram_; }
  const KElem& minpoly_a() const { return qa_; }
  const KElem& minpoly_b() const { return qb_; }
  // 0 or p
  u64 characteristic() const { return base_kind_ == RingKind::FpTLoc ? p_ : 0; }

  KElem zero() const;
  KElem one() const;
  KElem from_int(long n) const;
  KElem from_mpz(const mpz_class& n) const;
  KElem from_base(const BaseElem& x) const;
  // t for FpTLoc, theta for QuadExt
  KElem generator() const;
  bool is_base_elem(const KElem& x) const;

  KElem add(const KElem& a, const KElem& b) const;
  KElem sub(const KElem& a, const KElem& b) const;
  KElem mul(const KElem& a, const KElem& b) const;
  KElem div(const KElem& a, const KElem& b) const;
  KElem neg(const KElem& a) const;
  KElem inv(const KElem& a) const;
  KElem pow(const KElem& a, long n) const;
  bool is_zero(const KElem& a) const { return a == zero(); }

  KElem conj(const KElem& a) const;
  // norm down to the base field, returned as a base element of this ring
  KElem norm(const KElem& a) const;

  Val val(const KElem& a) const;
  bool is_integral(const KElem& a) const { return val(a) >= 0; }
  bool is_unit(const KElem& a) const { return val(a) == 0; }
  KElem uniformizer() const;
  KElem pi_pow(long k) const;
  Val two_valuation() const;

  // canonical representative of a in R/pi^n
  KElem residue(const KElem& a, long n) const;
  // all residues mod pi^n in increasing order
  std::vector<KElem> residues(long n, std::size_t limit = 10'000'000) const;
  mpz_class residue_count(long n) const;

  std::string format(const KElem& a) const;
  KElem parse(std::string_view s) const;
  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;
  Val base_val(const BaseElem& x) const;
  BaseElem base_residue(const BaseElem& x, long n) const;
  std::vector<BaseElem> base_residues(long n) const;
  BaseElem base_zero() const;
  BaseElem base_one() const;

  RingKind kind_ = RingKind::ZLoc;
  RingKind base_kind_ = RingKind::ZLoc;
  u64 p_ = 2;
  Ramification ram_ = Ramification::Unramified;
  KElem qa_;
  KElem qb_;
};

// base field helpers
BaseElem base_add(const BaseElem& a, const BaseElem& b);
BaseElem base_sub(const BaseElem& a, const BaseElem& b);
BaseElem base_mul(const BaseElem& a, const BaseElem& b);
BaseElem base_div(const BaseElem& a, const BaseElem& b);
BaseElem base_neg(const BaseElem& a);
bool base_is_zero(const BaseElem& a);

}  // namespace simclass
