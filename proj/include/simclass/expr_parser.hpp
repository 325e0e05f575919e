#pragma once

// Recursive-descent parser for polynomial expressions in x whose coefficients
// live in some field. Ops supplies the field:
//   Elem zero(), one(), from_integer(const mpz_class&)
//   Elem add(a,b), sub(a,b), mul(a,b), div(a,b), neg(a)
//   std::optional<Elem> symbol(std::string_view)   // t, w, ...
#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simclass/error.hpp"

namespace simclass {

template <class Ops>
class ExprParser {
 public:
  using Elem = decltype(std::declval<const Ops&>().zero());
  using Poly = std::vector<Elem>;  // coefficients of x, low to high

  ExprParser(const Ops& ops, std::string_view src, bool allow_x)
      : ops_(ops), src_(src), allow_x_(allow_x) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return trim(std::move(p));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(src_) + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly trim(Poly p) const {
    Elem z = ops_.zero();
    while (!p.empty() && p.back() == z) p.pop_back();
    return p;
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), ops_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < a.size()) r[i] = ops_.add(r[i], a[i]);
      if (i < b.size()) r[i] = ops_.add(r[i], b[i]);
    }
    return trim(std::move(r));
  }

  Poly neg(const Poly& a) const {
    Poly r;
    for (const auto& c : a) r.push_back(ops_.neg(c));
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, ops_.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops_.add(r[i + j], ops_.mul(a[i], b[j]));
    return trim(std::move(r));
  }

  Poly div(const Poly& a, const Poly& b) {
    if (b.size() != 1) fail("division only by nonzero constants");
    Poly r;
    for (const auto& c : a) r.push_back(ops_.div(c, b[0]));
    return trim(std::move(r));
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    for (;;) {
      skip_ws();
      bool minus = false;
      if (eat('+')) {
      } else if (eat('-')) {
        minus = true;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = add(acc, minus ? neg(t) : t);
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (eat('*')) {
        acc = mul(acc, power());
      } else if (eat('/')) {
        acc = div(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      bool negative = eat('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(src_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      Poly r{ops_.one()};
      for (unsigned long i = 0; i < e; ++i) r = mul(r, base);
      if (negative) r = div(Poly{ops_.one()}, r);
      return r;
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return neg(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpz_class n(std::string(src_.substr(start, pos_ - start)));
      return trim(Poly{ops_.from_integer(n)});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      if (name == "x") {
        if (!allow_x_) fail("variable x not allowed here");
        return Poly{ops_.zero(), ops_.one()};
      }
      if (auto s = ops_.symbol(name)) return trim(Poly{*s});
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Ops& ops_;
  std::string_view src_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace simclass
