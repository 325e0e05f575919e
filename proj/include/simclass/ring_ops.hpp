#pragma once

#include <optional>
#include <string_view>

#include "simclass/exact_rings.hpp"

namespace simclass {

// Field operations of a Ring in the shape ExprParser expects.
struct RingOps {
  const Ring& ring;
  KElem zero() const { return ring.zero(); }
  KElem one() const { return ring.one(); }
  KElem from_integer(const mpz_class& n) const { return ring.from_mpz(n); }
  KElem add(const KElem& a, const KElem& b) const { return ring.add(a, b); }
  KElem sub(const KElem& a, const KElem& b) const { return ring.sub(a, b); }
  KElem mul(const KElem& a, const KElem& b) const { return ring.mul(a, b); }
  KElem div(const KElem& a, const KElem& b) const { return ring.div(a, b); }
  KElem neg(const KElem& a) const { return ring.neg(a); }
  std::optional<KElem> symbol(std::string_view s) const {
    if (s == "t" && ring.base_kind() == RingKind::FpTLoc)
      return KElem(FpRational(FpPoly::monomial(ring.prime(), 1, 1)), ring.zero().x());
    if (s == "w" && ring.is_quad_ext()) return ring.generator();
    return std::nullopt;
  }
};

}  // namespace simclass
