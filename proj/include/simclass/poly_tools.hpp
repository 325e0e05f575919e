#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simclass/exact_rings.hpp"

namespace simclass {

// coefficients over K, low to high, no trailing zeros
using KPoly = std::vector<KElem>;

struct MonicPoly {
  std::vector<KElem> coeffs;  // low to high, last is 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const KElem& coeff(std::size_t i) const { return coeffs[i]; }
  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;
};

// x^2 - a x - b
MonicPoly make_quadratic(const Ring& ring, const KElem& a, const KElem& b);
KElem quad_a(const Ring& ring, const MonicPoly& f);
KElem quad_b(const Ring& ring, const MonicPoly& f);
MonicPoly to_monic(const Ring& ring, const KPoly& p);
bool is_over_r(const Ring& ring, const MonicPoly& f);

MonicPoly parse_monic(const Ring& ring, std::string_view s);
std::string format_poly(const Ring& ring, const KPoly& p);
inline std::string format_poly(const Ring& ring, const MonicPoly& f) { return format_poly(ring, f.coeffs); }

KPoly poly_trim(const Ring& ring, KPoly p);
KPoly poly_add(const Ring& ring, const KPoly& a, const KPoly& b);
KPoly poly_sub(const Ring& ring, const KPoly& a, const KPoly& b);
KPoly poly_mul(const Ring& ring, const KPoly& a, const KPoly& b);
std::pair<KPoly, KPoly> poly_divmod(const Ring& ring, const KPoly& a, const KPoly& b);
KPoly poly_gcd(const Ring& ring, KPoly a, KPoly b);
KElem poly_eval(const Ring& ring, const KPoly& p, const KElem& x);

KPoly derivative(const Ring& ring, const MonicPoly& f);
bool is_separable(const Ring& ring, const MonicPoly& f);
// a^2/4 + b
KElem disc_quad(const Ring& ring, const MonicPoly& f);

struct QuadFactorization {
  bool reducible = false;
  KElem lambda1;
  KElem lambda2;
};

QuadFactorization quad_factor(const Ring& ring, const MonicPoly& f);

// square root in K when one exists
std::optional<KElem> sqrt_elem(const Ring& ring, const KElem& x);
// z^2 + z = c in characteristic 2
std::optional<KElem> solve_artin_schreier(const Ring& ring, const KElem& c);

}  // namespace simclass
