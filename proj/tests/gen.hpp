#pragma once
// random instances for the property suites; every generator draws from the
// caller's engine so a fixed seed replays the whole run

#include <random>
#include <string>
#include <vector>

#include "simclass/exact_rings.hpp"
#include "simclass/mat2.hpp"
#include "simclass/poly_tools.hpp"

namespace gen {

using namespace simclass;
using Rng = std::mt19937_64;

constexpr std::uint64_t kSeed = 20261016;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

struct Instance {
  std::string name;
  Ring ring;
};

inline std::vector<Instance> instances() {
  Ring z2 = Ring::zloc(2), z3 = Ring::zloc(3), f2 = Ring::fptloc(2), f3 = Ring::fptloc(3);
  auto ext = [](const Ring& b, const char* f, Ramification r) {
    MonicPoly m = parse_monic(b, f);
    return Ring::quad_ext(b, quad_a(b, m), quad_b(b, m), r);
  };
  return {
      {"ZLoc(2)", z2},
      {"ZLoc(3)", z3},
      {"ZLoc(5)", Ring::zloc(5)},
      {"FpTLoc(2)", f2},
      {"FpTLoc(3)", f3},
      {"ZLoc(2)[x^2-x-1]", ext(z2, "x^2-x-1", Ramification::Unramified)},
      {"ZLoc(2)[x^2-2]", ext(z2, "x^2-2", Ramification::Eisenstein)},
      {"ZLoc(3)[x^2+1]", ext(z3, "x^2+1", Ramification::Unramified)},
      {"FpTLoc(2)[x^2+x+1]", ext(f2, "x^2+x+1", Ramification::Unramified)},
      {"FpTLoc(2)[x^2+t*x+t]", ext(f2, "x^2+t*x+t", Ramification::Eisenstein)},
  };
}

// integral base element with a unit denominator now and then
inline KElem base_elem(Rng& g, const Ring& base, int size) {
  if (base.base_kind() == RingKind::ZLoc) {
    long p = static_cast<long>(base.prime());
    KElem x = base.from_int(uniform(g, -size, size));
    if (uniform(g, 0, 3) == 0) x = base.div(x, base.from_int(p * uniform(g, 1, 2) + 1));
    return x;
  }
  u64 p = base.prime();
  std::vector<u64> c;
  for (int i = 0; i < size; ++i) c.push_back(static_cast<u64>(uniform(g, 0, static_cast<long>(p) - 1)));
  KElem x(FpRational(FpPoly(p, c)), base.zero().x());
  if (uniform(g, 0, 3) == 0) {
    FpPoly d(p, {1, static_cast<u64>(uniform(g, 0, static_cast<long>(p) - 1)), 1});
    x = KElem(FpRational(FpPoly(p, c), d), base.zero().x());
  }
  return x;
}

// integral element of ring, biased toward small valuations and zero
inline KElem elem(Rng& g, const Ring& ring, int size = 4) {
  if (uniform(g, 0, 9) == 0) return ring.zero();
  Ring base = ring.base();
  KElem x = base_elem(g, base, size);
  if (!ring.is_quad_ext()) return x;
  KElem y = base_elem(g, base, size);
  return ring.add(x, ring.mul(y, ring.generator()));
}

inline KElem unit(Rng& g, const Ring& ring) {
  while (true) {
    KElem u = elem(g, ring);
    if (ring.is_unit(u)) return u;
  }
}

inline Mat2 matrix(Rng& g, const Ring& ring, int size = 4) {
  Mat2 m = mat2(elem(g, ring, size), elem(g, ring, size), elem(g, ring, size), elem(g, ring, size));
  // sprinkle powers of pi so deeper classes turn up
  if (uniform(g, 0, 1)) {
    long k = uniform(g, 1, 3);
    int i = static_cast<int>(uniform(g, 0, 1)), j = static_cast<int>(uniform(g, 0, 1));
    m(i, j) = ring.mul(m(i, j), ring.pi_pow(k));
  }
  return m;
}

// product of elementary matrices and a unit diagonal
inline Mat2 gl2(Rng& g, const Ring& ring) {
  Mat2 u = mat2(unit(g, ring), ring.zero(), ring.zero(), unit(g, ring));
  for (int s = 0; s < 3; ++s) {
    KElem c = elem(g, ring, 3);
    Mat2 e = uniform(g, 0, 1) ? mat2(ring.one(), c, ring.zero(), ring.one()) : mat2(ring.one(), ring.zero(), c, ring.one());
    u = m2_mul(ring, u, e);
  }
  if (uniform(g, 0, 1)) u = m2_mul(ring, u, mat2(ring.zero(), ring.one(), ring.one(), ring.zero()));
  return u;
}

inline Mat2 conjugate(const Ring& ring, const Mat2& u, const Mat2& a) {
  return m2_mul(ring, m2_mul(ring, u, a), *m2_inverse(ring, u));
}

}  // namespace gen
