#include "simclass/oracle.hpp"

#include "simclass/error.hpp"

namespace simclass {

namespace {

void charge(std::uint64_t& work, std::uint64_t amount, std::uint64_t budget) {
  work += amount;
  if (work > budget) throw Error(ErrorKind::BudgetExceeded, "oracle search exceeds budget of " + std::to_string(budget));
}

}  // namespace

QuotientRing::QuotientRing(const Ring& ring, long n, std::uint64_t budget) : ring_(ring), n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "precision must be at least 1");
  mpz_class count = ring.residue_count(n);
  if (count * count > mpz_class(std::to_string(budget)))
    throw Error(ErrorKind::BudgetExceeded, "quotient tables exceed budget");
  elems_ = ring.residues(n);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  std::size_t s = elems_.size();
  add_.resize(s * s);
  mul_.resize(s * s);
  neg_.resize(s);
  unit_.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    neg_[i] = index_of(ring.neg(elems_[i]));
    unit_[i] = ring.is_unit(elems_[i]);
    for (std::size_t j = 0; j < s; ++j) {
      add_[i * s + j] = index_of(ring.add(elems_[i], elems_[j]));
      mul_[i * s + j] = index_of(ring.mul(elems_[i], elems_[j]));
    }
  }
  work_ = s * s;
}

std::size_t QuotientRing::index_of(const KElem& x) const {
  return index_.at(ring_.residue(x, n_));
}

std::vector<KElem> enumerate_quotient(const Ring& ring, long n, std::uint64_t budget) {
  if (ring.residue_count(n) > mpz_class(std::to_string(budget)))
    throw Error(ErrorKind::BudgetExceeded, "quotient is larger than the budget");
  return ring.residues(n);
}

std::optional<ResidueWitness> conj_search_mod(const Ring& ring, const Mat2& a, const Mat2& b, long n,
                                              std::uint64_t budget) {
  if (!m2_is_integral(ring, a) || !m2_is_integral(ring, b)) throw Error(ErrorKind::NotIntegral, "matrices must be integral");
  QuotientRing q(ring, n, budget);
  std::uint64_t work = q.work();
  std::size_t s = q.size();
  auto ix = [&](const KElem& x) { return q.index_of(x); };
  std::size_t a11 = ix(a(0, 0)), a12 = ix(a(0, 1)), a21 = ix(a(1, 0)), a22 = ix(a(1, 1));
  std::size_t b11 = ix(b(0, 0)), b12 = ix(b(0, 1)), b21 = ix(b(1, 0)), b22 = ix(b(1, 1));
  std::size_t zero = ix(ring.zero());
  // congruent inputs get the identity rather than the first commuting unit
  if (a11 == b11 && a12 == b12 && a21 == b21 && a22 == b22) return ResidueWitness{m2_identity(ring), n};
  auto lin = [&](std::size_t c1, std::size_t u1, std::size_t c2, std::size_t u2) {
    return q.add(q.mul(c1, u1), q.mul(c2, u2));
  };
  // (UA)_ij - (BU)_ij
  std::size_t d11 = q.add(a11, q.neg(b11)), d22 = q.add(a22, q.neg(b22));
  std::size_t d12 = q.add(a11, q.neg(b22)), d21 = q.add(a22, q.neg(b11));
  std::size_t nb12 = q.neg(b12), nb21 = q.neg(b21);
  for (std::size_t x = 0; x < s; ++x) {
    for (std::size_t y = 0; y < s; ++y) {
      charge(work, s, budget);
      for (std::size_t z = 0; z < s; ++z) {
        // x a11 + y a21 = b11 x + b12 z
        if (q.add(lin(x, d11, y, a21), q.mul(z, nb12)) != zero) continue;
        charge(work, s, budget);
        for (std::size_t w = 0; w < s; ++w) {
          if (q.add(lin(x, a12, y, d21), q.mul(w, nb12)) != zero) continue;
          if (q.add(lin(z, d12, w, a21), q.mul(x, nb21)) != zero) continue;
          if (q.add(lin(z, a12, w, d22), q.mul(y, nb21)) != zero) continue;
          std::size_t det = q.add(q.mul(x, w), q.neg(q.mul(y, z)));
          if (!q.is_unit(det)) continue;
          return ResidueWitness{mat2(q.elem(x), q.elem(y), q.elem(z), q.elem(w)), n};
        }
      }
    }
  }
  return std::nullopt;
}

Lemma15Report exhaustive_lemma15_check(const Ring& ring, const MonicPoly& f, const KElem& r, long n,
                                       std::uint64_t budget) {
  KElem a = quad_a(ring, f), b = quad_b(ring, f);
  KElem t = ring.sub(b, ring.mul(r, ring.add(r, a)));
  Val vt = ring.val(t);
  Val v2ra = ring.val(ring.add(ring.add(r, r), a));
  long half_vt = vt.is_inf() ? n : vt.value() / 2;
  Lemma15Report rep{std::min(v2ra, Val::of(half_vt)), {}, true};
  long top = std::min(n, half_vt);
  auto m = [&](long k) { return mat2(ring.neg(r), ring.pi_pow(k), ring.div(t, ring.pi_pow(k)), ring.add(a, r)); };
  for (long k = 0; k <= top; ++k) {
    for (long j = k + 1; j <= top; ++j) {
      bool predicted = !(Val::of(k) < v2ra);
      bool found = conj_search_mod(ring, m(k), m(j), n, budget).has_value();
      rep.pairs.push_back({k, j, predicted, found});
      if (predicted != found) rep.agrees = false;
    }
  }
  return rep;
}

}  // namespace simclass
