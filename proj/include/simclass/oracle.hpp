#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "simclass/exact_rings.hpp"
#include "simclass/mat2.hpp"
#include "simclass/poly_tools.hpp"

namespace simclass {

constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// R / pi^N with elements indexed in sorted residue order
class QuotientRing {
 public:
  QuotientRing(const Ring& ring, long n, std::uint64_t budget = kDefaultOracleBudget);

  const Ring& ring() const { return ring_; }
  long precision() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const KElem& elem(std::size_t i) const { return elems_[i]; }
  const std::vector<KElem>& elems() const { return elems_; }
  // index of the residue of an integral x
  std::size_t index_of(const KElem& x) const;
  std::size_t add(std::size_t i, std::size_t j) const { return add_[i * elems_.size() + j]; }
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * elems_.size() + j]; }
  std::size_t neg(std::size_t i) const { return neg_[i]; }
  bool is_unit(std::size_t i) const { return unit_[i]; }
  std::uint64_t work() const { return work_; }

 private:
  Ring ring_;
  long n_;
  std::vector<KElem> elems_;
  std::map<KElem, std::size_t> index_;
  std::vector<std::size_t> add_, mul_, neg_;
  std::vector<bool> unit_;
  std::uint64_t work_ = 0;
};

std::vector<KElem> enumerate_quotient(const Ring& ring, long n, std::uint64_t budget = kDefaultOracleBudget);

struct ResidueWitness {
  Mat2 u;  // residues mod pi^N
  long n;
};

// lexicographically first U mod pi^N (in residue order of x, y, z, w) with
// U A = B U mod pi^N and det U a unit; the identity when A = B mod pi^N
std::optional<ResidueWitness> conj_search_mod(const Ring& ring, const Mat2& a, const Mat2& b, long n,
                                              std::uint64_t budget = kDefaultOracleBudget);

struct Lemma15Pair {
  long k, n;
  bool predicted_similar;
  bool found_mod;
};

struct Lemma15Report {
  Val cutoff;  // min(v(2r+a), floor(v(T)/2))
  std::vector<Lemma15Pair> pairs;
  bool agrees;
};

// matrices [[-r, pi^k], [T/pi^k, a+r]], T = b - r(r+a), compared mod pi^N for k < n <= min(N, v(T)/2)
Lemma15Report exhaustive_lemma15_check(const Ring& ring, const MonicPoly& f, const KElem& r, long n,
                                       std::uint64_t budget = kDefaultOracleBudget);

}  // namespace simclass
