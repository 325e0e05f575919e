#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace simclass {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

struct HnfResult {
  ZMat h;  // all rows kept; nonzero rows first
  ZMat t;  // unimodular, t * input = h
  std::size_t rank;
};

// Row Hermite form: pivots positive, entries above a pivot reduced into [0, pivot).
HnfResult hnf_with_transform(const ZMat& rows);
// nonzero rows of the Hermite form
ZMat hnf_rows(const ZMat& rows);
// integer x with sum_i x_i rows_i = target, if one exists
std::optional<ZVec> solve_integer(const ZMat& rows, const ZVec& target);

}  // namespace simclass
