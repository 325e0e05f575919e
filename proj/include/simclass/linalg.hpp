#pragma once

#include <optional>
#include <vector>

#include "simclass/exact_rings.hpp"
#include "simclass/poly_tools.hpp"

namespace simclass {

// dense matrices over K, row-major
using KMat = std::vector<std::vector<KElem>>;
using KVec = std::vector<KElem>;

KMat kmat_identity(const Ring& ring, std::size_t n);
KMat kmat_mul(const Ring& ring, const KMat& a, const KMat& b);
KVec kvec_mat(const Ring& ring, const KVec& v, const KMat& m);  // row vector times matrix
KElem kmat_det(const Ring& ring, KMat a);
std::size_t kmat_rank(const Ring& ring, KMat a);
std::optional<KMat> kmat_inverse(const Ring& ring, const KMat& a);
// basis of {x : M x = 0}
std::vector<KVec> kmat_kernel(const Ring& ring, const KMat& m);
// det(xI - A) via Hessenberg reduction
MonicPoly kmat_char_poly(const Ring& ring, const KMat& a);
bool kmat_is_integral(const Ring& ring, const KMat& a);

}  // namespace simclass
