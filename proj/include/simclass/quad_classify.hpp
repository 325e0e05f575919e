#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "simclass/exact_rings.hpp"
#include "simclass/lm_correspondence.hpp"
#include "simclass/mat2.hpp"
#include "simclass/poly_tools.hpp"

namespace simclass {

struct ReducibleForm {
  KElem lambda1, lambda2, tau;
  friend bool operator==(const ReducibleForm&, const ReducibleForm&) = default;
};
struct Unit2Form {
  KElem a, b;
  long k;
  friend bool operator==(const Unit2Form&, const Unit2Form&) = default;
};
struct Case1Form {
  KElem r;
  long i;
  friend bool operator==(const Case1Form&, const Case1Form&) = default;
};
struct Case21Form {
  long n;
  friend bool operator==(const Case21Form&, const Case21Form&) = default;
};
struct Case22MainForm {
  long n;
  friend bool operator==(const Case22MainForm&, const Case22MainForm&) = default;
};
struct Case22ExtraForm {
  KElem r;
  long i;
  friend bool operator==(const Case22ExtraForm&, const Case22ExtraForm&) = default;
};
struct Char2SepForm {
  KElem r;
  long i;
  friend bool operator==(const Char2SepForm&, const Char2SepForm&) = default;
};
struct InsepForm {
  long i;
  KElem u, s;
  friend bool operator==(const InsepForm&, const InsepForm&) = default;
};

using FormParams = std::variant<ReducibleForm, Unit2Form, Case1Form, Case21Form, Case22MainForm,
                                Case22ExtraForm, Char2SepForm, InsepForm>;

struct CanonForm {
  Ring ring;
  MonicPoly f;
  FormParams params;

  // e.g. "Case22Extra{r=1,i=1}"
  std::string label() const;
  friend bool operator==(const CanonForm& a, const CanonForm& b) {
    return a.ring == b.ring && a.f == b.f && a.params == b.params;
  }
};

// U * A = B * U, det U a unit
struct GL2Witness {
  Mat2 u;
};

struct Classification {
  CanonForm form;
  GL2Witness witness;  // A -> canonical_matrix(form)
};

enum class MCase { Case1, Case22, Char2Sep };

struct MValue {
  long m;
  KElem r;
};

struct ClassNumber {
  long count;
  bool lower_bound;
};

struct Triangularization {
  GL2Witness u;
  Mat2 t;
};

CanonForm classify(const Ring& ring, const Mat2& a);
Classification classify_with_witness(const Ring& ring, const Mat2& a);
Mat2 canonical_matrix(const CanonForm& form);
MValue compute_m(const Ring& ring, const MonicPoly& f, MCase which);
std::vector<CanonForm> class_list(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound = {});
ClassNumber class_number(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound = {});
bool similar(const Ring& ring, const Mat2& a, const Mat2& b);
std::optional<GL2Witness> witness(const Ring& ring, const Mat2& a, const Mat2& b);
Triangularization triangularize(const Ring& ring, const Mat2& a, const KElem& lambda1, const KElem& lambda2);
CanonForm reducible_normalize(const Ring& ring, const KElem& lambda1, const KElem& lambda2, const KElem& tau_raw);
std::vector<IdealBasis> ideal_reps(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound = {});

// Integral U with U*A = B*U and unit determinant, found from the R-lattice of
// all intertwiners. Complete for 2x2 matrices.
std::optional<Mat2> find_conjugator(const Ring& ring, const Mat2& a, const Mat2& b);

// 2 a unit, f irreducible: k by explicit conjugation; u receives the conjugator
long unit2_k_by_reduction(const Ring& ring, const Mat2& a, Mat2* u = nullptr);
// same k read off the ideal attached to a
long unit2_k_from_ideal(const Ring& ring, const Mat2& a);

}  // namespace simclass
