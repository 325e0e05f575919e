#include "simclass/quad_classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace simclass {

namespace {

constexpr std::size_t kTowerLimit = 1'000'000;

KElem half(const Ring& ring, const KElem& x) { return ring.div(x, ring.from_int(2)); }

KElem delta_of(const Ring& ring, const MonicPoly& f) {
  KElem h = half(ring, quad_a(ring, f));
  return ring.add(ring.mul(h, h), quad_b(ring, f));
}

// b - r(r+a)
KElem t_of(const Ring& ring, const KElem& a, const KElem& b, const KElem& r) {
  return ring.sub(b, ring.mul(r, ring.add(r, a)));
}

long finite(const Val& v) { return v.value(); }

// S_j = residues mod pi^{modulus(j)} satisfying pred(j, .), built level by level
// as lifts of S_{j-1}. Stops at the first empty level or at max_level.
std::vector<std::vector<KElem>> tower(const Ring& ring, long max_level, const std::function<long(long)>& modulus,
                                      const std::function<bool(long, const KElem&)>& pred) {
  std::vector<std::vector<KElem>> levels{{ring.zero()}};
  for (long j = 1; j <= max_level; ++j) {
    long lo = modulus(j - 1), hi = modulus(j);
    auto deltas = ring.residues(hi - lo);
    KElem shift = ring.pi_pow(lo);
    std::vector<KElem> next;
    for (const auto& s : levels.back()) {
      for (const auto& d : deltas) {
        KElem r = ring.residue(ring.add(s, ring.mul(shift, d)), hi);
        if (pred(j, r)) next.push_back(r);
        if (next.size() > kTowerLimit) throw Error(ErrorKind::BudgetExceeded, "residue search too large");
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

struct InsepParams {
  KElem u, s;
};

std::optional<InsepParams> insep_params(const Ring& ring, const KElem& b, long i) {
  auto levels = tower(
      ring, i, [](long j) { return j; },
      [&](long j, const KElem& u) { return ring.val(ring.sub(b, ring.mul(u, u))) >= 2 * j; });
  if (static_cast<long>(levels.size()) <= i) return std::nullopt;
  KElem u = levels[static_cast<std::size_t>(i)].front();
  KElem s = ring.div(ring.sub(b, ring.mul(u, u)), ring.pi_pow(i));
  return InsepParams{u, s};
}

enum class Branch { Reducible, Unit2, Case1, Case21, Case22, Char2Sep, Insep };

Branch branch_of(const Ring& ring, const MonicPoly& f, const QuadFactorization& fac) {
  if (fac.reducible) return Branch::Reducible;
  if (ring.characteristic() == 2) return ring.is_zero(quad_a(ring, f)) ? Branch::Insep : Branch::Char2Sep;
  Val e = ring.two_valuation();
  if (e == 0) return Branch::Unit2;
  if (ring.val(quad_a(ring, f)) < e) return Branch::Case1;
  return finite(ring.val(delta_of(ring, f))) % 2 ? Branch::Case21 : Branch::Case22;
}

void require_quadratic_over_r(const Ring& ring, const MonicPoly& f) {
  if (f.degree() != 2) throw Error(ErrorKind::InvalidParams, "expected a monic quadratic");
  if (!is_over_r(ring, f)) throw Error(ErrorKind::NotIntegral, "polynomial coefficients must lie in R");
}

std::string fmt_params(const Ring& ring, const FormParams& p) {
  auto e = [&](const KElem& x) { return ring.format(x); };
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ReducibleForm>)
          return "Reducible{lambda1=" + e(v.lambda1) + ",lambda2=" + e(v.lambda2) + ",tau=" + e(v.tau) + "}";
        else if constexpr (std::is_same_v<T, Unit2Form>)
          return "Unit2{k=" + std::to_string(v.k) + "}";
        else if constexpr (std::is_same_v<T, Case1Form>)
          return "Case1{r=" + e(v.r) + ",i=" + std::to_string(v.i) + "}";
        else if constexpr (std::is_same_v<T, Case21Form>)
          return "Case21{n=" + std::to_string(v.n) + "}";
        else if constexpr (std::is_same_v<T, Case22MainForm>)
          return "Case22Main{n=" + std::to_string(v.n) + "}";
        else if constexpr (std::is_same_v<T, Case22ExtraForm>)
          return "Case22Extra{r=" + e(v.r) + ",i=" + std::to_string(v.i) + "}";
        else if constexpr (std::is_same_v<T, Char2SepForm>)
          return "Char2Sep{r=" + e(v.r) + ",i=" + std::to_string(v.i) + "}";
        else
          return "Insep{i=" + std::to_string(v.i) + ",u=" + e(v.u) + ",s=" + e(v.s) + "}";
      },
      p);
}

// R-basis of (span of vecs) intersected with R^n
std::vector<KVec> saturate(const Ring& ring, std::vector<KVec> vecs) {
  auto primitive = [&](KVec& v) {
    Val m = Val::inf();
    for (const auto& x : v) m = std::min(m, ring.val(x));
    if (m.is_inf() || m == 0) return;
    KElem s = ring.pi_pow(-m.value());
    for (auto& x : v) x = ring.mul(x, s);
  };
  for (auto& v : vecs) primitive(v);
  std::vector<KVec> out;
  while (!vecs.empty()) {
    KVec w = vecs.front();
    vecs.erase(vecs.begin());
    std::size_t c = 0;
    while (c < w.size() && !(ring.val(w[c]) == 0)) ++c;
    if (c == w.size()) throw std::logic_error("saturation lost a unit pivot");
    KElem inv = ring.inv(w[c]);
    for (auto& o : vecs) {
      KElem factor = ring.mul(o[c], inv);
      for (std::size_t k = 0; k < o.size(); ++k) o[k] = ring.sub(o[k], ring.mul(factor, w[k]));
      primitive(o);
    }
    out.push_back(std::move(w));
  }
  return out;
}

Mat2 vec_to_mat(const KVec& v) { return mat2(v[0], v[1], v[2], v[3]); }

}  // namespace

std::string CanonForm::label() const { return fmt_params(ring, params); }

std::optional<Mat2> find_conjugator(const Ring& ring, const Mat2& a, const Mat2& b) {
  if (!(m2_char_poly(ring, a) == m2_char_poly(ring, b))) return std::nullopt;
  auto s = [&](const KElem& x, const KElem& y) { return ring.sub(x, y); };
  KElem z = ring.zero();
  KMat m{{s(a(0, 0), b(0, 0)), a(1, 0), ring.neg(b(0, 1)), z},
         {a(0, 1), s(a(1, 1), b(0, 0)), z, ring.neg(b(0, 1))},
         {ring.neg(b(1, 0)), z, s(a(0, 0), b(1, 1)), a(1, 0)},
         {z, ring.neg(b(1, 0)), a(0, 1), s(a(1, 1), b(1, 1))}};
  auto kernel = kmat_kernel(ring, m);
  if (kernel.empty()) return std::nullopt;
  auto lattice = saturate(ring, kernel);
  // det is a quadratic form on the lattice; it is nonzero mod pi somewhere
  // iff it is nonzero at some e_i or e_i + e_j
  std::vector<Mat2> candidates;
  for (const auto& v : lattice) candidates.push_back(vec_to_mat(v));
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      candidates.push_back(m2_add(ring, vec_to_mat(lattice[i]), vec_to_mat(lattice[j])));
  for (const auto& u : candidates)
    if (m2_is_conjugator(ring, u, a, b)) return u;
  return std::nullopt;
}

MValue compute_m(const Ring& ring, const MonicPoly& f, MCase which) {
  require_quadratic_over_r(ring, f);
  KElem a = quad_a(ring, f), b = quad_b(ring, f);
  Val e = ring.two_valuation();
  if (which == MCase::Case22) {
    if (!(e > 0) || e.is_inf() || ring.val(a) < e)
      throw Error(ErrorKind::InvalidParams, "case 2.2 needs 0 < v(2) < inf and v(a) >= v(2)");
    KElem delta = delta_of(ring, f);
    Val vd = ring.val(delta);
    if (vd.is_inf() || vd.value() % 2) throw Error(ErrorKind::InvalidParams, "case 2.2 needs v(Delta) even");
    long h = vd.value() / 2;
    KElem delta0 = ring.div(delta, ring.pi_pow(2 * h));
    auto levels = tower(
        ring, e.value(), [](long j) { return 2 * j; },
        [&](long j, const KElem& r0) { return ring.val(ring.sub(delta0, ring.mul(r0, r0))) >= 2 * j; });
    long m = static_cast<long>(levels.size()) - 1;
    KElem r = m == 0 ? ring.zero() : ring.mul(ring.pi_pow(h), levels.back().front());
    return MValue{m, r};
  }
  Val va = ring.val(a);
  if (which == MCase::Case1) {
    if (!(e > 0) || e.is_inf() || !(va < e)) throw Error(ErrorKind::InvalidParams, "case 1 needs v(a) < v(2) < inf");
  } else if (ring.characteristic() != 2 || va.is_inf()) {
    throw Error(ErrorKind::InvalidParams, "separable characteristic-2 case needs char 2 and a != 0");
  }
  auto levels = tower(
      ring, va.value(), [](long j) { return 2 * j; },
      [&](long j, const KElem& r) { return ring.val(t_of(ring, a, b, r)) >= 2 * j; });
  return MValue{static_cast<long>(levels.size()) - 1, levels.back().front()};
}

Mat2 canonical_matrix(const CanonForm& form) {
  const Ring& ring = form.ring;
  const MonicPoly& f = form.f;
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidParams, why); };
  require_quadratic_over_r(ring, f);
  KElem a = quad_a(ring, f), b = quad_b(ring, f);
  return std::visit(
      [&](const auto& v) -> Mat2 {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ReducibleForm>) {
          if (!(ring.add(v.lambda1, v.lambda2) == a) || !(ring.mul(v.lambda1, v.lambda2) == ring.neg(b)))
            throw bad("roots do not match f");
          if (ring.val(v.lambda1) < ring.val(v.lambda2)) throw bad("need v(lambda1) >= v(lambda2)");
          if (ring.is_zero(v.tau)) {
            if (!(v.lambda1 == v.lambda2)) throw bad("tau = 0 only for equal roots");
          } else {
            Val vt = ring.val(v.tau);
            if (vt < 0 || !(ring.pi_pow(vt.value()) == v.tau)) throw bad("tau must be a power of pi");
            if (vt > ring.val(ring.sub(v.lambda1, v.lambda2))) throw bad("tau beyond v(lambda1 - lambda2)");
          }
          return mat2(v.lambda1, v.tau, ring.zero(), v.lambda2);
        } else if constexpr (std::is_same_v<T, Unit2Form> || std::is_same_v<T, Case21Form> ||
                             std::is_same_v<T, Case22MainForm>) {
          long k;
          if constexpr (std::is_same_v<T, Unit2Form>) {
            if (!(v.a == a) || !(v.b == b)) throw bad("a, b do not match f");
            if (!(ring.two_valuation() == 0)) throw bad("Unit2 needs 2 to be a unit");
            k = v.k;
          } else {
            k = v.n;
          }
          KElem delta = delta_of(ring, f);
          if (k < 0 || ring.val(delta) < 2 * k) throw bad("need v(Delta) >= 2k >= 0");
          KElem h = half(ring, a);
          return mat2(h, ring.pi_pow(k), ring.div(delta, ring.pi_pow(k)), h);
        } else if constexpr (std::is_same_v<T, Case1Form> || std::is_same_v<T, Char2SepForm>) {
          KElem t = t_of(ring, a, b, v.r);
          if (v.i < 0 || !ring.is_integral(v.r) || ring.val(t) < 2 * v.i || ring.val(a) < v.i)
            throw bad("need v(b - r(r+a)) >= 2i and i <= v(a)");
          return mat2(ring.neg(v.r), ring.pi_pow(v.i), ring.div(t, ring.pi_pow(v.i)), ring.add(a, v.r));
        } else if constexpr (std::is_same_v<T, Case22ExtraForm>) {
          KElem delta = delta_of(ring, f);
          Val vd = ring.val(delta);
          if (vd.is_inf() || vd.value() % 2) throw bad("need v(Delta) even");
          long h = vd.value() / 2;
          KElem d = ring.sub(delta, ring.mul(v.r, v.r));
          if (v.i < 1 || v.i > ring.two_valuation() || ring.val(d) < vd.value() + 2 * v.i || !(ring.val(v.r) == h))
            throw bad("need v(Delta - r^2) >= v(Delta) + 2i, 1 <= i <= v(2)");
          KElem p = ring.pi_pow(h + v.i);
          KElem hh = half(ring, a);
          return mat2(ring.sub(hh, v.r), p, ring.div(d, p), ring.add(hh, v.r));
        } else {
          if (v.i < 0 || !ring.is_integral(v.u) || ring.val(v.s) < v.i)
            throw bad("need v(s) >= i >= 0");
          if (!(ring.add(ring.mul(v.u, v.u), ring.mul(v.s, ring.pi_pow(v.i))) == b)) throw bad("need u^2 + s pi^i = b");
          return mat2(v.u, v.s, ring.pi_pow(v.i), v.u);
        }
      },
      form.params);
}

Triangularization triangularize(const Ring& ring, const Mat2& a, const KElem& lambda1, const KElem& lambda2) {
  if (!(m2_char_poly(ring, a) ==
        make_quadratic(ring, ring.add(lambda1, lambda2), ring.neg(ring.mul(lambda1, lambda2)))))
    throw Error(ErrorKind::InvalidParams, "roots do not match the characteristic polynomial");
  if (m2_is_scalar(ring, a)) return {GL2Witness{m2_identity(ring)}, a};
  Mat2 shifted = m2_sub(ring, a, m2_scalar(ring, lambda2));
  auto ker = kmat_kernel(ring, m2_to_kmat(m2_transpose(shifted)));
  KVec u = saturate(ring, {ker.front()}).front();
  Mat2 U = ring.is_unit(u[1]) ? mat2(ring.one(), ring.zero(), u[0], u[1]) : mat2(ring.zero(), ring.one(), u[0], u[1]);
  Mat2 t = m2_mul(ring, m2_mul(ring, U, a), *m2_inverse(ring, U));
  if (!ring.is_zero(t(1, 0)) || !(t(0, 0) == lambda1) || !(t(1, 1) == lambda2) || !m2_is_conjugator(ring, U, a, t))
    throw std::logic_error("triangularization failed verification");
  return {GL2Witness{U}, t};
}

CanonForm reducible_normalize(const Ring& ring, const KElem& lambda1, const KElem& lambda2, const KElem& tau_raw) {
  if (ring.val(lambda1) < ring.val(lambda2)) throw Error(ErrorKind::InvalidParams, "need v(lambda1) >= v(lambda2)");
  MonicPoly f = make_quadratic(ring, ring.add(lambda1, lambda2), ring.neg(ring.mul(lambda1, lambda2)));
  KElem tau;
  if (lambda1 == lambda2) {
    tau = ring.is_zero(tau_raw) ? ring.zero() : ring.pi_pow(ring.val(tau_raw).value());
  } else {
    Val v = std::min(ring.val(tau_raw), ring.val(ring.sub(lambda1, lambda2)));
    tau = ring.pi_pow(v.value());
  }
  return CanonForm{ring, f, ReducibleForm{lambda1, lambda2, tau}};
}

long unit2_k_by_reduction(const Ring& ring, const Mat2& a, Mat2* u_out) {
  if (!(ring.two_valuation() == 0)) throw Error(ErrorKind::InvalidParams, "2 must be a unit");
  MonicPoly f = m2_char_poly(ring, a);
  if (quad_factor(ring, f).reducible) throw Error(ErrorKind::NotIrreducible, "characteristic polynomial is reducible");
  KElem h = half(ring, quad_a(ring, f));
  Mat2 cur = m2_sub(ring, a, m2_scalar(ring, h));
  Mat2 u = m2_identity(ring);
  auto apply = [&](const Mat2& x) {
    cur = m2_mul(ring, m2_mul(ring, x, cur), *m2_inverse(ring, x));
    u = m2_mul(ring, x, u);
  };
  KElem o = ring.one(), z = ring.zero();
  if (ring.val(cur(1, 0)) < ring.val(cur(0, 1)) && ring.val(cur(1, 0)) <= ring.val(cur(0, 0)))
    apply(mat2(z, o, o, z));
  if (ring.val(cur(0, 0)) < ring.val(cur(0, 1)) && ring.val(cur(0, 0)) < ring.val(cur(1, 0)))
    apply(mat2(o, o, z, o));
  apply(mat2(o, z, ring.div(cur(0, 0), cur(0, 1)), o));
  long k = ring.val(cur(0, 1)).value();
  apply(mat2(o, z, z, ring.div(cur(0, 1), ring.pi_pow(k))));
  KElem delta = delta_of(ring, f);
  if (!(cur == mat2(z, ring.pi_pow(k), ring.div(delta, ring.pi_pow(k)), z)))
    throw std::logic_error("unit-2 reduction did not reach the canonical shape");
  if (u_out) *u_out = u;
  return k;
}

long unit2_k_from_ideal(const Ring& ring, const Mat2& a) {
  MonicPoly f = m2_char_poly(ring, a);
  IdealBasis j = matrix_to_ideal(Coefficients::dvr(ring), f, m2_to_kmat(a));
  KElem h = half(ring, quad_a(ring, f));
  // coordinates in (1, theta - a/2)
  std::vector<std::pair<KElem, KElem>> rows;
  for (const auto& v : j.basis) rows.emplace_back(ring.add(v[0], ring.mul(v[1], h)), v[1]);
  if (ring.val(rows[1].second) < ring.val(rows[0].second)) std::swap(rows[0], rows[1]);
  auto [r, s] = rows[0];
  KElem q = ring.sub(rows[1].first, ring.mul(ring.div(rows[1].second, s), r));
  long n = ring.val(q).value() - ring.val(s).value();
  KElem rp = ring.div(r, s);
  KElem delta = delta_of(ring, f);
  Val k = std::min({ring.val(rp), Val::of(n), Val::of(ring.val(ring.sub(delta, ring.mul(rp, rp))).value() - n)});
  return k.value();
}

Classification classify_with_witness(const Ring& ring, const Mat2& a) {
  if (!m2_is_integral(ring, a)) throw Error(ErrorKind::NotIntegral, "matrix entries must lie in R");
  MonicPoly f = m2_char_poly(ring, a);
  QuadFactorization fac = quad_factor(ring, f);
  KElem qa = quad_a(ring, f), qb = quad_b(ring, f);
  std::optional<Mat2> u;
  FormParams params;
  switch (branch_of(ring, f, fac)) {
    case Branch::Reducible: {
      Triangularization tri = triangularize(ring, a, fac.lambda1, fac.lambda2);
      params = reducible_normalize(ring, fac.lambda1, fac.lambda2, tri.t(0, 1)).params;
      break;
    }
    case Branch::Unit2: {
      Mat2 w;
      long k = unit2_k_by_reduction(ring, a, &w);
      u = w;
      params = Unit2Form{qa, qb, k};
      break;
    }
    case Branch::Case1:
    case Branch::Char2Sep: {
      bool c1 = ring.characteristic() != 2;
      MValue mv = compute_m(ring, f, c1 ? MCase::Case1 : MCase::Char2Sep);
      long i = m2_content(ring, m2_add(ring, a, m2_scalar(ring, mv.r))).value();
      if (c1)
        params = Case1Form{mv.r, i};
      else
        params = Char2SepForm{mv.r, i};
      break;
    }
    case Branch::Case21:
      params = Case21Form{m2_content(ring, m2_sub(ring, a, m2_scalar(ring, half(ring, qa)))).value()};
      break;
    case Branch::Case22: {
      MValue mv = compute_m(ring, f, MCase::Case22);
      long h = ring.val(delta_of(ring, f)).value() / 2;
      Mat2 shifted = m2_sub(ring, a, m2_scalar(ring, ring.sub(half(ring, qa), mv.r)));
      long c = m2_content(ring, mv.m == 0 ? m2_sub(ring, a, m2_scalar(ring, half(ring, qa))) : shifted).value();
      if (c <= h)
        params = Case22MainForm{c};
      else
        params = Case22ExtraForm{mv.r, c - h};
      break;
    }
    case Branch::Insep: {
      long i = std::min(ring.val(a(0, 1)), ring.val(a(1, 0))).value();
      auto ip = insep_params(ring, qb, i);
      if (!ip) throw std::logic_error("inseparable class parameters not found");
      params = InsepForm{i, ip->u, ip->s};
      break;
    }
  }
  CanonForm form{ring, f, params};
  Mat2 c = canonical_matrix(form);
  if (!u) u = find_conjugator(ring, a, c);
  if (!u || !m2_is_conjugator(ring, *u, a, c))
    throw std::logic_error("classification produced an unverified canonical form: " + form.label());
  return Classification{form, GL2Witness{*u}};
}

CanonForm classify(const Ring& ring, const Mat2& a) { return classify_with_witness(ring, a).form; }

bool similar(const Ring& ring, const Mat2& a, const Mat2& b) {
  if (!(m2_char_poly(ring, a) == m2_char_poly(ring, b))) return false;
  return classify(ring, a) == classify(ring, b);
}

std::optional<GL2Witness> witness(const Ring& ring, const Mat2& a, const Mat2& b) {
  if (!(m2_char_poly(ring, a) == m2_char_poly(ring, b))) return std::nullopt;
  Classification ca = classify_with_witness(ring, a);
  Classification cb = classify_with_witness(ring, b);
  if (!(ca.form == cb.form)) return std::nullopt;
  Mat2 u = m2_mul(ring, *m2_inverse(ring, cb.witness.u), ca.witness.u);
  if (!m2_is_conjugator(ring, u, a, b)) throw std::logic_error("composed witness failed verification");
  return GL2Witness{u};
}

std::vector<CanonForm> class_list(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound) {
  require_quadratic_over_r(ring, f);
  QuadFactorization fac = quad_factor(ring, f);
  KElem a = quad_a(ring, f), b = quad_b(ring, f);
  std::vector<CanonForm> out;
  auto push = [&](FormParams p) { out.push_back(CanonForm{ring, f, std::move(p)}); };
  switch (branch_of(ring, f, fac)) {
    case Branch::Reducible: {
      if (fac.lambda1 == fac.lambda2) {
        if (!insep_bound) throw Error(ErrorKind::InsepBoundRequired, "a double root gives infinitely many classes");
        push(ReducibleForm{fac.lambda1, fac.lambda2, ring.zero()});
        for (long j = 0; j <= *insep_bound; ++j) push(ReducibleForm{fac.lambda1, fac.lambda2, ring.pi_pow(j)});
      } else {
        long top = ring.val(ring.sub(fac.lambda1, fac.lambda2)).value();
        for (long j = 0; j <= top; ++j) push(ReducibleForm{fac.lambda1, fac.lambda2, ring.pi_pow(j)});
      }
      break;
    }
    case Branch::Unit2: {
      long top = ring.val(delta_of(ring, f)).value() / 2;
      for (long k = 0; k <= top; ++k) push(Unit2Form{a, b, k});
      break;
    }
    case Branch::Case1:
    case Branch::Char2Sep: {
      bool c1 = ring.characteristic() != 2;
      MValue mv = compute_m(ring, f, c1 ? MCase::Case1 : MCase::Char2Sep);
      for (long i = 0; i <= mv.m; ++i) {
        if (c1)
          push(Case1Form{mv.r, i});
        else
          push(Char2SepForm{mv.r, i});
      }
      break;
    }
    case Branch::Case21: {
      long top = ring.val(delta_of(ring, f)).value() / 2;
      for (long n = 0; n <= top; ++n) push(Case21Form{n});
      break;
    }
    case Branch::Case22: {
      long h = ring.val(delta_of(ring, f)).value() / 2;
      MValue mv = compute_m(ring, f, MCase::Case22);
      for (long n = 0; n <= h; ++n) push(Case22MainForm{n});
      for (long i = 1; i <= mv.m; ++i) push(Case22ExtraForm{mv.r, i});
      break;
    }
    case Branch::Insep: {
      if (!insep_bound) throw Error(ErrorKind::InsepBoundRequired, "inseparable f needs a bound on i");
      auto levels = tower(
          ring, *insep_bound, [](long j) { return j; },
          [&](long j, const KElem& u) { return ring.val(ring.sub(b, ring.mul(u, u))) >= 2 * j; });
      for (std::size_t i = 0; i < levels.size(); ++i) {
        KElem u = levels[i].front();
        long ii = static_cast<long>(i);
        push(InsepForm{ii, u, ring.div(ring.sub(b, ring.mul(u, u)), ring.pi_pow(ii))});
      }
      break;
    }
  }
  return out;
}

ClassNumber class_number(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound) {
  require_quadratic_over_r(ring, f);
  QuadFactorization fac = quad_factor(ring, f);
  switch (branch_of(ring, f, fac)) {
    case Branch::Reducible:
      return ClassNumber{static_cast<long>(class_list(ring, f, insep_bound).size()), fac.lambda1 == fac.lambda2};
    case Branch::Unit2:
    case Branch::Case21:
      return ClassNumber{ring.val(delta_of(ring, f)).value() / 2 + 1, false};
    case Branch::Case1:
      return ClassNumber{compute_m(ring, f, MCase::Case1).m + 1, false};
    case Branch::Char2Sep:
      return ClassNumber{compute_m(ring, f, MCase::Char2Sep).m + 1, false};
    case Branch::Case22:
      return ClassNumber{ring.val(delta_of(ring, f)).value() / 2 + compute_m(ring, f, MCase::Case22).m + 1, false};
    case Branch::Insep:
      return ClassNumber{static_cast<long>(class_list(ring, f, insep_bound).size()), true};
  }
  throw std::logic_error("unreachable");
}

std::vector<IdealBasis> ideal_reps(const Ring& ring, const MonicPoly& f, std::optional<long> insep_bound) {
  require_quadratic_over_r(ring, f);
  if (quad_factor(ring, f).reducible) throw Error(ErrorKind::NotIrreducible, "ideal representatives need f irreducible");
  KElem a = quad_a(ring, f);
  Coefficients coeffs = Coefficients::dvr(ring);
  std::vector<IdealBasis> out;
  auto push = [&](const KElem& first, const KElem& shift) {
    out.push_back(IdealBasis{coeffs, f, {KVec{first, ring.zero()}, KVec{shift, ring.one()}}, ring.one()});
  };
  for (const auto& form : class_list(ring, f, insep_bound)) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          KElem ha = ring.characteristic() == 2 ? ring.zero() : half(ring, a);
          if constexpr (std::is_same_v<T, Unit2Form>)
            push(ring.pi_pow(v.k), ring.neg(ha));
          else if constexpr (std::is_same_v<T, Case21Form> || std::is_same_v<T, Case22MainForm>)
            push(ring.pi_pow(v.n), ring.neg(ha));
          else if constexpr (std::is_same_v<T, Case1Form> || std::is_same_v<T, Char2SepForm>)
            push(ring.pi_pow(v.i), v.r);
          else if constexpr (std::is_same_v<T, Case22ExtraForm>) {
            long h = ring.val(delta_of(ring, f)).value() / 2;
            push(ring.pi_pow(h + v.i), ring.sub(v.r, ha));
          } else if constexpr (std::is_same_v<T, InsepForm>)
            push(v.s, v.u);
        },
        form.params);
  }
  return out;
}

}  // namespace simclass
