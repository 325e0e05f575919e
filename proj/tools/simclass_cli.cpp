// simclass_cli: similarity classes of 2x2 matrices, ideal correspondences and
// lattice freeness. Reads one JSON job, writes one JSON document.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "simclass/dedekind_lattice.hpp"
#include "simclass/lm_correspondence.hpp"
#include "simclass/oracle.hpp"
#include "simclass/quad_classify.hpp"

using json = nlohmann::json;
using namespace simclass;

namespace {

struct Options {
  std::string ring;
  std::string in = "-";
  std::string out = "-";
  std::optional<long> insep_bound;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::optional<long> cross_check;
};

// malformed job document; exit code 2
struct JobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw JobError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JobError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JobError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw JobError("expected a string or integer, got " + v.dump());
}

long as_long(const json& v, const char* what) {
  if (!v.is_number_integer()) throw JobError(std::string(what) + " must be an integer");
  return v.get<long>();
}

// {"kind":"Z"} is accepted only where integer matrices make sense
struct RingSpec {
  bool integers = false;
  std::optional<Ring> ring;
};

Ring ring_from_json(const json& j) {
  std::string kind = as_text(field(j, "kind"));
  if (kind == "ZLoc") return Ring::zloc(static_cast<u64>(as_long(field(j, "p"), "p")));
  if (kind == "FpTLoc") return Ring::fptloc(static_cast<u64>(as_long(field(j, "p"), "p")));
  if (kind == "QuadExt") {
    Ring base = ring_from_json(field(j, "base"));
    MonicPoly g = parse_monic(base, as_text(field(j, "minpoly")));
    std::string ram = j.contains("ramification") ? as_text(j.at("ramification")) : "unramified";
    Ramification r;
    if (ram == "unramified")
      r = Ramification::Unramified;
    else if (ram == "eisenstein")
      r = Ramification::Eisenstein;
    else
      throw JobError("unknown ramification '" + ram + "'");
    if (g.degree() != 2) throw Error(ErrorKind::InvalidRing, "extension minpoly must be quadratic");
    return Ring::quad_ext(base, quad_a(base, g), quad_b(base, g), r);
  }
  throw JobError("unknown ring kind '" + kind + "'");
}

RingSpec ring_spec(const json& job, const Options& opt) {
  json rj;
  if (!opt.ring.empty()) {
    std::string text = opt.ring;
    if (!text.empty() && text.front() != '{') text = slurp(text);
    rj = parse_json(text);
  } else {
    rj = field(job, "ring");
  }
  if (rj.is_object() && rj.contains("kind") && rj.at("kind") == "Z") return RingSpec{true, std::nullopt};
  return RingSpec{false, ring_from_json(rj)};
}

Ring need_dvr(const RingSpec& rs) {
  if (!rs.ring) throw Error(ErrorKind::UnsupportedRing, "this command needs a DVR instance");
  return *rs.ring;
}

Mat2 mat_from_json(const Ring& ring, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
    throw JobError("matrix must be a 2x2 array");
  return mat2(ring.parse(as_text(j[0][0])), ring.parse(as_text(j[0][1])), ring.parse(as_text(j[1][0])),
              ring.parse(as_text(j[1][1])));
}

KMat kmat_from_json(const Ring& ring, const json& j) {
  if (!j.is_array() || j.empty()) throw JobError("matrix must be a nonempty array of rows");
  KMat m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw JobError("matrix must be square");
    KVec r;
    for (const auto& x : row) r.push_back(ring.parse(as_text(x)));
    m.push_back(r);
  }
  return m;
}

json mat_json(const Ring& ring, const Mat2& m) {
  return json::array({json::array({ring.format(m(0, 0)), ring.format(m(0, 1))}),
                      json::array({ring.format(m(1, 0)), ring.format(m(1, 1))})});
}

json kmat_json(const Ring& ring, const KMat& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(ring.format(x));
    out.push_back(r);
  }
  return out;
}

json rmat_json(const RMat2& m) {
  return json::array({json::array({qn_format(m[0]), qn_format(m[1])}), json::array({qn_format(m[2]), qn_format(m[3])})});
}

json lelem_json(const LElem& e) {
  json out = json::array();
  for (const auto& c : lelem_coords(e)) out.push_back(c.get_str());
  return out;
}

// the CLI re-checks every witness itself before printing it
void recheck(const Ring& ring, const Mat2& u, const Mat2& a, const Mat2& b) {
  if (!m2_is_integral(ring, u) || !ring.is_unit(m2_det(ring, u)) || !(m2_mul(ring, u, a) == m2_mul(ring, b, u)))
    throw std::logic_error("witness failed re-verification");
}

json oracle_json(const Ring& ring, const Mat2& a, const Mat2& b, long n, std::uint64_t budget) {
  auto w = conj_search_mod(ring, a, b, n, budget);
  json o{{"N", n}, {"found", w.has_value()}};
  if (w) o["witness"] = mat_json(ring, w->u);
  return o;
}

json cmd_classify(const json& job, const Options& opt) {
  Ring ring = need_dvr(ring_spec(job, opt));
  Mat2 a = mat_from_json(ring, field(job, "A"));
  Classification c = classify_with_witness(ring, a);
  Mat2 canon = canonical_matrix(c.form);
  recheck(ring, c.witness.u, a, canon);
  return json{{"form", c.form.label()},
              {"char_poly", format_poly(ring, c.form.f)},
              {"canonical_matrix", mat_json(ring, canon)},
              {"witness", mat_json(ring, c.witness.u)},
              {"verified", true}};
}

json cmd_similar(const json& job, const Options& opt, bool want_witness) {
  Ring ring = need_dvr(ring_spec(job, opt));
  Mat2 a = mat_from_json(ring, field(job, "A"));
  Mat2 b = mat_from_json(ring, field(job, "B"));
  json out;
  auto w = witness(ring, a, b);
  if (w) recheck(ring, w->u, a, b);
  if (want_witness) {
    out["witness"] = w ? mat_json(ring, w->u) : json(nullptr);
  } else {
    out["similar"] = w.has_value();
    if (w) out["witness"] = mat_json(ring, w->u);
  }
  if (m2_char_poly(ring, a) == m2_char_poly(ring, b)) {
    out["forms"] = json::array({classify(ring, a).label(), classify(ring, b).label()});
  } else {
    out["char_polys"] = json::array({format_poly(ring, m2_char_poly(ring, a)), format_poly(ring, m2_char_poly(ring, b))});
  }
  if (opt.cross_check) {
    json o = oracle_json(ring, a, b, *opt.cross_check, opt.oracle_budget);
    if (w && !o["found"].get<bool>()) throw std::logic_error("oracle contradicts an exact witness");
    out["oracle"] = o;
  }
  out["verified"] = true;
  return out;
}

json cmd_class_list(const json& job, const Options& opt) {
  Ring ring = need_dvr(ring_spec(job, opt));
  MonicPoly f = parse_monic(ring, as_text(field(job, "f")));
  std::optional<long> bound = opt.insep_bound;
  if (!bound && job.contains("insep_bound")) bound = as_long(job.at("insep_bound"), "insep_bound");
  json classes = json::array();
  for (const auto& form : class_list(ring, f, bound)) {
    Mat2 m = canonical_matrix(form);
    if (!(classify(ring, m) == form)) throw std::logic_error("canonical matrix does not classify back");
    classes.push_back(json{{"form", form.label()}, {"matrix", mat_json(ring, m)}});
  }
  return json{{"classes", classes}, {"count", classes.size()}, {"verified", true}};
}

json cmd_class_number(const json& job, const Options& opt) {
  Ring ring = need_dvr(ring_spec(job, opt));
  MonicPoly f = parse_monic(ring, as_text(field(job, "f")));
  std::optional<long> bound = opt.insep_bound;
  if (!bound && job.contains("insep_bound")) bound = as_long(job.at("insep_bound"), "insep_bound");
  ClassNumber cn = class_number(ring, f, bound);
  json out{{"class_number", cn.count}};
  if (cn.lower_bound) out["lower_bound"] = true;
  return out;
}

Coefficients coeffs_of(const RingSpec& rs) { return rs.integers ? Coefficients::integers() : Coefficients::dvr(*rs.ring); }

json cmd_lm_to_ideal(const json& job, const Options& opt) {
  Coefficients co = coeffs_of(ring_spec(job, opt));
  const Ring& k = co.field();
  MonicPoly f = parse_monic(k, as_text(field(job, "f")));
  KMat a = kmat_from_json(k, field(job, "A"));
  IdealBasis j = matrix_to_ideal(co, f, a);
  if (!check_theta_identity(j, a)) throw std::logic_error("theta identity failed");
  json out{{"basis", kmat_json(k, j.basis)}, {"scale", k.format(j.scale)}, {"verified", true}};
  if (co.is_integers() && f.degree() == 2) {
    mpq_class qa = std::get<mpq_class>(quad_a(k, f).x()), qb = std::get<mpq_class>(quad_b(k, f).x());
    if (qa * qa + 4 * qb < 0) {
      BQForm form = ideal_to_form(j);
      out["form"] = form.to_string();
      out["reduced_form"] = reduce_form(form).to_string();
    }
  }
  return out;
}

json cmd_lm_to_matrix(const json& job, const Options& opt) {
  Coefficients co = coeffs_of(ring_spec(job, opt));
  const Ring& k = co.field();
  MonicPoly f = parse_monic(k, as_text(field(job, "f")));
  IdealBasis j{co, f, kmat_from_json(k, field(job, "basis")), k.one()};
  KMat a = ideal_to_matrix(j);
  if (!(kmat_char_poly(k, a) == f) || !check_theta_identity(j, a)) throw std::logic_error("matrix failed re-verification");
  return json{{"matrix", kmat_json(k, a)}, {"verified", true}};
}

json cmd_lattice_free(const json& job) {
  QuadBase base = QuadBase::make(as_long(field(job, "d"), "d"));
  RelQuadPoly f = parse_rel_poly(base, as_text(field(job, "f")));
  std::vector<LElem> gens;
  const json& gj = field(job, "generators");
  if (!gj.is_array()) throw JobError("generators must be an array");
  for (const auto& g : gj) {
    if (!g.is_array() || g.size() != 4) throw JobError("each generator is 4 coordinates over (1, w, theta, w*theta)");
    std::array<mpq_class, 4> c;
    for (std::size_t i = 0; i < 4; ++i) {
      try {
        c[i] = mpq_class(as_text(g[i]));
        c[i].canonicalize();
      } catch (const std::invalid_argument&) {
        throw JobError("bad rational '" + as_text(g[i]) + "'");
      }
    }
    gens.push_back(lelem_from_coords(c));
  }
  LLattice j = lattice_from_generators(base, f, gens);
  FreeResult r = is_free(j);
  json out{{"free", r.free},
           {"steinitz", r.steinitz.to_string()},
           {"coefficient_ideal", r.coefficient.to_string()},
           {"intersection", r.intersection.to_string()},
           {"x0", lelem_json(r.x0)}};
  if (r.free) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(lelem_json(b));
    out["basis"] = basis;
    out["generator"] = qn_format(*r.generator);
    RMat2 a = mult_matrix(j, r.basis);
    out["matrix"] = rmat_json(a);
  }
  out["verified"] = true;
  return out;
}

json cmd_cross_check(const json& job, const Options& opt) {
  Ring ring = need_dvr(ring_spec(job, opt));
  Mat2 a = mat_from_json(ring, field(job, "A"));
  Mat2 b = mat_from_json(ring, field(job, "B"));
  long n = opt.cross_check.value_or(job.contains("N") ? as_long(job.at("N"), "N") : 3);
  bool sim = similar(ring, a, b);
  json o = oracle_json(ring, a, b, n, opt.oracle_budget);
  // one-sided: exact similarity must survive reduction mod pi^N
  bool consistent = !sim || o["found"].get<bool>();
  return json{{"similar", sim}, {"oracle", o}, {"consistent", consistent}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"similarity classes of 2x2 matrices over DVRs, ideal correspondences, lattice freeness"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> names{"classify",     "similar",     "witness",      "class-list",  "class-number",
                                       "lm-to-ideal",  "lm-to-matrix", "lattice-free", "cross-check"};
  for (const auto& n : names) {
    auto* sub = app.add_subcommand(n);
    sub->add_option("--ring", opt.ring, "ring as JSON text or a file holding it");
    sub->add_option("--in", opt.in, "job file, - for stdin");
    sub->add_option("--out", opt.out, "output file, - for stdout");
    sub->add_option("--insep-bound", opt.insep_bound, "bound on i for inseparable f");
    sub->add_option("--oracle-budget", opt.oracle_budget, "work budget of the residue search");
    sub->add_option("--cross-check", opt.cross_check, "also search mod pi^N")->expected(0, 1)->default_str("3");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  // a bare --cross-check takes the default precision
  if (app.get_subcommands().front()->count("--cross-check") && !opt.cross_check) opt.cross_check = 3;

  json result;
  try {
    json job = parse_json(slurp(opt.in));
    if (cmd == "classify")
      result = cmd_classify(job, opt);
    else if (cmd == "similar")
      result = cmd_similar(job, opt, false);
    else if (cmd == "witness")
      result = cmd_similar(job, opt, true);
    else if (cmd == "class-list")
      result = cmd_class_list(job, opt);
    else if (cmd == "class-number")
      result = cmd_class_number(job, opt);
    else if (cmd == "lm-to-ideal")
      result = cmd_lm_to_ideal(job, opt);
    else if (cmd == "lm-to-matrix")
      result = cmd_lm_to_matrix(job, opt);
    else if (cmd == "lattice-free")
      result = cmd_lattice_free(job);
    else
      result = cmd_cross_check(job, opt);
  } catch (const JobError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }

  std::string text = result.dump(2) + "\n";
  if (opt.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}
