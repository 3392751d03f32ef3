// dsturm command-line front end.
//
// Exit status: 0 success, 1 certified negative result, 2 input error,
// 3 numerical tolerance failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dsturm/battery.hpp"
#include "dsturm/chebsys.hpp"
#include "dsturm/classical.hpp"
#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/minimax.hpp"
#include "dsturm/oscillation.hpp"
#include "dsturm/spectrum.hpp"
#include "dsturm/version.hpp"
#include "dsturm/yudin.hpp"
#include "emit.hpp"

namespace dsturm::cli {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInput = 2;
constexpr int kNumerical = 3;

struct Output {
  std::string format = "json";
  std::string path;
};

struct FamilySelector {
  std::string family;
  double a = 0.0;
  double b = 0.0;
  std::string recurrence;
  int q = -1;
  double eta = 0.0;
  bool eta_at_b = false;
  double b_point = 1.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

// Inline JSON when the text starts with '[' or '{', otherwise a file path.
Json json_arg(const std::string& value, const std::string& what) {
  const auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && (value[first] == '[' || value[first] == '{')) {
    return parse_json(value, what);
  }
  return parse_json(read_file(value), what);
}

std::vector<double> real_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a JSON array");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) throw InputError(what + " must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> int_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a JSON array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError(what + " must contain only integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Json to_json(const std::vector<double>& v) { return Json(v); }

void add_selector(CLI::App* sub, FamilySelector& s, bool with_eta = true) {
  sub->add_option("--family", s.family,
                  "chebyshev-t, chebyshev-u, legendre, jacobi, jacobi-i .. jacobi-iv");
  sub->add_option("--a", s.a, "first Jacobi parameter (weight (1-t)^a)");
  sub->add_option("--b", s.b, "second Jacobi parameter (weight (1+t)^b)");
  sub->add_option("--recurrence", s.recurrence,
                  "recurrence tables as JSON (inline or file) with alpha, beta, gamma, rho, eta");
  sub->add_option("--q", s.q, "grid size q");
  if (with_eta) {
    sub->add_option("--eta", s.eta, "boundary parameter eta");
    sub->add_flag("--eta-at-b", s.eta_at_b, "set eta to P_{q+1}(b)/P_q(b)");
    sub->add_option("--b-point", s.b_point, "right end point b used by --eta-at-b");
  }
}

RecurrenceSystem resolve_system(const FamilySelector& s) {
  RecurrenceSystem sys;
  if (!s.recurrence.empty()) {
    if (!s.family.empty()) throw InputError("give either --family or --recurrence, not both");
    const Json j = json_arg(s.recurrence, "--recurrence");
    if (!j.is_object()) throw InputError("--recurrence must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key != "alpha" && key != "beta" && key != "gamma" && key != "rho" && key != "eta") {
        throw InputError("unknown recurrence field '" + key + "'");
      }
      (void)value;
    }
    sys.alpha = real_vector(j.at("alpha"), "alpha");
    sys.beta = real_vector(j.at("beta"), "beta");
    sys.gamma = real_vector(j.at("gamma"), "gamma");
    sys.rho = j.contains("rho") ? real_vector(j.at("rho"), "rho")
                                : std::vector<double>(sys.alpha.size(), 1.0);
    sys.q = static_cast<int>(sys.alpha.size()) - 1;
    sys.eta = j.value("eta", s.eta);
    if (s.q >= 0 && s.q != sys.q) throw InputError("--q disagrees with the recurrence length");
  } else {
    if (s.family.empty()) throw InputError("a --family or --recurrence is required");
    if (s.q < 0) throw InputError("--q is required with --family");
    sys = family_by_name(s.family, s.a, s.b).system(s.q, s.eta);
  }
  validate(sys);
  if (s.eta_at_b) sys.eta = eta_b(sys, s.b_point);
  return sys;
}

std::string selector_name(const FamilySelector& s) {
  if (!s.recurrence.empty()) return "recurrence";
  if (s.family == "jacobi") return family_by_name(s.family, s.a, s.b).name();
  return s.family;
}

Json header(const std::string& command) {
  Json j;
  j["tool"] = "dsturm";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

struct Emitted {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
  int status = kOk;
};

void emit(const Emitted& e, const Output& out) {
  std::string text;
  if (out.format == "json") {
    text = to_json_text(e.json);
  } else if (out.format == "csv") {
    if (e.csv_header.empty()) throw InputError("csv output is only available for coefficient sequences");
    text = to_csv(e.csv_header, e.csv_rows);
  } else {
    throw InputError("unknown format '" + out.format + "'");
  }
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path);
    if (!f) throw InputError("cannot write '" + out.path + "'");
    f << text;
  }
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  FamilySelector sel;
  bool psi = false;
};

Emitted run_spectrum(const SpectrumArgs& args) {
  const auto sys = resolve_system(args.sel);
  const auto spec = compute_spectrum(sys);
  Emitted e;
  e.json = header("spectrum");
  e.json["tolerances"] = {{"residual_rel", 1e-8}};
  e.json["family"] = selector_name(args.sel);
  e.json["q"] = sys.q;
  e.json["eta"] = sys.eta;
  e.json["lambdas"] = to_json(spec.lambdas);
  e.json["residuals"] = to_json(spec.residuals);
  e.json["boundary"] = to_json(spec.boundary);
  e.json["interlacing"] = interlacing_check(sys).pass;
  e.json["orthogonality_defect"] = discrete_orthogonality_check(sys, spec);
  if (args.psi) {
    Json rows = Json::array();
    for (const auto& row : spec.psi) rows.push_back(to_json(row));
    e.json["psi"] = rows;
  }
  e.csv_header = {"k", "lambda", "residual"};
  for (std::size_t k = 0; k < spec.lambdas.size(); ++k) {
    e.csv_rows.push_back({static_cast<double>(k + 1), spec.lambdas[k], spec.residuals[k]});
  }
  return e;
}

// ------------------------------------------------------------- oscillation

struct OscillationArgs {
  FamilySelector sel;
  std::string values;
  int k = 0;
  double sign_tol = 1e-9;
  bool differences = false;
  bool zero_after_end = false;
};

Json report_json(const OscillationReport& r) {
  Json j;
  j["N"] = r.N;
  j["N0"] = r.N0;
  j["S_minus"] = r.S_minus;
  j["S_plus"] = r.S_plus;
  Json zeros = Json::array();
  for (const auto& z : r.zeros) zeros.push_back({{"nu", z.nu}, {"type", to_string(z.type)}});
  j["zeros"] = zeros;
  Json iv = Json::array();
  for (const auto& i : r.intervals) {
    iv.push_back({{"first", i.first}, {"last", i.last}, {"type", to_string(i.type)}});
  }
  j["intervals"] = iv;
  return j;
}

Emitted run_oscillation(const OscillationArgs& args) {
  DiscreteFunction f;
  f.sign_tol = args.sign_tol;
  Emitted e;
  e.json = header("oscillation");
  e.json["tolerances"] = {{"sign_tol", args.sign_tol}};
  if (!args.values.empty()) {
    f.values = real_vector(json_arg(args.values, "--values"), "--values");
    if (f.values.empty()) throw InputError("--values must not be empty");
  } else {
    const auto sys = resolve_system(args.sel);
    const auto spec = compute_spectrum(sys);
    if (args.k < 1 || args.k > sys.q + 1) throw InputError("--k must lie in 1..q+1");
    f.values = spec.psi[args.k - 1];
    e.json["family"] = selector_name(args.sel);
    e.json["q"] = sys.q;
    e.json["eta"] = sys.eta;
    e.json["k"] = args.k;
  }
  e.json["values"] = to_json(f.values);
  e.json["report"] = report_json(oscillation_report(f));
  if (args.differences) {
    const auto d = difference_inequalities(f, args.zero_after_end);
    Json checks = Json::array();
    for (const auto& c : d.checks) {
      checks.push_back({{"name", c.name},
                        {"difference_count", c.difference_count},
                        {"function_count", c.function_count},
                        {"holds", c.holds}});
    }
    e.json["differences"] = {{"pass", d.pass}, {"forward_checked", d.forward_checked}, {"checks", checks}};
    if (!d.pass) e.status = kNegative;
  }
  return e;
}

// ------------------------------------------------------- system selection

struct TableArgs {
  FamilySelector sel;
  std::string table;
  int n = 0;
  int monomial = 0;
  int counterexample = 0;
};

void add_table_options(CLI::App* sub, TableArgs& t) {
  add_selector(sub, t.sel);
  sub->add_option("--table", t.table, "SystemTable as JSON rows (inline or file)");
  sub->add_option("--n", t.n, "number of eigenfunctions psi_1..psi_n taken from the family");
  sub->add_option("--monomial", t.monomial, "use 1, nu, ..., nu^{n-1} with this n (needs --q)");
  sub->add_option("--counterexample", t.counterexample,
                  "use the T0-only counterexample system with this q");
}

std::pair<SystemTable, std::string> resolve_table(const TableArgs& t) {
  int chosen = (!t.table.empty()) + (t.monomial > 0) + (t.counterexample > 0) +
               (!t.sel.family.empty() || !t.sel.recurrence.empty());
  if (chosen != 1) {
    throw InputError("choose exactly one of --table, --monomial, --counterexample, --family/--recurrence");
  }
  if (!t.table.empty()) {
    const Json j = json_arg(t.table, "--table");
    if (!j.is_array() || j.empty()) throw InputError("--table must be a non-empty array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) rows.push_back(real_vector(r, "table row"));
    return {SystemTable(std::move(rows)), "table"};
  }
  if (t.monomial > 0) {
    if (t.sel.q < 0) throw InputError("--monomial needs --q");
    return {monomial_system(t.monomial, t.sel.q), "monomial"};
  }
  if (t.counterexample > 0) return {t0_counterexample_system(t.counterexample), "counterexample"};
  if (t.n < 1) throw InputError("--n is required with a family");
  const auto sys = resolve_system(t.sel);
  return {psi_system(compute_spectrum(sys), t.n), "psi " + selector_name(t.sel)};
}

// ----------------------------------------------------------------- tsystem

struct TsystemArgs {
  TableArgs table;
  std::uint64_t budget = 2'000'000;
  double det_tol = 1e-10;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
};

Json certificate_json(const TSystemCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["common_sign"] = c.common_sign;
  j["witness"] = c.witness;
  j["witness_det"] = c.witness_det;
  j["min_abs_det"] = c.min_abs_det;
  j["subsets_checked"] = c.subsets_checked;
  return j;
}

Emitted run_tsystem(const TsystemArgs& args) {
  const auto [s, label] = resolve_table(args.table);
  Emitted e;
  e.json = header("tsystem");
  e.json["tolerances"] = {{"det_rel_tol", args.det_tol}, {"budget", args.budget}};
  e.json["system"] = label;
  e.json["n"] = s.n();
  e.json["q"] = s.q();
  if (args.sample > 0) {
    const auto r = certify_sampled(s, args.sample, args.seed, args.det_tol);
    e.json["mode"] = "sampled";
    e.json["seed"] = args.seed;
    e.json["refuted"] = r.refuted;
    e.json["kind"] = r.refuted ? to_string(r.kind) : "not refuted";
    e.json["witness"] = r.witness;
    e.json["witness_det"] = r.witness_det;
    e.json["min_abs_det"] = r.min_abs_det;
    e.json["samples"] = r.samples;
    e.status = r.refuted ? kNegative : kOk;
    return e;
  }
  const auto c = certify(s, CertifyOptions{args.budget, args.det_tol});
  e.json["mode"] = "exhaustive";
  e.json["certificate"] = certificate_json(c);
  e.status = c.kind == TKind::T_Z ? kOk : kNegative;
  return e;
}

// ------------------------------------------------------------------- remez

struct RemezArgs {
  TableArgs table;
  std::string f;
  bool oracle = false;
  bool assume_tz = false;
  std::uint64_t budget = 100000;
};

Emitted run_remez(const RemezArgs& args) {
  const auto [s, label] = resolve_table(args.table);
  if (args.f.empty()) throw InputError("--f is required");
  DiscreteFunction f;
  f.values = real_vector(json_arg(args.f, "--f"), "--f");
  Emitted e;
  e.json = header("remez");
  e.json["tolerances"] = {{"level_rel", 1e-9}, {"det_rel_tol", 1e-10}, {"oracle_budget", args.budget}};
  e.json["system"] = label;
  e.json["mode"] = args.oracle ? "oracle" : "exchange";

  if (!args.oracle && !args.assume_tz) {
    const auto c = certify(s);
    if (c.kind != TKind::T_Z) {
      e.json["certificate"] = certificate_json(c);
      e.json["error"] = "exchange mode needs a T_Z system; rerun with --oracle";
      e.status = kNegative;
      return e;
    }
  }
  ExchangeOptions opt;
  opt.assume_tz = true;
  const auto r = args.oracle ? best_approx_oracle(f, s, args.budget) : best_approx(f, s, opt);
  e.json["coefficients"] = to_json(r.coefficients);
  e.json["E"] = r.E;
  e.json["iterations"] = r.iterations;
  e.json["level_history"] = to_json(r.level_history);
  if (r.alternance) {
    e.json["alternance"] = {{"points", r.alternance->points},
                            {"orientation", r.alternance->orientation},
                            {"level", r.alternance->level}};
  }
  if (r.dual) {
    e.json["dual"] = {{"points", r.dual->points}, {"signs", r.dual->signs}, {"weights", r.dual->weights}};
  }
  const auto v = verify_optimality(f, s, r);
  e.json["verification"] = {{"pass", v.pass},
                            {"level_residual", v.level_residual},
                            {"sup_excess", v.sup_excess},
                            {"signs_match", v.signs_match},
                            {"reason", v.reason}};
  if (!v.pass) e.status = kNumerical;
  e.csv_header = {"k", "coefficient"};
  for (std::size_t k = 0; k < r.coefficients.size(); ++k) {
    e.csv_rows.push_back({static_cast<double>(k + 1), r.coefficients[k]});
  }
  return e;
}

// -------------------------------------------------------------- gap-expand

struct GapArgs {
  FamilySelector sel;
  int m = 0;
};

Emitted run_gap(const GapArgs& args) {
  const auto sys = resolve_system(args.sel);
  const auto spec = compute_spectrum(sys);
  const auto g = gap_expand(sys, spec, args.m);
  const auto r = classify_and_verify(g, sys, args.sel.b_point);
  Emitted e;
  e.json = header("gap-expand");
  e.json["tolerances"] = {{"route_rel", 1e-8}, {"equal_spread", 1e-8}, {"strict_gap_rel", 1e-10},
                          {"eta_equality_rel", 1e-10}};
  e.json["family"] = selector_name(args.sel);
  e.json["q"] = sys.q;
  e.json["m"] = args.m;
  e.json["eta"] = sys.eta;
  e.json["b"] = r.b;
  e.json["eta_b"] = r.classification.eta_b;
  e.json["case"] = to_string(r.classification.eta_case);
  e.json["removed"] = to_json(g.removed);
  e.json["a"] = to_json(g.a);
  e.json["a_quadrature"] = to_json(g.a_quadrature);
  e.json["route_discrepancy"] = g.route_discrepancy;
  e.json["reconstruction_residual"] = g.reconstruction_residual;
  e.json["ratios"] = to_json(r.ratios);
  e.json["verdict"] = to_string(r.verdict);
  e.json["expected"] = to_string(r.expected);
  e.json["spread"] = r.spread;
  e.json["margin"] = r.margin;
  e.json["all_positive"] = r.all_positive;
  e.json["pass"] = r.pass;
  if (args.m >= 1) {
    const auto d = determinant_crosscheck(sys, spec, args.m);
    e.json["determinant_crosscheck"] = {{"pass", d.pass}, {"spread", d.spread}, {"positive", d.positive},
                                        {"ratios", to_json(d.ratios)}, {"reason", d.reason}};
    if (!d.pass) e.status = kNegative;
  }
  if (!r.pass) e.status = kNegative;
  e.csv_header = {"l", "a", "a_quadrature", "ratio"};
  for (std::size_t l = 0; l < g.a.size(); ++l) {
    e.csv_rows.push_back({static_cast<double>(l), g.a[l], g.a_quadrature[l], r.ratios[l]});
  }
  return e;
}

// ------------------------------------------------------------------- yudin

struct YudinArgs {
  FamilySelector sel;
  int m = 0;
  int variant = 1;
  bool assume_krein = false;
  int krein_degree = 0;
  int sign_grid = 10000;
};

Json krein_json(const KreinReport& k) {
  return {{"pass", k.pass}, {"L", k.L}, {"min_coeff", k.min_coeff}, {"max_coeff", k.max_coeff},
          {"witness", {k.witness_m, k.witness_n, k.witness_k}}};
}

Emitted run_yudin(const YudinArgs& args) {
  if (!args.sel.recurrence.empty()) throw InputError("yudin needs a --family, not raw recurrence tables");
  if (args.sel.family.empty() || args.sel.q < 0) throw InputError("--family and --q are required");
  const auto fam = normalized(family_by_name(args.sel.family, args.sel.a, args.sel.b));
  YudinOptions opt;
  opt.assume_krein = args.assume_krein;
  opt.krein_degree = args.krein_degree;
  opt.sign_grid = args.sign_grid;
  const auto r = yudin_extremal(fam, args.sel.q, args.m, args.variant, opt);
  Emitted e;
  e.json = header("yudin");
  e.json["tolerances"] = {{"coeff_rel", 1e-10}, {"gap_rel", 1e-9}, {"sign_rel", 1e-9},
                          {"krein_rel", 1e-10}, {"sign_grid", args.sign_grid}};
  e.json["family"] = selector_name(args.sel);
  e.json["variant"] = r.variant;
  e.json["q"] = r.q;
  e.json["m"] = r.m;
  e.json["n"] = r.n;
  e.json["B"] = r.B;
  e.json["zeros"] = to_json(r.zeros);
  e.json["quotient_coeffs"] = to_json(r.quotient_coeffs);
  e.json["quotient_verdict"] = to_string(r.quotient_check.verdict);
  e.json["p_coeffs"] = to_json(r.p_coeffs);
  e.json["moments"] = to_json(r.moments);
  e.json["norm"] = r.norm;
  e.json["sign_check"] = r.sign_check;
  e.json["sign_change_value"] = r.sign_change_value;
  if (r.deltas) e.json["deltas"] = to_json(*r.deltas);
  e.json["even"] = r.even;
  e.json["krein"] = krein_json(r.krein);
  if (r.kernel_krein) e.json["kernel_krein"] = krein_json(*r.kernel_krein);
  e.json["pass"] = r.pass;
  e.json["failures"] = r.failures;
  if (!r.pass) e.status = kNegative;
  e.csv_header = {"l", "a"};
  for (std::size_t l = 0; l < r.p_coeffs.size(); ++l) {
    e.csv_rows.push_back({static_cast<double>(l), r.p_coeffs[l]});
  }
  return e;
}

// ---------------------------------------------------------------- classical

struct ClassicalArgs {
  std::string jcase;
  int q = -1;
  int nu = 0;
  std::string nus = "[]";
  std::string trig;
  int m = 0;
};

Emitted run_classical(const ClassicalArgs& args) {
  Emitted e;
  e.json = header("appendix");
  if (args.q < 0) throw InputError("--q is required");
  if (!args.trig.empty()) {
    TrigCoefficients t;
    if (args.trig == "cos") {
      t = trig_cos_coeffs(args.q, args.m);
    } else if (args.trig == "sin") {
      t = trig_sin_coeffs(args.q, args.m);
    } else {
      throw InputError("--trig must be cos or sin");
    }
    e.json["trig"] = args.trig;
    e.json["q"] = args.q;
    e.json["m"] = args.m;
    e.json["coefficients"] = to_json(t.values);
    e.json["strictly_decreasing_positive"] = t.strictly_decreasing_positive;
    if (!t.strictly_decreasing_positive) e.status = kNegative;
    const int first_index = args.trig == "cos" ? 0 : 1;
    e.csv_header = {"nu", "coefficient"};
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      e.csv_rows.push_back({static_cast<double>(i + first_index), t.values[i]});
    }
    return e;
  }
  if (args.jcase.empty()) throw InputError("--case or --trig is required");
  const JacobiCase c = parse_case(args.jcase);
  const auto nus = int_vector(json_arg(args.nus, "--nus"), "--nus");
  const double closed = jacobi_case_det_closed_form(c, args.q, args.nu, nus);
  const double numeric = jacobi_case_det_numeric(c, args.q, args.nu, nus);
  const double diff = std::abs(closed - numeric);
  const double rel = closed != 0.0 ? diff / std::abs(closed) : diff;
  e.json["tolerances"] = {{"rel", 1e-8}, {"abs_floor", 1e-12}};
  e.json["case"] = to_string(c);
  e.json["q"] = args.q;
  e.json["nu"] = args.nu;
  e.json["nus"] = nus;
  e.json["zeros"] = to_json(jacobi_case_zeros(c, args.q));
  e.json["closed_form"] = closed;
  e.json["numeric"] = numeric;
  e.json["difference"] = diff;
  e.json["relative_difference"] = rel;
  const bool agree = rel <= 1e-8 || (std::abs(closed) < 1e-12 && std::abs(numeric) < 1e-12);
  e.json["agree"] = agree;
  if (!agree) e.status = kNumerical;
  return e;
}

// ------------------------------------------------------------------- suite

struct SuiteArgs {
  std::uint64_t seed = battery::Options{}.seed;
  std::optional<std::string> only;
  std::string fault = "none";
  bool timings = false;
};

std::vector<int> parse_selection(const std::string& s) {
  std::vector<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(' ') == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const int id = std::stoi(tok, &used);
      ids.push_back(id);
    } catch (const std::exception&) {
      throw InputError("bad criterion id '" + tok + "'");
    }
  }
  return ids;
}

Emitted run_suite(const SuiteArgs& args) {
  battery::Options opt;
  opt.seed = args.seed;
  try {
    opt.fault = battery::parse_fault(args.fault);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (args.only) {
    opt.selection = parse_selection(*args.only);
    if (opt.selection.empty()) throw InputError("empty suite selection");
    for (int id : opt.selection) {
      if (id < 1 || id > battery::kCriterionCount) {
        throw InputError("criterion id " + std::to_string(id) + " out of range");
      }
    }
  }
  const auto results = battery::run(opt);
  Emitted e;
  e.json = header("suite");
  e.json["seed"] = args.seed;
  e.json["fault"] = battery::to_string(opt.fault);
  Json list = Json::array();
  int failed = 0;
  for (const auto& r : results) {
    Json j = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (args.timings) j["seconds"] = r.seconds;
    if (r.time_limit > 0.0) j["time_limit"] = r.time_limit;
    list.push_back(j);
    if (!r.pass) ++failed;
  }
  e.json["criteria"] = list;
  e.json["passed"] = static_cast<int>(results.size()) - failed;
  e.json["failed"] = failed;
  e.status = failed > 0 ? kNegative : kOk;
  return e;
}

// ------------------------------------------------------------------ config

std::string config_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

// Rewrites argv so that keys of a JSON config file become flags of the
// chosen subcommand; command-line flags still follow and take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& argv) {
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--config") {
      if (i + 1 >= argv.size()) throw InputError("--config needs a path");
      config_path = argv[++i];
    } else if (argv[i].rfind("--config=", 0) == 0) {
      config_path = argv[i].substr(9);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::vector<std::string> out{argv[0]};
  if (config_path.empty()) {
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  const Json cfg = parse_json(read_file(config_path), config_path);
  if (!cfg.is_object()) throw InputError("config must be a JSON object");
  std::string sub;
  if (cfg.contains("subcommand")) {
    sub = cfg.at("subcommand").get<std::string>();
    if (!rest.empty() && rest.front() == sub) rest.erase(rest.begin());
  } else {
    if (rest.empty()) throw InputError("no subcommand given");
    sub = rest.front();
    rest.erase(rest.begin());
  }
  out.push_back(sub);
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) out.push_back(flag);
      continue;
    }
    if (value.is_null()) continue;
    out.push_back(flag);
    out.push_back(config_value(value));
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int run(int argc, char** argv) {
  std::vector<std::string> raw(argv, argv + argc);
  try {
    raw = expand_config(raw);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  CLI::App app{"Discrete Sturm oscillation, Chebyshev systems and spectral-gap polynomials"};
  app.name("dsturm");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", out.path, "write the report to this file instead of stdout");
  std::string unused_config;
  app.add_option("--config", unused_config, "JSON file whose keys are flags of the subcommand");

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and eigenfunctions");
  add_selector(spectrum, spectrum_args.sel);
  spectrum->add_flag("--psi", spectrum_args.psi, "include the eigenfunction table");

  OscillationArgs osc_args;
  auto* oscillation = app.add_subcommand("oscillation", "zero and sign-change counts");
  add_selector(oscillation, osc_args.sel);
  oscillation->add_option("--values", osc_args.values, "function values as JSON (inline or file)");
  oscillation->add_option("--k", osc_args.k, "analyze psi_k of the selected family");
  oscillation->add_option("--sign-tol", osc_args.sign_tol, "relative zero threshold");
  oscillation->add_flag("--differences", osc_args.differences, "compare with the difference function");
  oscillation->add_flag("--zero-after-end", osc_args.zero_after_end, "assume f(q+1) = 0");

  TsystemArgs ts_args;
  auto* tsystem = app.add_subcommand("tsystem", "certify a Chebyshev system on the grid");
  add_table_options(tsystem, ts_args.table);
  tsystem->add_option("--budget", ts_args.budget, "maximum number of subsets");
  tsystem->add_option("--det-tol", ts_args.det_tol, "determinant threshold relative to Hadamard");
  tsystem->add_option("--sample", ts_args.sample, "random subsets only (refutation mode)");
  tsystem->add_option("--seed", ts_args.seed, "seed for --sample");

  RemezArgs remez_args;
  auto* remez = app.add_subcommand("remez", "best uniform approximation on the grid");
  add_table_options(remez, remez_args.table);
  remez->add_option("--f", remez_args.f, "function values as JSON (inline or file)");
  remez->add_flag("--oracle", remez_args.oracle, "exhaustive reference search");
  remez->add_flag("--assume-tz", remez_args.assume_tz, "skip the T_Z certification sweep");
  remez->add_option("--budget", remez_args.budget, "oracle reference-set budget");

  GapArgs gap_args;
  auto* gap = app.add_subcommand("gap-expand", "expansion with the largest zeros removed");
  add_selector(gap, gap_args.sel);
  gap->add_option("--m", gap_args.m, "m + 1 zeros are removed");

  YudinArgs yudin_args;
  auto* yudin = app.add_subcommand("yudin", "extremal polynomial with a spectral gap");
  add_selector(yudin, yudin_args.sel, false);
  yudin->add_option("--m", yudin_args.m, "gap length");
  yudin->add_option("--variant", yudin_args.variant, "1 or 2")->check(CLI::IsMember({1, 2}));
  yudin->add_flag("--assume-krein", yudin_args.assume_krein, "proceed when the Krein check fails");
  yudin->add_option("--krein-degree", yudin_args.krein_degree, "Krein check degree (default 2q+4)");
  yudin->add_option("--sign-grid", yudin_args.sign_grid, "points in the sign grid");

  ClassicalArgs app_args;
  auto* classical = app.add_subcommand("appendix", "closed-form Jacobi determinants and trigonometric sums");
  classical->add_option("--case", app_args.jcase, "i, ii, iii or iv");
  classical->add_option("--q", app_args.q, "grid size q");
  classical->add_option("--nu", app_args.nu, "free point nu");
  classical->add_option("--nus", app_args.nus, "bordering points as a JSON array, increasing");
  classical->add_option("--trig", app_args.trig, "cos or sin quotient coefficients");
  classical->add_option("--m", app_args.m, "number of removed zeros for --trig");

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  suite->add_option("--seed", suite_args.seed, "random seed");
  suite->add_option("--only", suite_args.only, "comma-separated criterion ids");
  suite->add_option("--inject-fault", suite_args.fault, "none, spectrum, oscillation or minimax");
  suite->add_flag("--timings", suite_args.timings, "include wall-clock seconds");

  std::vector<std::string> args(raw.rbegin(), raw.rend() - 1);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    Emitted e;
    if (spectrum->parsed()) e = run_spectrum(spectrum_args);
    else if (oscillation->parsed()) e = run_oscillation(osc_args);
    else if (tsystem->parsed()) e = run_tsystem(ts_args);
    else if (remez->parsed()) e = run_remez(remez_args);
    else if (gap->parsed()) e = run_gap(gap_args);
    else if (yudin->parsed()) e = run_yudin(yudin_args);
    else if (classical->parsed()) e = run_classical(app_args);
    else e = run_suite(suite_args);
    emit(e, out);
    return e.status;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kNegative;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace
}  // namespace dsturm::cli

int main(int argc, char** argv) { return dsturm::cli::run(argc, argv); }
