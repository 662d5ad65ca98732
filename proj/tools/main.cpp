#include "suites.hpp"

#include "rayclass/barnes.hpp"
#include "rayclass/errors.hpp"
#include "rayclass/problem.hpp"
#include "rayclass/real.hpp"
#include "rayclass/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace rayclass;

struct CommonOpts {
  std::string problem;
  std::string out;
  unsigned precision = 0;  // 0: keep the problem file's value
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance_scale;
  bool timing = false;
  bool no_ledger = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool problem_required) {
  auto* po = cmd->add_option("--problem", o.problem, "problem file (JSON)");
  if (problem_required) po->required();
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--precision", o.precision, "working precision in bits (overrides problem)");
  cmd->add_option("--seed", o.seed, "sampling seed (overrides problem)");
  cmd->add_option("--tolerance-scale", o.tolerance_scale,
                  "residual tolerance multiplier (overrides problem)");
  cmd->add_flag("--timing", o.timing, "include timing_ms (breaks byte-identical reruns)");
  cmd->add_flag("--no-ledger", o.no_ledger, "omit the per-point ledger from compute reports");
}

ProblemConfig load_config(const CommonOpts& o) {
  ProblemConfig p;
  if (!o.problem.empty()) p = load_problem_file(o.problem);
  if (o.precision != 0) {
    if (o.precision < 64 || o.precision > 8192)
      throw invalid_argument_error("schema: precision must lie in [64, 8192]");
    p.precision_bits = o.precision;
  }
  if (o.seed) p.seed = *o.seed;
  if (o.tolerance_scale) {
    if (*o.tolerance_scale <= 0)
      throw invalid_argument_error("schema: tolerance_scale must be positive");
    p.tolerance_scale = *o.tolerance_scale;
  }
  return p;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw invalid_argument_error("cannot open output file " + path);
  f << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_compute(const CommonOpts& o) {
  ProblemConfig p = load_config(o);
  if (!p.has_field())
    throw invalid_argument_error("schema: compute needs a problem with a field section");
  PrecisionScope scope(p.precision_bits);
  auto t0 = std::chrono::steady_clock::now();
  RayClassDatum d = problem_datum(p);
  Fan fan = problem_fan(p, d);
  InvariantReport r = compute_report(d, fan);
  std::optional<double> ms;
  if (o.timing) ms = elapsed_ms(t0);
  write_text(o.out, report_to_json_text(p, d, r, !o.no_ledger, ms));
  for (const auto& c : r.residuals)
    if (c.value > c.bound * p.tolerance_scale) return 4;
  return 0;
}

int cmd_verify(const std::string& which, const CommonOpts& o) {
  ProblemConfig p = load_config(o);
  auto t0 = std::chrono::steady_clock::now();
  raycli::SuiteResult res = raycli::run_suite(which, p);
  json doc;
  doc["tool"] = json{{"name", "rayclass"}, {"version", version_string()}};
  doc["suite"] = which;
  doc["precision_bits"] = p.precision_bits;
  doc["seed"] = p.seed;
  doc["tolerance_scale"] = p.tolerance_scale;
  if (p.has_field())
    doc["field"] = json{{"mode", "quadratic"}, {"D", p.F->D()}};
  else
    doc["field"] = nullptr;
  if (p.has_field()) doc["fan"] = p.fan_kind;
  doc["rows"] = res.rows;
  doc["status"] = res.ok ? "ok" : "failed";
  if (o.timing) doc["timing_ms"] = elapsed_ms(t0);
  write_text(o.out, doc.dump(2) + "\n");
  std::cerr << "suite " << which << ": " << (res.ok ? "ok" : "FAILED") << " ("
            << res.rows.size() << " rows)\n";
  return res.ok ? 0 : 4;
}

Rat parse_rat_arg(const std::string& s, const std::string& what) {
  auto r = parse_rational(s);
  if (!r) throw invalid_argument_error(what + ": cannot parse exact rational '" + s + "'");
  return *r;
}

std::vector<Rat> parse_rat_list(const std::string& s, const std::string& what) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t c = s.find(',', pos);
    if (c == std::string::npos) c = s.size();
    out.push_back(parse_rat_arg(s.substr(pos, c - pos), what));
    pos = c + 1;
  }
  return out;
}

// rows separated by ';', one per embedding; entries by ','; transposed into
// wemb[k][i] = i-th embedding of omega_k
std::vector<std::vector<Rat>> parse_omega_rows(const std::string& s) {
  std::vector<std::vector<Rat>> rows;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t c = s.find(';', pos);
    if (c == std::string::npos) c = s.size();
    rows.push_back(parse_rat_list(s.substr(pos, c - pos), "omega"));
    pos = c + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw invalid_argument_error("omega rows must have equal length");
  std::vector<std::vector<Rat>> wemb(rows[0].size(), std::vector<Rat>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) wemb[k][i] = rows[i][k];
  return wemb;
}

Real rat_to_real(const Rat& q) { return Real(num(q).str()) / Real(den(q).str()); }

struct EvalOpts {
  std::string func;
  std::string z, x, omega, out;
  unsigned precision = 128;
  bool split = false;  // product of per-embedding factors instead of the joint sine
};

int cmd_eval(const EvalOpts& e) {
  if (e.precision < 64 || e.precision > 8192)
    throw invalid_argument_error("schema: precision must lie in [64, 8192]");
  PrecisionScope scope(e.precision);
  if (e.omega.empty()) throw invalid_argument_error("eval: --omega is required");

  std::string value;
  double bound = 0;
  if (e.func == "barnes-zeta-deriv0") {
    if (e.z.empty()) throw invalid_argument_error("eval: --z is required");
    std::vector<Real> w;
    for (const auto& q : parse_rat_list(e.omega, "omega")) w.push_back(rat_to_real(q));
    Ball v = barnes_zeta_deriv0(rat_to_real(parse_rat_arg(e.z, "z")), w);
    value = to_string(v.value);
    bound = v.bound;
  } else if (e.func == "multiple-sine") {
    auto wemb = parse_omega_rows(e.omega);
    std::vector<Rat> x;
    if (!e.x.empty()) {
      x = parse_rat_list(e.x, "x");
    } else {
      if (e.z.empty()) throw invalid_argument_error("eval: give --x coordinates or --z");
      if (wemb.size() != 1 || wemb[0].size() != 1)
        throw invalid_argument_error("eval: --z works only for d = 1 with one embedding");
      x = {parse_rat_arg(e.z, "z") / wemb[0][0]};
    }
    Ball v = multiple_sine(x, wemb, !e.split);
    value = to_string(v.value);
    bound = v.bound;
  } else if (e.func == "shintani-zeta0") {
    if (e.x.empty()) throw invalid_argument_error("eval: --x is required");
    Rat v = shintani_zeta_at0(parse_rat_list(e.x, "x"), parse_omega_rows(e.omega));
    value = to_string(v) + " (exact)";
  } else {
    throw invalid_argument_error(
        "unknown eval function '" + e.func +
        "' (expected barnes-zeta-deriv0, multiple-sine, shintani-zeta0)");
  }

  std::cout << e.func << " = " << value << "  +/- " << bound << "\n";
  if (!e.out.empty()) {
    json doc{{"tool", json{{"name", "rayclass"}, {"version", version_string()}}},
             {"function", e.func},
             {"precision_bits", e.precision},
             {"value", value},
             {"bound", bound}};
    write_text(e.out, doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ray class invariants of real quadratic fields"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  CommonOpts co;
  auto* compute = app.add_subcommand("compute", "full invariant report for one problem");
  add_common(compute, co, true);

  CommonOpts vo;
  std::string which;
  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("suite", which,
                     "factorization | independence | relation | combinatorics | sine-oracles")
      ->required();
  add_common(verify, vo, false);

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "evaluate one special function");
  eval->add_option("function", eo.func,
                   "barnes-zeta-deriv0 | multiple-sine | shintani-zeta0")
      ->required();
  eval->add_option("--z", eo.z, "argument z as an exact rational");
  eval->add_option("--x", eo.x, "barycentric coordinates, comma separated");
  eval->add_option("--omega", eo.omega,
                   "periods: entries comma separated, one row per embedding with ';'");
  eval->add_option("--precision", eo.precision, "working precision in bits");
  eval->add_option("--out", eo.out, "also write a JSON result here");
  eval->add_flag("--split", eo.split,
                 "product of per-embedding sine factors instead of the joint sine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*compute) return cmd_compute(co);
    if (*verify) return cmd_verify(which, vo);
    return cmd_eval(eo);
  } catch (const invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const geometry_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precision_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
