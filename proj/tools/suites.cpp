#include "suites.hpp"

#include "rayclass/barnes.hpp"
#include "rayclass/datum.hpp"
#include "rayclass/errors.hpp"
#include "rayclass/invariants.hpp"
#include "rayclass/real.hpp"
#include "rayclass/rng.hpp"
#include "rayclass/sampling.hpp"

#include <cstring>
#include <utility>

namespace raycli {

using json = nlohmann::ordered_json;
using namespace rayclass;

namespace {

constexpr double kSlack = 1e-12;

json residual_row(const std::string& name, double value, double bound, double scale) {
  return json{{"name", name},
              {"kind", "residual"},
              {"value", value},
              {"bound", bound},
              {"pass", value <= bound * scale}};
}

json value_row(const std::string& name, const Ball& b) {
  return json{{"name", name},
              {"kind", "value"},
              {"value", to_string(b.value)},
              {"bound", b.bound}};
}

json exact_row(const std::string& name, bool equal) {
  return json{{"name", name}, {"kind", "exact"}, {"pass", equal}};
}

json trial_row(const std::string& name, const TrialSummary& s) {
  return json{{"name", name},
              {"kind", "trials"},
              {"trials", s.trials},
              {"failures", s.failures},
              {"redraws", s.redraws},
              {"pass", s.pass()}};
}

void push(SuiteResult& out, json row) {
  if (row.contains("pass") && !row["pass"].get<bool>()) out.ok = false;
  out.rows.push_back(std::move(row));
}

double to_d(const Real& x) { return x.convert_to<double>(); }

struct FieldCtx {
  RayClassDatum d;
  Fan fan;
};

FieldCtx make_ctx(const ProblemConfig& p) {
  if (!p.has_field())
    throw invalid_argument_error("schema: this suite needs a problem with a field section");
  RayClassDatum d = problem_datum(p);
  Fan fan = problem_fan(p, d);
  return FieldCtx{std::move(d), std::move(fan)};
}

std::size_t first_full_cone(const Fan& fan) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    if (fan.cones[i].size() == 2) return i;
  throw invalid_argument_error("fan has no full-dimensional cone");
}

// smallest c with c + w0 totally positive; the z -> lambda z invariance probe
FieldElem choose_lambda(const QuadraticField& F) {
  for (int c = 1; c < 64; ++c) {
    FieldElem e{Rat(c), Rat(1)};
    if (F.is_totally_positive(e)) return e;
  }
  throw invalid_argument_error("no totally positive c + w0 in range");
}

}  // namespace

SuiteResult run_sine_oracles(const ProblemConfig& p) {
  SuiteResult out;
  PrecisionScope scope(p.precision_bits);
  const double tol = 1e-10;
  const Real half_log_2pi = log(2 * const_pi()) / 2;

  for (int k = 1; k <= 19; ++k) {
    Real z = Real(k) / 10;
    Ball v = barnes_zeta_deriv0(z, {Real(1)});
    Real oracle = lgamma(z) - half_log_2pi;
    push(out, residual_row("lgamma x=" + to_string(Rat(k, 10)),
                           to_d(abs(v.value - oracle)), tol, p.tolerance_scale));
  }

  SplitMix64 rng(p.seed);
  for (int t = 0; t < 50; ++t) {
    long q = rng.next_in(2, 12);
    Rat x(Int(rng.next_in(1, q - 1)), Int(q));
    Rat w(Int(rng.next_in(1, 10)), Int(rng.next_in(1, 4)));
    Ball s = multiple_sine(std::vector<Rat>{x}, std::vector<std::vector<Rat>>{{w}}, true);
    Real oracle = 2 * sin(const_pi() * to_real(x));
    push(out, residual_row("sine z/omega=" + to_string(x) + " omega=" + to_string(w),
                           to_d(abs(s.value - oracle)), tol, p.tolerance_scale));
  }
  return out;
}

SuiteResult run_combinatorics(const ProblemConfig& p) {
  SuiteResult out;
  SplitMix64 root(p.seed);
  struct Family {
    const char* name;
    TrialSummary (*run)(int, long, SplitMix64&);
  };
  const Family families[] = {{"cocycle", sample_cocycle},
                             {"prism", sample_prism},
                             {"prism-closure", sample_prism_closure},
                             {"upper-reciprocity", sample_upper_reciprocity}};
  for (int n : {2, 3})
    for (const auto& fam : families) {
      SplitMix64 child = root.split();
      push(out, trial_row(std::string(fam.name) + " n=" + std::to_string(n),
                          fam.run(n, 10000, child)));
    }
  SplitMix64 child = root.split();
  push(out, trial_row("upper-reciprocity n=4", sample_upper_reciprocity(4, 1000, child)));
  return out;
}

SuiteResult run_factorization(const ProblemConfig& p) {
  SuiteResult out;
  PrecisionScope scope(p.precision_bits);
  FieldCtx c = make_ctx(p);

  Ball X;
  try {
    X = compute_X(c.d, c.fan);
  } catch (const geometry_error& e) {
    if (std::strncmp(e.what(), "xi_f(0", 6) == 0) {
      push(out, exact_row("xi_f(0, z+b) vanishes", false));
      return out;
    }
    throw;
  }
  push(out, exact_row("xi_f(0, z+b) vanishes", true));

  Ball X1 = compute_Xi_faces(c.d, c.fan, 1);
  Ball X2 = compute_Xi_faces(c.d, c.fan, 2);
  push(out, value_row("logX", X));
  push(out, value_row("logX_1", X1));
  push(out, value_row("logX_2", X2));
  push(out, residual_row("factorization |logX - logX_1 - logX_2|",
                         to_d(abs(X.value - X1.value - X2.value)),
                         X.bound + X1.bound + X2.bound + kSlack, p.tolerance_scale));
  return out;
}

SuiteResult run_independence(const ProblemConfig& p) {
  SuiteResult out;
  PrecisionScope scope(p.precision_bits);
  FieldCtx c = make_ctx(p);
  const QuadraticField& F = c.d.F;

  Rat zeta0 = partial_zeta_at0(c.d, c.fan);
  Ball base[2] = {compute_Xi_faces(c.d, c.fan, 1), compute_Xi_faces(c.d, c.fan, 2)};

  std::size_t k = first_full_cone(c.fan);
  const auto& g = c.fan.cones[k];
  struct Variant {
    std::string name;
    RayClassDatum d;
    Fan fan;
  };
  std::vector<Variant> variants;
  variants.push_back({"subdivision", c.d, fan_subdivide_cone(F, c.fan, k, F.add(g[0], g[1]))});
  variants.push_back({"unit-translation", c.d, fan_translate_cone(F, c.fan, k, 1)});
  variants.push_back(
      {"rescale k=2,3", c.d, fan_rescale_gen(fan_rescale_gen(c.fan, k, 0, Int(2)), k, 1, Int(3))});
  FieldElem lambda = choose_lambda(F);
  variants.push_back({"z -> (" + to_string(F, lambda) + ")z",
                      make_datum(F, c.d.f, c.d.a0, F.mul(lambda, c.d.z)), c.fan});

  for (const auto& v : variants) {
    push(out, exact_row("zeta0 unchanged: " + v.name,
                        partial_zeta_at0(v.d, v.fan) == zeta0));
    for (int i = 1; i <= 2; ++i) {
      Ball w = compute_Xi_faces(v.d, v.fan, i);
      push(out, residual_row("logX_" + std::to_string(i) + " under " + v.name,
                             to_d(abs(w.value - base[i - 1].value)),
                             w.bound + base[i - 1].bound + kSlack, p.tolerance_scale));
    }
  }

  SplitMix64 rng(p.seed);
  SplitMix64 r1 = rng.split(), r2 = rng.split(), r3 = rng.split(), r4 = rng.split();
  push(out, trial_row("fan cover", sample_fan_cover(F, c.fan, 10000, r1)));
  push(out, trial_row("ucl partition h=1", sample_fan_ucl(F, c.fan, 1, 10000, r2)));
  push(out, trial_row("ucl partition h=2", sample_fan_ucl(F, c.fan, 2, 10000, r3)));
  push(out, trial_row("fan cover after subdivision",
                      sample_fan_cover(F, variants[0].fan, 10000, r4)));
  return out;
}

SuiteResult run_relation(const ProblemConfig& p) {
  SuiteResult out;
  PrecisionScope scope(p.precision_bits);
  FieldCtx c = make_ctx(p);

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Residual r = verify_relation(c.d, c.fan, i, j);
      push(out, residual_row("relation i=" + std::to_string(i) + " j=" + std::to_string(j),
                             r.value, r.bound, p.tolerance_scale));
    }

  RayClassDatum fd = flip_datum(c.d);
  Ball X0 = compute_X(c.d, c.fan);
  Ball Xf = compute_X(fd, c.fan);
  push(out, residual_row("mu-flip |logX(muC) + logX(C)|", to_d(abs(Xf.value + X0.value)),
                         Xf.bound + X0.bound + kSlack, p.tolerance_scale));
  for (int i = 1; i <= 2; ++i) {
    Ball a = compute_Xi_faces(c.d, c.fan, i);
    Ball b = compute_Xi_faces(fd, c.fan, i);
    push(out, residual_row("mu-flip |logX_" + std::to_string(i) + "(muC) + logX_" +
                               std::to_string(i) + "(C)|",
                           to_d(abs(a.value + b.value)), a.bound + b.bound + kSlack,
                           p.tolerance_scale));
  }
  return out;
}

SuiteResult run_suite(const std::string& which, const ProblemConfig& p) {
  if (which == "factorization") return run_factorization(p);
  if (which == "independence") return run_independence(p);
  if (which == "relation") return run_relation(p);
  if (which == "combinatorics") return run_combinatorics(p);
  if (which == "sine-oracles") return run_sine_oracles(p);
  throw invalid_argument_error(
      "unknown suite '" + which +
      "' (expected factorization, independence, relation, combinatorics, sine-oracles)");
}

}  // namespace raycli
