#include "rayclass/problem.hpp"

#include "rayclass/errors.hpp"
#include "rayclass/version.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace rayclass {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& msg) {
  throw invalid_argument_error("schema: " + msg);
}

Rat parse_rat_or_fail(const json& v, const std::string& where) {
  if (!v.is_string()) schema_fail(where + " must be an exact rational string \"p/q\"");
  auto r = parse_rational(v.get<std::string>());
  if (!r) schema_fail(where + ": cannot parse rational '" + v.get<std::string>() + "'");
  return *r;
}

FieldElem parse_elem(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    schema_fail(where + " must be a [a, b] coefficient pair over (1, w0)");
  return FieldElem(parse_rat_or_fail(v[0], where + "[0]"),
                   parse_rat_or_fail(v[1], where + "[1]"));
}

Lattice parse_ideal(const QuadraticField& F, const json& v, const std::string& where) {
  if (!v.is_object()) schema_fail(where + " must be an object");
  for (const auto& item : v.items())
    if (item.key() != "generator" && item.key() != "basis")
      schema_fail(where + ": unknown key '" + item.key() + "'");
  if (v.contains("generator")) {
    if (v.contains("basis")) schema_fail(where + ": give either generator or basis");
    FieldElem g = parse_elem(v["generator"], where + ".generator");
    if (g.is_zero()) schema_fail(where + ".generator must be nonzero");
    return Lattice::principal(F, g);
  }
  if (!v.contains("basis")) schema_fail(where + ": generator or basis required");
  const json& b = v["basis"];
  if (!b.is_array() || b.empty()) schema_fail(where + ".basis must be a nonempty array");
  std::vector<FieldElem> gens;
  for (std::size_t i = 0; i < b.size(); ++i)
    gens.push_back(parse_elem(b[i], where + ".basis entry"));
  return Lattice::span(F, gens);
}

json elem_json(const FieldElem& x) {
  return json::array({to_string(x.a), to_string(x.b)});
}

json ball_json(const Ball& b) {
  return json{{"value", to_string(b.value)}, {"bound", b.bound}};
}

json ledger_json(const Ledger& L) {
  json arr = json::array();
  for (const auto& e : L) {
    json gens = json::array();
    for (const auto& g : e.gens) gens.push_back(elem_json(g));
    json pts = json::array();
    for (const auto& pt : e.points) {
      json x = json::array();
      for (const auto& c : pt.x) x.push_back(to_string(c));
      pts.push_back(json{{"p", elem_json(pt.p)}, {"x", x}});
    }
    arr.push_back(json{{"cone", e.cone}, {"gens", gens}, {"points", pts}});
  }
  return arr;
}

}  // namespace

ProblemConfig parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    schema_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_fail("problem must be a JSON object");
  static const std::set<std::string> allowed{"field",     "ideal_f", "ideal_a0",
                                             "z",         "fan",     "units",
                                             "precision", "seed",    "tolerance_scale"};
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) schema_fail("unknown key '" + item.key() + "'");

  ProblemConfig p;
  if (j.contains("field")) {
    const json& f = j["field"];
    if (!f.is_object()) schema_fail("field must be an object");
    for (const auto& item : f.items())
      if (item.key() != "mode" && item.key() != "D")
        schema_fail("field: unknown key '" + item.key() + "'");
    if (!f.contains("mode") || f["mode"] != "quadratic")
      schema_fail("field.mode must be \"quadratic\"");
    if (!f.contains("D") || !f["D"].is_number_integer())
      schema_fail("field.D must be an integer");
    try {
      p.F = QuadraticField(f["D"].get<long long>());
    } catch (const std::exception& e) {
      schema_fail(std::string("field.D: ") + e.what());
    }
    if (!j.contains("ideal_f")) schema_fail("ideal_f is required with a field section");
    p.ideal_f = parse_ideal(*p.F, j["ideal_f"], "ideal_f");
    p.ideal_a0 = j.contains("ideal_a0") ? parse_ideal(*p.F, j["ideal_a0"], "ideal_a0")
                                        : Lattice::ring_of_integers(*p.F);
    if (j.contains("z")) p.z = parse_elem(j["z"], "z");
    if (j.contains("units") && j["units"] != "auto")
      schema_fail("units: only \"auto\" is supported in quadratic mode");
  } else {
    for (const char* k : {"ideal_f", "ideal_a0", "z", "fan", "units"})
      if (j.contains(k)) schema_fail(std::string(k) + " requires a field section");
  }

  if (j.contains("fan")) {
    const json& f = j["fan"];
    if (f.is_string()) {
      p.fan_kind = f.get<std::string>();
      if (p.fan_kind != "standard-quadratic" && p.fan_kind != "refined-quadratic")
        schema_fail("fan: unknown fan name '" + p.fan_kind + "'");
    } else if (f.is_object()) {
      for (const auto& item : f.items())
        if (item.key() != "cones" && item.key() != "unit")
          schema_fail("fan: unknown key '" + item.key() + "'");
      if (!f.contains("cones") || !f["cones"].is_array() || f["cones"].empty())
        schema_fail("fan.cones must be a nonempty array");
      if (!f.contains("unit")) schema_fail("fan.unit is required");
      p.fan_kind = "custom";
      for (const auto& c : f["cones"]) {
        if (!c.is_array() || c.empty() || c.size() > 2)
          schema_fail("fan.cones entries must have 1 or 2 generators");
        std::vector<FieldElem> gens;
        for (const auto& g : c) gens.push_back(parse_elem(g, "fan.cones generator"));
        p.fan_cones.push_back(std::move(gens));
      }
      p.fan_unit = parse_elem(f["unit"], "fan.unit");
    } else {
      schema_fail("fan must be a name or an object");
    }
  }

  if (j.contains("precision")) {
    if (!j["precision"].is_number_integer()) schema_fail("precision must be an integer");
    long bits = j["precision"].get<long>();
    if (bits < 64 || bits > 8192) schema_fail("precision must lie in [64, 8192] bits");
    p.precision_bits = static_cast<unsigned>(bits);
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      schema_fail("seed must be a non-negative integer");
    p.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerance_scale")) {
    if (!j["tolerance_scale"].is_number()) schema_fail("tolerance_scale must be a number");
    p.tolerance_scale = j["tolerance_scale"].get<double>();
    if (!(p.tolerance_scale > 0)) schema_fail("tolerance_scale must be positive");
  }
  return p;
}

ProblemConfig load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("schema: cannot open problem file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

RayClassDatum problem_datum(const ProblemConfig& p) {
  if (!p.has_field())
    throw invalid_argument_error("schema: this command needs a field section");
  return make_datum(*p.F, *p.ideal_f, *p.ideal_a0, p.z);
}

Fan problem_fan(const ProblemConfig& p, const RayClassDatum& d) {
  if (p.fan_kind == "standard-quadratic")
    return quadratic_standard_fan(d.F, d.units.eps_f);
  if (p.fan_kind == "refined-quadratic")
    return quadratic_refined_fan(d.F, d.units.eta0, d.units.r);
  if (!d.F.is_totally_positive(p.fan_unit))
    throw invalid_argument_error("fan unit must be totally positive");
  for (const auto& c : p.fan_cones)
    for (const auto& g : c)
      if (!d.F.is_totally_positive(g))
        throw invalid_argument_error("fan generators must be totally positive");
  return Fan{p.fan_cones, p.fan_unit};
}

std::string report_to_json_text(const ProblemConfig& p, const RayClassDatum& d,
                                const InvariantReport& r, bool include_ledger,
                                std::optional<double> timing_ms) {
  json out;
  out["tool"] = json{{"name", "rayclass"}, {"version", version_string()}};
  out["precision_bits"] = p.precision_bits;
  out["seed"] = p.seed;
  out["tolerance_scale"] = p.tolerance_scale;
  out["field"] = json{{"mode", "quadratic"}, {"D", d.F.D()}};
  out["fan"] = p.fan_kind;
  out["datum"] = json{
      {"z", elem_json(d.z)},
      {"b_basis", json::array({elem_json(d.b.basis1()), elem_json(d.b.basis2())})},
      {"norm_b_inverse_f", to_string(norm_b_inverse_f(d))},
      {"units",
       json{{"eps0", elem_json(d.units.eps0)},
            {"eta0", elem_json(d.units.eta0)},
            {"r", d.units.r},
            {"eps_f", elem_json(d.units.eps_f)}}},
      {"mu", json::array({elem_json(d.mu[0]), elem_json(d.mu[1])})},
      {"mu_total", elem_json(d.mu_total)}};
  out["zeta0"] = to_string(r.zeta0);
  out["zeta_deriv0"] = ball_json(r.zeta_deriv0);
  out["logX"] = ball_json(r.logX);
  json places = json::array();
  for (std::size_t i = 0; i < r.logXi_faces.size(); ++i)
    places.push_back(json{{"place", i + 1},
                          {"faces", ball_json(r.logXi_faces[i])},
                          {"upper", ball_json(r.logXi_upper[i])}});
  out["logX_places"] = places;
  json res = json::array();
  bool failed = false;
  for (const auto& c : r.residuals) {
    const double bound = c.bound * p.tolerance_scale;
    const bool pass = c.value <= bound;
    failed = failed || !pass;
    res.push_back(
        json{{"name", c.name}, {"value", c.value}, {"bound", bound}, {"pass", pass}});
  }
  out["residuals"] = res;
  out["status"] = failed ? "failed" : "ok";
  if (include_ledger)
    out["ledger"] = json{{"plus", ledger_json(r.ledger_plus)},
                         {"minus", ledger_json(r.ledger_minus)}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out.dump(2) + "\n";
}

}  // namespace rayclass
