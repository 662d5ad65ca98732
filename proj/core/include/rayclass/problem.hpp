#pragma once

#include "rayclass/datum.hpp"
#include "rayclass/fan.hpp"
#include "rayclass/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rayclass {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Parsed problem file. Rational numbers arrive as exact "p/q" strings and
// field elements as [a, b] coefficient pairs over the (1, w0) basis. The
// field section is optional: the synthetic verification suites run without
// one.
struct ProblemConfig {
  std::optional<QuadraticField> F;
  std::optional<Lattice> ideal_f;
  std::optional<Lattice> ideal_a0;
  std::optional<FieldElem> z;
  bool has_field() const { return F.has_value(); }
  std::string fan_kind = "standard-quadratic";
  std::vector<std::vector<FieldElem>> fan_cones;  // custom fan only
  FieldElem fan_unit;                             // custom fan only
  unsigned precision_bits = 128;
  std::uint64_t seed = kDefaultSeed;
  double tolerance_scale = 1.0;
};

// Throws invalid_argument_error with a schema message on any malformed input.
ProblemConfig parse_problem_text(const std::string& text);
ProblemConfig load_problem_file(const std::string& path);

RayClassDatum problem_datum(const ProblemConfig& p);
Fan problem_fan(const ProblemConfig& p, const RayClassDatum& d);

// Deterministic JSON report for the full pipeline. timing is injected only
// on request since it breaks byte-identical reruns.
std::string report_to_json_text(const ProblemConfig& p, const RayClassDatum& d,
                                const InvariantReport& r, bool include_ledger,
                                std::optional<double> timing_ms);

}  // namespace rayclass
