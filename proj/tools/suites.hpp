#pragma once

#include "rayclass/problem.hpp"

#include <json.hpp>

#include <string>

namespace raycli {

// One verification suite: a row table plus an overall verdict. Rows carry
// either a residual (value, bound, pass) or an exact trial count; the
// document is fully deterministic for a fixed problem + seed + precision.
struct SuiteResult {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool ok = true;
};

SuiteResult run_sine_oracles(const rayclass::ProblemConfig& p);
SuiteResult run_combinatorics(const rayclass::ProblemConfig& p);
SuiteResult run_factorization(const rayclass::ProblemConfig& p);
SuiteResult run_independence(const rayclass::ProblemConfig& p);
SuiteResult run_relation(const rayclass::ProblemConfig& p);

SuiteResult run_suite(const std::string& which, const rayclass::ProblemConfig& p);

}  // namespace raycli
