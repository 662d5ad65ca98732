#pragma once

#include "rayclass/barnes.hpp"
#include "rayclass/datum.hpp"
#include "rayclass/fan.hpp"
#include "rayclass/lattice_points.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rayclass {

// One fan cone with its attached lattice points: generators scaled into b
// (kept as supplied when already inside) and height-sorted; x coordinates of
// each point refer to that generator order.
struct LedgerEntry {
  std::size_t cone = 0;
  std::vector<FieldElem> gens;
  std::vector<FieldPoint> points;
};
using Ledger = std::vector<LedgerEntry>;

// Lattice points of every fan cone in the window variant P, shifted by
// sign * z. The minus ledger is the plus ledger of the flipped class.
Ledger zeta_terms(const Fan& fan, const RayClassDatum& d, int sign, int h = 1);

// zeta(0, C): exact rational, fan-independent (the norm prefactor is 1 at 0)
Rat partial_zeta_at0(const RayClassDatum& d, const Fan& fan, int sign = 1);

// zeta'(0, C) = -log N(b^{-1} f) zeta_f(0, sign z + b) + zeta_f'(0, sign z + b)
Ball partial_zeta_deriv0(const RayClassDatum& d, const Fan& fan, int sign = 1);

// log X(C) as the joint xi'(0) sum over the plus ledger; also checks the
// exact vanishing of xi_f(0, z + b)
Ball compute_X(const RayClassDatum& d, const Fan& fan);

// log X_i(C) summed over every cone of the fan (rays included), window P
Ball compute_Xi_faces(const RayClassDatum& d, const Fan& fan, int i);

// log X_i(C) summed over the full-dimensional cones only, window P^u at
// height index h; must agree with the faces route
Ball compute_Xi_upper(const RayClassDatum& d, const Fan& fan, int i, int h);

struct Residual {
  double value = 0;
  double bound = 0;
  bool pass() const { return value <= bound; }
};

// |log X_i(mu_j C) + log X_i(C)| for i != j; for i = j the triangle bound
// through the composite flip mu C, which reduces the claim to the i != j
// case plus the sign flip of X_i under mu
Residual verify_relation(const RayClassDatum& d, const Fan& fan, int i, int j);

struct CharacterEntry {
  std::string label;
  std::complex<double> chi;  // unit modulus
  Ball log_value;            // log X or log X_i of the class
};
struct CharacterTable {
  std::vector<CharacterEntry> entries;
};
enum class LMode { X, Xi };
struct LDerivResult {
  std::complex<double> value;
  double bound = 0;
};

// L'(0, chi) = -(1/2) sum over classes of chi(C) log X(C) (or log X_i)
LDerivResult lfunction_deriv(const CharacterTable& table, LMode mode);

struct NamedResidual {
  std::string name;
  double value = 0;
  double bound = 0;
  bool pass = false;
};

struct InvariantReport {
  Rat zeta0;
  Ball zeta_deriv0;
  Ball logX;
  std::vector<Ball> logXi_faces;
  std::vector<Ball> logXi_upper;
  std::vector<NamedResidual> residuals;
  Ledger ledger_plus;
  Ledger ledger_minus;
  bool failed = false;
};

// Full pipeline on one datum and fan: both ledgers, exact zeta(0), certified
// zeta'(0), log X by the xi route, per-place logs by both routes, and the
// internal identity residuals
InvariantReport compute_report(const RayClassDatum& d, const Fan& fan);

}  // namespace rayclass
