#pragma once

#include "rayclass/ideal.hpp"
#include "rayclass/numberfield.hpp"
#include "rayclass/units.hpp"

#include <optional>
#include <vector>

namespace rayclass {

// Everything that pins down one ray class computation: the modulus f, the
// integral representative a0, the auxiliary totally positive z, and the
// derived lattice b = z a0^{-1} f. The partial zeta function of the class is
// N(b^{-1} f)^{-s} times the cone zeta over z + b.
struct RayClassDatum {
  QuadraticField F;
  Lattice f;
  Lattice a0;
  FieldElem z;
  Lattice b;
  UnitGroupData units;
  std::vector<FieldElem> mu;  // mu[j-1] negative at place j only, = 1 mod f
  FieldElem mu_total;         // product of the mu[j]
};

// Validates f proper integral and z totally positive outside b; when z is
// omitted picks the first totally positive element in the fixed coefficient
// enumeration of O_F.
RayClassDatum make_datum(const QuadraticField& F, const Lattice& f, const Lattice& a0,
                         std::optional<FieldElem> z = std::nullopt);

// Datum for the class mu * [a0] with z' = -mu z and b' = b; its +z' ledger
// is the -z ledger of the original datum.
RayClassDatum flip_datum(const RayClassDatum& d);

// Datum for the class mu_j * [a0] keeping the same z: a0' = mu_j a0,
// b' = mu_j^{-1} b. 1-based place index.
RayClassDatum place_flip_datum(const RayClassDatum& d, int j);

// Datum for mu * [a0] keeping the same z (the composite of all place flips):
// a0' = mu a0, b' = mu^{-1} b.
RayClassDatum chain_flip_datum(const RayClassDatum& d);

// N(b^{-1} f) as a positive rational (covolume ratio).
Rat norm_b_inverse_f(const RayClassDatum& d);

}  // namespace rayclass
