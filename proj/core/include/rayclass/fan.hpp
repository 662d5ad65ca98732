#pragma once

#include "rayclass/ideal.hpp"
#include "rayclass/numberfield.hpp"

#include <cstddef>
#include <vector>

namespace rayclass {

// Shintani fan for a real quadratic field: open cones (2-cones and rays,
// generator lists of size 2 and 1) whose translates under the totally
// positive unit tile the totally positive quadrant. Generators are field
// elements; they are re-primitivized against a concrete lattice just before
// any lattice-point enumeration.
struct Fan {
  std::vector<std::vector<FieldElem>> cones;
  FieldElem unit;  // generator of the translation action, totally positive
};

// {cone(1, eps), ray(1)} with unit action by eps
Fan quadratic_standard_fan(const QuadraticField& F, const FieldElem& eps);

// r cones (eta^{k+1}, eta^k) and r rays (eta^k), k = 0..r-1; eta^r is the unit
Fan quadratic_refined_fan(const QuadraticField& F, const FieldElem& eta, long r);

// scale every generator by a totally positive element
Fan fan_scaled(const QuadraticField& F, const Fan& fan, const FieldElem& c);

// translate a single cone by a power of the fan unit
Fan fan_translate_cone(const QuadraticField& F, const Fan& fan, std::size_t i, long power);

// stellar subdivision of 2-cone i along an interior vector w: the cone is
// replaced by two 2-cones plus the new interior ray
Fan fan_subdivide_cone(const QuadraticField& F, const Fan& fan, std::size_t i,
                       const FieldElem& w);

// rescale generator j of cone i by a positive integer (breaks primitivity)
Fan fan_rescale_gen(const Fan& fan, std::size_t i, std::size_t j, const Int& k);

// every generator replaced by the primitive lattice point on its ray
Fan fan_primitivized(const QuadraticField& F, const Fan& fan, const Lattice& lattice);

// exact membership of x in the relative interior of the cone over gens
bool relint_contains(const QuadraticField& F, const std::vector<FieldElem>& gens,
                     const FieldElem& x);

// number of pairs (cone, k in Z) with unit^-k * x in a relative interior;
// 1 for every totally positive x exactly when the fan tiles the quadrant
long fan_cover_count(const QuadraticField& F, const Fan& fan, const FieldElem& x);

// same count against the upper closures of the full-dimensional cones
long fan_ucl_count(const QuadraticField& F, const Fan& fan, int h, const FieldElem& x);

}  // namespace rayclass
