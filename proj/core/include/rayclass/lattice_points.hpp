#pragma once

#include "rayclass/cone.hpp"
#include "rayclass/ideal.hpp"
#include "rayclass/numberfield.hpp"

#include <vector>

namespace rayclass {

enum class PVariant { P, Popen, Pupper, Plower };

// Half-open coordinate window for one barycentric coordinate.
// P        : (0,1] everywhere
// Popen    : (0,1)
// Pupper   : (0,1] on Omega_plus, [0,1) on Omega_minus
// Plower   : mirrored
struct CoordWindow {
  bool low_open = true;    // x > 0 vs x >= 0
  bool high_closed = true; // x <= 1 vs x < 1
};

std::vector<CoordWindow> variant_windows(PVariant v, int d, FaceMask plus_mask);

struct RatPoint {
  std::vector<Rat> p;  // ambient coordinates
  std::vector<Rat> x;  // barycentric coordinates over the generators
};

// All points of shift + lattice in the coordinate window over gens.
// Exact: rational change of basis, integer box scan, exact filter.
// Full-dimensional case (d = n <= 4).
std::vector<RatPoint> enumerate_full(const std::vector<std::vector<Rat>>& gens,
                                     const std::vector<std::vector<Rat>>& lattice,
                                     const std::vector<Rat>& shift,
                                     const std::vector<CoordWindow>& win);

// Ray case in ambient dimension 2: points of shift + lattice on the ray
// through g with coordinate in the window.
std::vector<RatPoint> enumerate_ray2(const std::vector<Rat>& g,
                                     const std::vector<std::vector<Rat>>& lattice,
                                     const std::vector<Rat>& shift,
                                     const CoordWindow& win);

struct FieldPoint {
  FieldElem p;
  std::vector<Rat> x;
};

// Field mode: cone generators, lattice and shift live in the field; the
// enumeration happens on (1, w0)-coordinates. Generators must lie in the
// lattice. For Pupper/Plower the cone must be full-dimensional and the
// partition mask is computed from the stored height index.
std::vector<FieldPoint> parallelotope_points(const QuadraticField& F,
                                             const std::vector<FieldElem>& gens,
                                             int h, const Lattice& lattice,
                                             const FieldElem& shift, PVariant v);

// embeddings of cone generators as exact quadratic vectors, heights sorted
ConeK<Quad> embed_cone(const QuadraticField& F, const std::vector<FieldElem>& gens, int h);

// coordinatewise <-x_k> with <t> normalized into (0,1]; an involution of the
// parallelotope that sends points of z + b to points of -z + b
inline std::vector<Rat> conjugate_coords(const std::vector<Rat>& x) {
  std::vector<Rat> out;
  out.reserve(x.size());
  for (const auto& xk : x) out.push_back(fractional_part_unit(-xk));
  return out;
}

FieldPoint conjugate_point(const QuadraticField& F,
                           const std::vector<FieldElem>& gens,
                           const FieldPoint& pt);

}  // namespace rayclass
