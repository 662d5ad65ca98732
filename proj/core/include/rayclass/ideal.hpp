#pragma once

#include "rayclass/numberfield.hpp"
#include "rayclass/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rayclass {

// Full-rank lattice in a real quadratic field (fractional ideals are the
// main case, but any Z-module of rank 2 is representable, e.g. mu^{-1} b).
// The basis is kept in column Hermite form over the (1, w0) coordinates:
//   [ a  b ]
//   [ 0  c ]   with a, c > 0 and 0 <= b < a, all rational.
// Canonical form makes equality a plain comparison.
class Lattice {
 public:
  // module generated by the given elements (must span rank 2)
  static Lattice span(const QuadraticField& F, const std::vector<FieldElem>& gens);
  // principal ideal g O_F
  static Lattice principal(const QuadraticField& F, const FieldElem& g);
  static Lattice ring_of_integers(const QuadraticField& F);

  const FieldElem& basis1() const { return b1_; }
  const FieldElem& basis2() const { return b2_; }

  // coordinates of x in this basis (always solvable: basis is full rank)
  std::array<Rat, 2> coords(const FieldElem& x) const;
  bool contains(const FieldElem& x) const;
  // x in lattice, primitive = not a nontrivial integer multiple of a member
  bool is_primitive(const FieldElem& x) const;
  // primitive generator of the ray R_+ x inside the lattice
  FieldElem primitive_in_ray(const FieldElem& x) const;

  Lattice scaled(const QuadraticField& F, const FieldElem& c) const;
  Lattice ideal_mul(const QuadraticField& F, const Lattice& other) const;
  // inverse fractional ideal, valid when *this is an ideal of O_F
  Lattice ideal_inverse(const QuadraticField& F) const;

  // |det| of the basis in (1, w0) coordinates = absolute ideal norm for
  // fractional ideals (covolume of O_F is normalized to 1)
  Rat covolume() const;
  bool sublattice_of(const Lattice& other) const;
  // [other : this] for this contained in other
  Rat index_in(const Lattice& other) const;
  bool is_integral() const;

  friend bool operator==(const Lattice& x, const Lattice& y) {
    return x.b1_ == y.b1_ && x.b2_ == y.b2_;
  }
  friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }

 private:
  Lattice(FieldElem b1, FieldElem b2) : b1_(std::move(b1)), b2_(std::move(b2)) {}
  FieldElem b1_, b2_;
};

}  // namespace rayclass
