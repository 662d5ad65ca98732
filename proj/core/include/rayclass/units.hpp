#pragma once

#include "rayclass/ideal.hpp"
#include "rayclass/numberfield.hpp"

#include <vector>

namespace rayclass {

// Unit data attached to a ray class modulus f:
//   eps0   fundamental unit of O_F^x, normalized eps0 > 1 at the first place
//   eta0   smallest totally positive power of eps0 (eps0 itself if N = +1)
//   r      smallest k >= 1 with eta0^k = 1 mod f
//   eps_f  = eta0^r, the generator of E_f = totally positive units = 1 mod f
struct UnitGroupData {
  FieldElem eps0;
  int norm_eps0 = 1;
  FieldElem eta0;
  long r = 0;
  FieldElem eps_f;
};

// Continued fraction expansion of w0; the first convergent combination of
// absolute norm 1 is the fundamental unit.
FieldElem fundamental_unit(const QuadraticField& F);

UnitGroupData unit_group_mod(const QuadraticField& F, const Lattice& f);

// Generator of E_f oriented so that its i-th embedding exceeds 1.
FieldElem fundamental_unit_Ef(const QuadraticField& F, const Lattice& f, int i);

// mu_j of the sign-flip relation: an element of 1 + f, negative at place j
// and positive at every other place, not a unit (a unit mu_j would make the
// translated class equal to the original). Search runs over coefficient
// vectors c of the Hermite basis of f by sup-norm shells, lexicographic
// within a shell; mu = 1 + c . basis.
FieldElem find_signed_generator(const QuadraticField& F, const Lattice& f, int j,
                                int shell_bound = 50);

bool is_unit(const QuadraticField& F, const FieldElem& x);

}  // namespace rayclass
