#include "rayclass/datum.hpp"

#include "rayclass/errors.hpp"

namespace rayclass {

namespace {

// First totally positive element in the sup-norm-shell, lexicographic scan
// of coefficient vectors over the (1, w0) basis. Shell 1 already contains 1,
// so this is 1 for every field, but the enumeration is the contract.
FieldElem default_z(const QuadraticField& F) {
  for (long m = 1; m <= 4; ++m) {
    for (long a = -m; a <= m; ++a)
      for (long b = -m; b <= m; ++b) {
        if (std::max(std::labs(a), std::labs(b)) != m) continue;
        FieldElem cand{Rat(a), Rat(b)};
        if (F.is_totally_positive(cand)) return cand;
      }
  }
  throw invalid_argument_error("no totally positive element in the search shells");
}

void check_z(const QuadraticField& F, const FieldElem& z, const Lattice& b) {
  if (!F.is_totally_positive(z))
    throw invalid_argument_error("z must be totally positive");
  if (b.contains(z))
    throw invalid_argument_error("z-in-b: z lies in the lattice b");
}

}  // namespace

RayClassDatum make_datum(const QuadraticField& F, const Lattice& f, const Lattice& a0,
                         std::optional<FieldElem> z) {
  if (!f.is_integral())
    throw invalid_argument_error("the modulus f must be an integral ideal");
  const Lattice O = Lattice::ring_of_integers(F);
  if (f.index_in(O) == 1)
    throw invalid_argument_error(
        "f-is-unit-ideal: the modulus must be a proper ideal of O_F");
  if (!a0.is_integral())
    throw invalid_argument_error("a0 must be an integral ideal");

  const FieldElem zv = z ? *z : default_z(F);
  const Lattice b = a0.ideal_inverse(F).scaled(F, zv).ideal_mul(F, f);
  check_z(F, zv, b);
  std::vector<FieldElem> mu{find_signed_generator(F, f, 1),
                            find_signed_generator(F, f, 2)};
  FieldElem mu_total = F.mul(mu[0], mu[1]);
  return RayClassDatum{F,           f, a0, zv, b, unit_group_mod(F, f),
                       std::move(mu), mu_total};
}

RayClassDatum flip_datum(const RayClassDatum& d) {
  RayClassDatum out = d;
  out.a0 = d.a0.scaled(d.F, d.mu_total);
  out.z = d.F.neg(d.F.mul(d.mu_total, d.z));
  out.b = out.a0.ideal_inverse(d.F).scaled(d.F, out.z).ideal_mul(d.F, d.f);
  check_z(d.F, out.z, out.b);
  return out;
}

RayClassDatum place_flip_datum(const RayClassDatum& d, int j) {
  if (j < 1 || j > 2) throw invalid_argument_error("place index out of range");
  const FieldElem& m = d.mu[static_cast<std::size_t>(j - 1)];
  RayClassDatum out = d;
  out.a0 = d.a0.scaled(d.F, m);
  out.b = d.b.scaled(d.F, d.F.inv(m));
  check_z(d.F, out.z, out.b);
  return out;
}

RayClassDatum chain_flip_datum(const RayClassDatum& d) {
  RayClassDatum out = d;
  out.a0 = d.a0.scaled(d.F, d.mu_total);
  out.b = d.b.scaled(d.F, d.F.inv(d.mu_total));
  check_z(d.F, out.z, out.b);
  return out;
}

Rat norm_b_inverse_f(const RayClassDatum& d) {
  Rat n = d.f.covolume() / d.b.covolume();
  if (n <= 0) throw geometry_error("degenerate lattice norm");
  return n;
}

}  // namespace rayclass
