#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rayclass/datum.hpp"
#include "rayclass/errors.hpp"
#include "rayclass/ideal.hpp"
#include "rayclass/numberfield.hpp"
#include "rayclass/units.hpp"

using namespace rayclass;

TEST_CASE("quadratic field arithmetic over the integral basis") {
  QuadraticField F(5);  // w0 = (1+sqrt5)/2, w0^2 = w0 + 1
  CHECK(F.P() == 1);
  CHECK(F.Q() == 1);
  FieldElem w = F.w0();
  CHECK(F.mul(w, w) == F.add(w, F.one()));
  CHECK(F.norm(w) == -1);
  CHECK(F.trace(w) == 1);

  QuadraticField G(2);  // w0 = sqrt2
  CHECK(G.P() == 0);
  CHECK(G.Q() == 2);
  CHECK(G.norm(G.w0()) == -2);
  CHECK(G.trace(G.w0()) == 0);

  FieldElem x(Rat(3), Rat(2));  // 3 + 2 sqrt2
  CHECK(G.norm(x) == 1);
  CHECK(G.mul(x, G.inv(x)) == G.one());
  CHECK(G.conj(F.w0()).b == -1);
}

TEST_CASE("embeddings and total positivity") {
  QuadraticField F(5);
  FieldElem w = F.w0();  // golden ratio at place 1, its conjugate at place 2
  CHECK(sgn(F.embed(w, 1)) == 1);
  CHECK(sgn(F.embed(w, 2)) == -1);
  CHECK_FALSE(F.is_totally_positive(w));
  CHECK(F.is_totally_positive(F.add(w, F.one())));  // 1 + w0 = w0^2

  // exact sign near a tight cancellation: 161 - 72 sqrt5 > 0 (161^2 = 25921 > 25920)
  QuadraticField G(5);
  Quad tight(Rat(161), Rat(-72), 5);
  CHECK(sgn(tight) == 1);
  Quad tight2(Rat(161), Rat(-73), 5);
  CHECK(sgn(tight2) == -1);
}

TEST_CASE("fundamental units by continued fractions") {
  struct Row { long long D; Rat a, b; int norm; };
  // eps0 over the (1, w0) basis
  const Row rows[] = {
      {2, Rat(1), Rat(1), -1},    // 1 + sqrt2
      {3, Rat(2), Rat(1), 1},     // 2 + sqrt3
      {5, Rat(0), Rat(1), -1},    // w0 = (1+sqrt5)/2
      {7, Rat(8), Rat(3), 1},     // 8 + 3 sqrt7
      {13, Rat(1), Rat(1), -1},   // 1 + w0 = (3+sqrt13)/2
  };
  for (const auto& r : rows) {
    QuadraticField F(r.D);
    FieldElem u = fundamental_unit(F);
    CHECK(u.a == r.a);
    CHECK(u.b == r.b);
    CHECK(F.norm(u) == r.norm);
    CHECK(sgn(F.embed(u, 1)) == 1);
  }
}

TEST_CASE("lattices in Hermite form") {
  QuadraticField F(5);
  Lattice OF = Lattice::ring_of_integers(F);
  CHECK(OF.basis1() == F.one());
  CHECK(OF.basis2() == F.w0());
  CHECK(OF.covolume() == 1);

  Lattice two = Lattice::principal(F, FieldElem(Rat(2)));
  CHECK(two.covolume() == 4);
  CHECK(two.sublattice_of(OF));
  CHECK(two.index_in(OF) == 4);
  CHECK(two.contains(FieldElem(Rat(2), Rat(2))));
  CHECK_FALSE(two.contains(F.one()));
  CHECK(two.is_integral());

  // principal ideal of a non-rational generator: N(w0) = -1, so covolume 1
  Lattice ww = Lattice::principal(F, F.w0());
  CHECK(ww.covolume() == 1);
  CHECK(ww == OF);  // w0 is a unit

  Lattice sp = Lattice::span(F, {FieldElem(Rat(2)), FieldElem(Rat(0), Rat(2)),
                                 FieldElem(Rat(1), Rat(1))});
  CHECK(sp.covolume() == 2);

  Lattice inv = two.ideal_inverse(F);
  CHECK(inv.covolume() == Rat(1, 4));
  CHECK(two.ideal_mul(F, inv) == OF);
}

TEST_CASE("primitivity in a lattice") {
  QuadraticField F(2);
  Lattice OF = Lattice::ring_of_integers(F);
  FieldElem g(Rat(2), Rat(2));
  CHECK_FALSE(OF.is_primitive(g));
  CHECK(OF.primitive_in_ray(g) == FieldElem(Rat(1), Rat(1)));
  CHECK(OF.is_primitive(FieldElem(Rat(1), Rat(1))));
  // scaling the ray down still recovers the primitive point
  CHECK(OF.primitive_in_ray(FieldElem(Rat(1, 3), Rat(1, 3))) == FieldElem(Rat(1), Rat(1)));
}

TEST_CASE("unit group mod f on the worked instances") {
  {
    QuadraticField F(5);
    Lattice f = Lattice::principal(F, FieldElem(Rat(2)));
    UnitGroupData u = unit_group_mod(F, f);
    CHECK(u.eps0 == F.w0());
    CHECK(u.norm_eps0 == -1);
    CHECK(u.eta0 == F.mul(u.eps0, u.eps0));  // w0^2 = 1 + w0 totally positive
    CHECK(u.r == 3);
    CHECK(u.eps_f == FieldElem(Rat(5), Rat(8)));  // 9 + 4 sqrt5
  }
  {
    QuadraticField F(2);
    Lattice f = Lattice::principal(F, FieldElem(Rat(3)));
    UnitGroupData u = unit_group_mod(F, f);
    CHECK(u.eps0 == FieldElem(Rat(1), Rat(1)));
    CHECK(u.norm_eps0 == -1);
    CHECK(u.eta0 == FieldElem(Rat(3), Rat(2)));  // 3 + 2 sqrt2
    CHECK(u.r == 4);
    CHECK(u.eps_f == FieldElem(Rat(577), Rat(408)));
  }
  {
    QuadraticField F(3);
    Lattice f = Lattice::principal(F, FieldElem(Rat(5)));
    UnitGroupData u = unit_group_mod(F, f);
    CHECK(u.eta0 == u.eps0);  // N(eps0) = +1 already
    CHECK(u.r == 3);
    CHECK(u.eps_f == FieldElem(Rat(26), Rat(15)));
  }
}

TEST_CASE("oriented generator of E_f per place") {
  QuadraticField F(5);
  Lattice f = Lattice::principal(F, FieldElem(Rat(2)));
  FieldElem e1 = fundamental_unit_Ef(F, f, 1);
  FieldElem e2 = fundamental_unit_Ef(F, f, 2);
  CHECK(to_real(F.embed(e1, 1)) > 1);
  CHECK(to_real(F.embed(e2, 2)) > 1);
  CHECK(F.mul(e1, e2) == F.one());  // the two orientations are inverse
}

TEST_CASE("signed generators mu_j") {
  QuadraticField F(5);
  Lattice f = Lattice::principal(F, FieldElem(Rat(2)));
  FieldElem m1 = find_signed_generator(F, f, 1);
  FieldElem m2 = find_signed_generator(F, f, 2);
  // mu_1 = -sqrt5 = 1 - 2 w0, mu_2 = sqrt5
  CHECK(m1 == FieldElem(Rat(1), Rat(-2)));
  CHECK(m2 == FieldElem(Rat(-1), Rat(2)));
  CHECK(sgn(F.embed(m1, 1)) == -1);
  CHECK(sgn(F.embed(m1, 2)) == 1);
  CHECK(f.contains(F.sub(m1, F.one())));
  CHECK_FALSE(is_unit(F, m1));
  CHECK(F.mul(m1, m2) == FieldElem(Rat(-5)));
}

TEST_CASE("datum assembly and flips") {
  QuadraticField F(5);
  Lattice f = Lattice::principal(F, FieldElem(Rat(2)));
  Lattice OF = Lattice::ring_of_integers(F);
  RayClassDatum d = make_datum(F, f, OF, F.one());
  CHECK(d.b == f);  // b = z a0^{-1} f = 2 O_F
  CHECK_FALSE(d.b.contains(d.z));
  CHECK(norm_b_inverse_f(d) == 1);
  CHECK(d.mu_total == FieldElem(Rat(-5)));

  RayClassDatum fl = flip_datum(d);
  CHECK(fl.z == F.neg(F.mul(d.mu_total, d.z)));
  CHECK(fl.b == d.b);
  CHECK(F.is_totally_positive(fl.z));

  RayClassDatum p1 = place_flip_datum(d, 1);
  CHECK(p1.z == d.z);
  // b' = mu_1^{-1} b has covolume |N(mu_1)|^{-1} * covol(b)
  CHECK(p1.b.covolume() == d.b.covolume() / 5);

  RayClassDatum ch = chain_flip_datum(d);
  CHECK(ch.z == d.z);
  CHECK(ch.b.covolume() == d.b.covolume() / 25);

  CHECK_THROWS_AS(make_datum(F, OF, OF, F.one()), invalid_argument_error);
}

TEST_CASE("datum rejects z inside b and non-integral data") {
  QuadraticField F(5);
  Lattice f = Lattice::principal(F, FieldElem(Rat(2)));
  Lattice OF = Lattice::ring_of_integers(F);
  // a0 contained in f puts z inside b = z a0^{-1} f
  Lattice four = Lattice::principal(F, FieldElem(Rat(4)));
  CHECK_THROWS_AS(make_datum(F, f, four, F.one()), invalid_argument_error);
  CHECK_THROWS_AS(make_datum(F, f, OF, F.w0()), invalid_argument_error);  // not tot. pos.
  // default z: deterministic, totally positive, outside b
  RayClassDatum d = make_datum(F, f, OF);
  CHECK(F.is_totally_positive(d.z));
  CHECK_FALSE(d.b.contains(d.z));
  CHECK(d.z == F.one());
}
