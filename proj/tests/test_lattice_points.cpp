#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rayclass/errors.hpp"
#include "rayclass/lattice_points.hpp"
#include "rayclass/linalg.hpp"
#include "rayclass/rng.hpp"

#include <algorithm>
#include <vector>

using namespace rayclass;

namespace {

std::vector<Rat> rv(long a, long b) { return {Rat(a), Rat(b)}; }

std::vector<std::vector<Rat>> id2() { return {rv(1, 0), rv(0, 1)}; }

// ambient coordinates, order-insensitive
std::vector<std::vector<Rat>> ambient(const std::vector<RatPoint>& pts) {
  std::vector<std::vector<Rat>> out;
  out.reserve(pts.size());
  for (const auto& q : pts) out.push_back(q.p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("variant windows encode the four parallelotopes") {
  auto p = variant_windows(PVariant::P, 2, 0b01);
  for (const auto& w : p) {
    CHECK(w.low_open);
    CHECK(w.high_closed);
  }
  auto po = variant_windows(PVariant::Popen, 2, 0);
  CHECK(po[0].low_open);
  CHECK_FALSE(po[0].high_closed);
  // generator 1 on the plus side: (0,1] there, [0,1) on the minus side
  auto pu = variant_windows(PVariant::Pupper, 2, 0b10);
  CHECK_FALSE(pu[0].low_open);
  CHECK_FALSE(pu[0].high_closed);
  CHECK(pu[1].low_open);
  CHECK(pu[1].high_closed);
  auto pl = variant_windows(PVariant::Plower, 2, 0b10);
  CHECK(pl[0].low_open);
  CHECK(pl[0].high_closed);
  CHECK_FALSE(pl[1].low_open);
  CHECK_FALSE(pl[1].high_closed);
}

TEST_CASE("full enumeration on unit and stretched cones") {
  auto win = variant_windows(PVariant::P, 2, 0);
  std::vector<Rat> half{Rat(1, 2), Rat(1, 2)};

  auto pts = enumerate_full(id2(), id2(), half, win);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].p == half);
  CHECK(pts[0].x == half);

  // doubling one generator doubles the cell: two shifted points
  std::vector<std::vector<Rat>> wide{rv(2, 0), rv(0, 1)};
  auto two = enumerate_full(wide, id2(), half, win);
  REQUIRE(two.size() == 2);
  auto amb = ambient(two);
  CHECK(amb[0] == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(amb[1] == std::vector<Rat>{Rat(3, 2), Rat(1, 2)});
  for (const auto& q : two) {
    if (q.p[0] == Rat(1, 2))
      CHECK(q.x == std::vector<Rat>{Rat(1, 4), Rat(1, 2)});
    else
      CHECK(q.x == std::vector<Rat>{Rat(3, 4), Rat(1, 2)});
  }
}

TEST_CASE("zero shift distinguishes the variants") {
  std::vector<Rat> zero{Rat(0), Rat(0)};
  auto p = enumerate_full(id2(), id2(), zero, variant_windows(PVariant::P, 2, 0));
  REQUIRE(p.size() == 1);
  CHECK(p[0].p == rv(1, 1));

  CHECK(enumerate_full(id2(), id2(), zero, variant_windows(PVariant::Popen, 2, 0)).empty());

  // upward limits along e_2: (0,1) sits on the plus side, (1,0) on the minus side
  auto up = enumerate_full(id2(), id2(), zero, variant_windows(PVariant::Pupper, 2, 0b10));
  REQUIRE(up.size() == 1);
  CHECK(up[0].p == rv(0, 1));
  CHECK(up[0].x == rv(0, 1));

  auto low = enumerate_full(id2(), id2(), zero, variant_windows(PVariant::Plower, 2, 0b10));
  REQUIRE(low.size() == 1);
  CHECK(low[0].p == rv(1, 0));
}

TEST_CASE("full enumeration rejects bad input") {
  auto win = variant_windows(PVariant::P, 2, 0);
  std::vector<std::vector<Rat>> dep{rv(1, 1), rv(2, 2)};
  CHECK_THROWS_AS(enumerate_full(dep, id2(), rv(0, 0), win), geometry_error);
  CHECK_THROWS_AS(enumerate_full({rv(1, 0)}, id2(), rv(0, 0), win), invalid_argument_error);
}

TEST_CASE("ray enumeration in the plane") {
  CoordWindow w{true, true};

  auto a = enumerate_ray2(rv(1, 1), id2(), rv(0, 0), w);
  REQUIRE(a.size() == 1);
  CHECK(a[0].p == rv(1, 1));
  CHECK(a[0].x == std::vector<Rat>{Rat(1)});

  auto b = enumerate_ray2(rv(1, 1), id2(), {Rat(1, 2), Rat(1, 2)}, w);
  REQUIRE(b.size() == 1);
  CHECK(b[0].p == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(b[0].x == std::vector<Rat>{Rat(1, 2)});

  auto c = enumerate_ray2(rv(1, 2), id2(), {Rat(1, 2), Rat(0)}, w);
  REQUIRE(c.size() == 1);
  CHECK(c[0].p == std::vector<Rat>{Rat(1, 2), Rat(1)});

  // imprimitive generator: t = 1/2 and t = 1 both land in the lattice
  auto d = enumerate_ray2(rv(2, 4), id2(), rv(0, 0), w);
  REQUIRE(d.size() == 2);
  auto amb = ambient(d);
  CHECK(amb[0] == rv(1, 2));
  CHECK(amb[1] == rv(2, 4));

  // affine line misses the shifted lattice entirely
  CHECK(enumerate_ray2(rv(1, 0), id2(), {Rat(0), Rat(1, 2)}, w).empty());

  // open window drops the endpoint
  CHECK(enumerate_ray2(rv(1, 1), id2(), rv(0, 0), CoordWindow{true, false}).empty());

  CHECK_THROWS_AS(enumerate_ray2(rv(0, 0), id2(), rv(0, 0), w), invalid_argument_error);
}

TEST_CASE("conjugate coordinates") {
  CHECK(conjugate_coords({Rat(1, 2), Rat(1, 2)}) == std::vector<Rat>({Rat(1, 2), Rat(1, 2)}));
  CHECK(conjugate_coords({Rat(1), Rat(1)}) == std::vector<Rat>({Rat(1), Rat(1)}));
  CHECK(conjugate_coords({Rat(1, 4), Rat(3, 4)}) == std::vector<Rat>({Rat(3, 4), Rat(1, 4)}));
}

TEST_CASE("field mode enumerates the modulus-two cell") {
  QuadraticField F(5);
  FieldElem two(Rat(2), Rat(0));
  Lattice b = Lattice::principal(F, two);
  // primitive generators in b of the rays through 1 and 9+4*sqrt(5),
  // listed in decreasing height at the first place
  std::vector<FieldElem> gens{FieldElem(Rat(10), Rat(16)), two};
  FieldElem z = F.one();

  auto pts = parallelotope_points(F, gens, 1, b, z, PVariant::P);
  // coordinate matrix of the generators over the basis of b has |det| = 8
  CHECK(pts.size() == 8);
  for (const auto& q : pts) {
    CHECK(b.contains(F.sub(q.p, z)));
    REQUIRE(q.x.size() == 2);
    for (const auto& xk : q.x) {
      CHECK(xk > 0);
      CHECK(xk <= 1);
    }
  }

  // every half-open cell is a fundamental domain for the same sublattice
  CHECK(parallelotope_points(F, gens, 1, b, z, PVariant::Pupper).size() == 8);
  CHECK(parallelotope_points(F, gens, 1, b, z, PVariant::Plower).size() == 8);
  // the open cell loses the point sitting on the far face x_1 = 1
  auto open = parallelotope_points(F, gens, 1, b, z, PVariant::Popen);
  CHECK(open.size() < 8);

  // one-dimensional piece: t*2 = 1 mod 2 O_F forces t = 1/2
  auto ray = parallelotope_points(F, {two}, 1, b, z, PVariant::P);
  REQUIRE(ray.size() == 1);
  CHECK(ray[0].p == F.one());
  CHECK(ray[0].x == std::vector<Rat>({Rat(1, 2)}));
}

TEST_CASE("conjugate point swaps the cosets of z and -z") {
  QuadraticField F(5);
  FieldElem two(Rat(2), Rat(0));
  Lattice b = Lattice::principal(F, two);
  std::vector<FieldElem> gens{FieldElem(Rat(10), Rat(16)), two};
  FieldElem z = F.one();

  auto plus = parallelotope_points(F, gens, 1, b, z, PVariant::P);
  auto minus = parallelotope_points(F, gens, 1, b, F.neg(z), PVariant::P);
  REQUIRE(plus.size() == 8);
  REQUIRE(minus.size() == 8);

  for (const auto& q : plus) {
    FieldPoint c = conjugate_point(F, gens, q);
    CHECK(b.contains(F.add(c.p, z)));
    bool found = false;
    for (const auto& m : minus)
      if (m.p == c.p && m.x == c.x) found = true;
    CHECK(found);
    // involution
    FieldPoint back = conjugate_point(F, gens, c);
    CHECK(back.p == q.p);
    CHECK(back.x == q.x);
  }

  CHECK_THROWS_AS(conjugate_point(F, gens, FieldPoint{z, {Rat(1, 2)}}), invalid_argument_error);
  CHECK_THROWS_AS(conjugate_point(F, gens, FieldPoint{z, {Rat(3, 2), Rat(1, 2)}}),
                  invalid_argument_error);
}

TEST_CASE("field mode rejects bad cones") {
  QuadraticField F(5);
  FieldElem two(Rat(2), Rat(0));
  Lattice b = Lattice::principal(F, two);
  FieldElem z = F.one();

  CHECK_THROWS_AS(parallelotope_points(F, {F.one()}, 1, b, z, PVariant::P), geometry_error);
  std::vector<FieldElem> tied{two, two};
  CHECK_THROWS_AS(parallelotope_points(F, tied, 1, b, z, PVariant::P), geometry_error);
  CHECK_THROWS_AS(parallelotope_points(F, {two}, 1, b, z, PVariant::Pupper),
                  invalid_argument_error);
  CHECK_THROWS_AS(parallelotope_points(F, {two}, 3, b, z, PVariant::P), invalid_argument_error);
}

TEST_CASE("point count equals the generator determinant") {
  SplitMix64 rng(1729);
  int done2 = 0, done3 = 0;
  while (done2 < 120) {
    std::vector<std::vector<Rat>> gens(2, std::vector<Rat>(2));
    for (auto& col : gens)
      for (auto& e : col) e = Rat(rng.next_in(-5, 5));
    Rat d = det_cols(gens);
    if (d == 0) continue;
    std::vector<Rat> shift{Rat(rng.next_in(-3, 3), rng.next_in(1, 5)),
                           Rat(rng.next_in(-3, 3), rng.next_in(1, 5))};
    auto pts = enumerate_full(gens, id2(), shift, variant_windows(PVariant::P, 2, 0));
    CHECK(Rat(static_cast<long>(pts.size())) == abs(d));
    ++done2;
  }
  std::vector<std::vector<Rat>> id3{{Rat(1), Rat(0), Rat(0)},
                                    {Rat(0), Rat(1), Rat(0)},
                                    {Rat(0), Rat(0), Rat(1)}};
  while (done3 < 40) {
    std::vector<std::vector<Rat>> gens(3, std::vector<Rat>(3));
    for (auto& col : gens)
      for (auto& e : col) e = Rat(rng.next_in(-3, 3));
    Rat d = det_cols(gens);
    if (d == 0) continue;
    std::vector<Rat> shift(3);
    for (auto& s : shift) s = Rat(rng.next_in(-2, 2), rng.next_in(1, 4));
    auto pts = enumerate_full(gens, id3, shift, variant_windows(PVariant::P, 3, 0));
    CHECK(Rat(static_cast<long>(pts.size())) == abs(d));
    ++done3;
  }
}
