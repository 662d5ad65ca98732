#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rayclass/errors.hpp"
#include "rayclass/fan.hpp"
#include "rayclass/sampling.hpp"

#include <vector>

using namespace rayclass;

namespace {

FieldElem fe(long a, long b) { return FieldElem(Rat(a), Rat(b)); }

}  // namespace

TEST_CASE("standard fan is a cone and a ray") {
  QuadraticField F(5);
  FieldElem eps = fe(5, 8);  // 9 + 4*sqrt(5), fundamental unit of E_f for f = 2 O_F
  Fan fan = quadratic_standard_fan(F, eps);
  REQUIRE(fan.cones.size() == 2);
  CHECK(fan.cones[0] == std::vector<FieldElem>({F.one(), eps}));
  CHECK(fan.cones[1] == std::vector<FieldElem>({F.one()}));
  CHECK(fan.unit == eps);

  // orientation: the unit must exceed 1 at the first place
  CHECK_THROWS_AS(quadratic_standard_fan(F, F.conj(eps)), invalid_argument_error);
  CHECK_THROWS_AS(quadratic_standard_fan(F, F.neg(eps)), invalid_argument_error);
}

TEST_CASE("refined fan chains powers of eta") {
  QuadraticField F(5);
  FieldElem eta = fe(1, 1);  // 1 + w0, totally positive unit
  Fan fan = quadratic_refined_fan(F, eta, 3);
  REQUIRE(fan.cones.size() == 6);
  FieldElem eta2 = F.mul(eta, eta);
  FieldElem eta3 = F.mul(eta2, eta);
  CHECK(eta3 == fe(5, 8));  // eta^r recovers the standard unit
  CHECK(fan.unit == eta3);
  CHECK(fan.cones[0] == std::vector<FieldElem>({F.one(), eta}));
  CHECK(fan.cones[1] == std::vector<FieldElem>({F.one()}));
  CHECK(fan.cones[4] == std::vector<FieldElem>({eta2, eta3}));
  CHECK(fan.cones[5] == std::vector<FieldElem>({eta2}));

  CHECK_THROWS_AS(quadratic_refined_fan(F, eta, 0), invalid_argument_error);
}

TEST_CASE("relative interior membership is exact") {
  QuadraticField F(5);
  FieldElem eps = fe(5, 8);
  std::vector<FieldElem> cone{F.one(), eps};
  CHECK(relint_contains(F, cone, F.add(F.one(), eps)));
  CHECK_FALSE(relint_contains(F, cone, F.one()));        // boundary ray
  CHECK_FALSE(relint_contains(F, cone, fe(1597, 2584))); // eps^3, past the far ray
  std::vector<FieldElem> ray{F.one()};
  CHECK(relint_contains(F, ray, fe(3, 0)));
  CHECK_FALSE(relint_contains(F, ray, fe(1, 1)));
  CHECK_FALSE(relint_contains(F, ray, fe(-1, 0)));
}

TEST_CASE("cover and upper closure counts are one") {
  QuadraticField F(5);
  FieldElem eps = fe(5, 8);
  FieldElem eta = fe(1, 1);
  Fan std_fan = quadratic_standard_fan(F, eps);
  Fan ref_fan = quadratic_refined_fan(F, eta, 3);

  FieldElem interior = F.add(F.one(), eps);
  std::vector<FieldElem> samples{F.one(), eps, interior,
                                 F.mul(F.pow(eps, 2), interior), F.mul(eta, eta)};
  for (const auto& x : samples) {
    CHECK(fan_cover_count(F, std_fan, x) == 1);
    CHECK(fan_cover_count(F, ref_fan, x) == 1);
    for (int h : {1, 2}) {
      CHECK(fan_ucl_count(F, std_fan, h, x) == 1);
      CHECK(fan_ucl_count(F, ref_fan, h, x) == 1);
    }
  }

  // w0 is not totally positive
  CHECK_THROWS_AS(fan_cover_count(F, std_fan, F.w0()), invalid_argument_error);
}

TEST_CASE("fan transforms preserve the tiling") {
  QuadraticField F(5);
  FieldElem eps = fe(5, 8);
  Fan fan = quadratic_standard_fan(F, eps);
  FieldElem interior = F.add(F.one(), eps);

  Fan scaled = fan_scaled(F, fan, fe(1, 1));
  Fan moved = fan_translate_cone(F, fan, 0, 1);
  Fan split = fan_subdivide_cone(F, fan, 0, interior);
  REQUIRE(split.cones.size() == 4);
  CHECK(split.cones[0] == std::vector<FieldElem>({F.one(), interior}));
  CHECK(split.cones[2] == std::vector<FieldElem>({interior, eps}));
  CHECK(split.cones[3] == std::vector<FieldElem>({interior}));

  for (const auto& x : {F.one(), eps, interior, F.mul(eps, interior)}) {
    CHECK(fan_cover_count(F, scaled, x) == 1);
    CHECK(fan_cover_count(F, moved, x) == 1);
    CHECK(fan_cover_count(F, split, x) == 1);
    CHECK(fan_ucl_count(F, scaled, 1, x) == 1);
    CHECK(fan_ucl_count(F, moved, 2, x) == 1);
    CHECK(fan_ucl_count(F, split, 1, x) == 1);
  }

  // rescaling a generator never moves its ray
  Fan rescaled = fan_rescale_gen(fan, 0, 1, Int(3));
  CHECK(rescaled.cones[0][1] == fe(15, 24));
  CHECK(fan_cover_count(F, rescaled, interior) == 1);
  Fan prim = fan_primitivized(F, rescaled, Lattice::ring_of_integers(F));
  CHECK(prim.cones[0] == fan.cones[0]);
  CHECK(prim.cones[1] == fan.cones[1]);

  CHECK_THROWS_AS(fan_translate_cone(F, fan, 5, 1), invalid_argument_error);
  CHECK_THROWS_AS(fan_subdivide_cone(F, fan, 1, fe(3, 0)), geometry_error);
  CHECK_THROWS_AS(fan_subdivide_cone(F, fan, 0, F.one()), geometry_error);
  CHECK_THROWS_AS(fan_rescale_gen(fan, 0, 1, Int(0)), invalid_argument_error);
  CHECK_THROWS_AS(fan_scaled(F, fan, F.w0()), invalid_argument_error);
}

TEST_CASE("seeded sampling confirms the partitions") {
  QuadraticField F(5);
  FieldElem eps = fe(5, 8);
  Fan std_fan = quadratic_standard_fan(F, eps);
  Fan ref_fan = quadratic_refined_fan(F, fe(1, 1), 3);
  Fan split = fan_subdivide_cone(F, std_fan, 0, F.add(F.one(), eps));

  SplitMix64 rng(1729);
  for (const Fan* fan : {&std_fan, &ref_fan, &split}) {
    auto child = rng.split();
    auto cover = sample_fan_cover(F, *fan, 300, child);
    CHECK(cover.trials == 300);
    CHECK(cover.pass());
    for (int h : {1, 2}) {
      auto grand = rng.split();
      auto ucl = sample_fan_ucl(F, *fan, h, 300, grand);
      CHECK(ucl.trials == 300);
      CHECK(ucl.pass());
    }
  }
}
