#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rayclass/cone.hpp"
#include "rayclass/errors.hpp"

using namespace rayclass;
using V = VecK<Rat>;

namespace {
V v2(int a, int b) { return V{Rat(a), Rat(b)}; }
V v3(int a, int b, int c) { return V{Rat(a), Rat(b), Rat(c)}; }
}  // namespace

TEST_CASE("cone construction, sorting, ties") {
  auto c = cone_make<Rat>({v2(1, 0), v2(0, 1)});
  CHECK(c.dim() == 2);
  CHECK(c.ambient() == 2);

  CHECK_THROWS_AS(cone_make<Rat>({v2(1, 2), v2(2, 4)}), geometry_error);
  CHECK_THROWS_AS(cone_make<Rat>({v2(1, 0), v2(0, 1), v2(1, 1)}), geometry_error);

  // height sort: decreasing 2nd coordinate
  auto s = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);
  CHECK(s.gens[0] == v2(1, 3));
  CHECK(s.gens[1] == v2(1, 1));

  CHECK_THROWS_AS(cone_make<Rat>({v2(1, 2), v2(3, 2)}, 2), geometry_error);
  CHECK_THROWS_AS(cone_make<Rat>({v2(1, 0)}, 3), invalid_argument_error);
}

TEST_CASE("face enumeration counts") {
  CHECK(faces(cone_make<Rat>({v2(1, 0), v2(0, 1)})).size() == 3);
  CHECK(faces(cone_make<Rat>({v2(2, 1)})).size() == 1);
  CHECK(faces(cone_make<Rat>({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)})).size() == 7);
}

TEST_CASE("omega partition") {
  // e_2 = 1/2 (1,3) - 1/2 (1,1)
  auto c = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);
  auto [plus, minus] = omega_partition(c);
  CHECK(plus == 0b01);   // (1,3), the higher generator
  CHECK(minus == 0b10);  // (1,1)

  // e_1 = 2/3 (2,1) - 1/3 (1,2)
  auto d = cone_make<Rat>({v2(2, 1), v2(1, 2)}, 1);
  CHECK(d.gens[0] == v2(2, 1));
  auto [p1, m1] = omega_partition(d);
  CHECK(p1 == 0b01);
  CHECK(m1 == 0b10);

  // e_2 is itself a generator: zero coefficient
  auto e = cone_make<Rat>({v2(1, 0), v2(0, 1)}, 2);
  CHECK_THROWS_AS(omega_partition(e), geometry_error);
}

TEST_CASE("face classification") {
  auto c = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);  // stored ((1,3),(1,1))
  FaceClass top = classify_face(c, 0b11);
  CHECK(top.upper);
  CHECK(top.lower);
  FaceClass hi = classify_face(c, 0b01);  // ray (1,3)
  CHECK(hi.upper);
  CHECK_FALSE(hi.lower);
  FaceClass lo = classify_face(c, 0b10);  // ray (1,1)
  CHECK_FALSE(lo.upper);
  CHECK(lo.lower);
  CHECK_THROWS_AS(classify_face(c, FaceMask(0b100)), invalid_argument_error);

  // upper-face count is 2^{n - |Omega_+|}
  auto [plus, minus] = omega_partition(c);
  int uppers = 0;
  for (FaceMask t : faces(c))
    if (classify_face(c, t).upper) ++uppers;
  CHECK(uppers == (1 << (c.dim() - __builtin_popcount(plus))));
  // and every proper face is upper xor lower
  for (FaceMask t : faces(c)) {
    if (t == 0b11) continue;
    FaceClass fc = classify_face(c, t);
    CHECK(fc.upper != fc.lower);
  }
}

TEST_CASE("upper and lower closure membership") {
  auto c = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);
  CHECK(ucl_contains(c, v2(2, 4)));   // interior
  CHECK(ucl_contains(c, v2(1, 3)));   // upper ray
  CHECK_FALSE(ucl_contains(c, v2(1, 1)));
  CHECK(lcl_contains(c, v2(1, 1)));
  CHECK_FALSE(lcl_contains(c, v2(1, 3)));
  CHECK_FALSE(ucl_contains(c, v2(-1, 0)));
  CHECK_FALSE(ucl_contains(c, v2(0, 0)));
}

TEST_CASE("interior points sit in both closures") {
  auto c = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);
  V mid{Rat(2), Rat(4)};  // (1,3) + (1,1)
  CHECK(ucl_contains(c, mid));
  CHECK(lcl_contains(c, mid));
  CHECK(ucl_contains(c, v2(1, 2)));  // (1,2) = ((1,3) + (1,1))/2
  CHECK(lcl_contains(c, v2(1, 2)));
}

TEST_CASE("determinant signs and incidence") {
  auto id = cone_make<Rat>({v2(1, 0), v2(0, 1)});
  CHECK(sign_cone(id) == 1);
  auto sw = cone_make<Rat>({v2(0, 1), v2(1, 0)});
  CHECK(sign_cone(sw) == -1);

  CHECK(sign_incidence(id, 1) == 1);   // delete (1,0), keep ray (0,1)
  CHECK(sign_incidence(id, 2) == -1);
  CHECK_THROWS_AS(sign_incidence(id, 3), invalid_argument_error);

  // antisymmetry across the shared facet ray(0,1)
  auto left = cone_make<Rat>({v2(0, 1), v2(-1, 1)});
  CHECK(sign_cone(left) == 1);
  int s_right = sign_incidence(id, 1);   // (0,1) survives deleting l=1
  int s_left = sign_incidence(left, 2);  // (0,1) survives deleting l=2
  CHECK(s_right == -s_left);
}

TEST_CASE("upper reciprocity on the worked cone") {
  auto c = cone_make<Rat>({v2(1, 1), v2(1, 3)}, 2);  // plus = {(1,3)} = bit 0
  CHECK(upper_reciprocity_residual(c, FaceMask(0b10)) == 0);  // lower ray (1,1)
  CHECK(upper_reciprocity_residual(c, FaceMask(0b01)) == 0);  // upper ray (1,3)
  CHECK(upper_reciprocity_residual(c, FaceMask(0b11)) == 0);  // tau = sigma
}

TEST_CASE("stellar subdivision") {
  auto c = cone_make<Rat>({v2(1, 0), v2(0, 1)});
  auto frag = subdivide(c, v2(1, 1));
  REQUIRE(frag.size() == 3);
  int rays = 0, twos = 0;
  for (const auto& f : frag) (f.dim() == 1 ? rays : twos)++;
  CHECK(rays == 1);
  CHECK(twos == 2);

  CHECK_THROWS_AS(subdivide(cone_make<Rat>({v2(1, 0)}), v2(2, 0)), geometry_error);
  CHECK_THROWS_AS(subdivide(c, v2(-1, 1)), geometry_error);
  CHECK_THROWS_AS(subdivide(c, v2(1, 0)), geometry_error);  // boundary, not interior

  // 3-dim: 7 proper subsets -> 3 three-cones + 3 two-cones + 1 ray
  auto big = cone_make<Rat>({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  auto f3 = subdivide(big, v3(1, 1, 1));
  int cnt[4] = {0, 0, 0, 0};
  for (const auto& f : f3) cnt[f.dim()]++;
  CHECK(cnt[1] == 1);
  CHECK(cnt[2] == 3);
  CHECK(cnt[3] == 3);

  // partition: each interior point of c lies in exactly one fragment cone
  // (membership = positive exact coordinates over the fragment's generators)
  auto contains_open = [](const ConeK<Rat>& f, const V& x) {
    auto a = solve_cols(f.gens, x);
    if (!a) return false;
    for (const auto& q : *a)
      if (sgn(q) <= 0) return false;
    return true;
  };
  for (int i = 1; i <= 20; ++i)
    for (int j = 1; j <= 20; ++j) {
      V x{Rat(i, 7), Rat(j, 11)};
      int hits = 0;
      for (const auto& f : frag) hits += contains_open(f, x);
      CHECK(hits == 1);
    }
}

TEST_CASE("star sign sums") {
  // plane around the ray (1,1): the ray and its two adjacent 2-cones
  std::vector<ConeK<Rat>> star2 = {
      cone_make<Rat>({v2(1, 1)}),
      cone_make<Rat>({v2(1, 0), v2(1, 1)}),
      cone_make<Rat>({v2(1, 1), v2(0, 1)}),
  };
  CHECK(star_sign_sum(star2) == 1);  // (-1)^2

  // single n-cone star
  std::vector<ConeK<Rat>> one = {cone_make<Rat>({v2(1, 0), v2(0, 1)})};
  CHECK(star_sign_sum(one) == 1);

  // complete star around the vertical ray in R^3: the ray, four walls,
  // four octant cones
  V e1 = v3(1, 0, 0), e2 = v3(0, 1, 0), rho = v3(0, 0, 1);
  V m1 = v3(-1, 0, 0), m2 = v3(0, -1, 0);
  std::vector<ConeK<Rat>> star3 = {
      cone_make<Rat>({rho}),
      cone_make<Rat>({rho, e1}), cone_make<Rat>({rho, e2}),
      cone_make<Rat>({rho, m1}), cone_make<Rat>({rho, m2}),
      cone_make<Rat>({rho, e1, e2}), cone_make<Rat>({rho, e2, m1}),
      cone_make<Rat>({rho, m1, m2}), cone_make<Rat>({rho, m2, e1}),
  };
  CHECK(star_sign_sum(star3) == -1);  // (-1)^3
}
