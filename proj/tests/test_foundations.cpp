#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rayclass/bernoulli.hpp"
#include "rayclass/linalg.hpp"
#include "rayclass/rational.hpp"
#include "rayclass/real.hpp"
#include "rayclass/rng.hpp"

#include <set>

using namespace rayclass;

TEST_CASE("rational helpers") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
  CHECK(floor_rat(Rat(-1, 3)) == -1);
  CHECK(ceil_rat(Rat(-1, 3)) == 0);
  CHECK(is_integer(Rat(4, 2)));
  CHECK_FALSE(is_integer(Rat(1, 2)));
}

TEST_CASE("fractional part lands in (0,1]") {
  CHECK(fractional_part_unit(Rat(0)) == 1);
  CHECK(fractional_part_unit(Rat(1)) == 1);
  CHECK(fractional_part_unit(Rat(-1, 4)) == Rat(3, 4));
  CHECK(fractional_part_unit(Rat(7, 4)) == Rat(3, 4));
  CHECK(fractional_part_unit(Rat(-3)) == 1);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-5") == Rat(-5));
  CHECK(parse_rational("6/4") == Rat(3, 2));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("x").has_value());
  CHECK(to_string(Rat(-3, 6)) == "-1/2");
  CHECK(to_string(Rat(8, 2)) == "4");
}

TEST_CASE("exact determinant and solve") {
  std::vector<VecK<Rat>> cols = {{Rat(1), Rat(2)}, {Rat(3), Rat(1)}};
  CHECK(det_cols(cols) == Rat(-5));
  CHECK(sgn(det_cols(cols)) == -1);

  auto a = solve_cols(cols, {Rat(4), Rat(3)});
  REQUIRE(a.has_value());
  CHECK((*a)[0] == Rat(1));
  CHECK((*a)[1] == Rat(1));

  std::vector<VecK<Rat>> dep = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(det_cols(dep) == 0);
  CHECK_FALSE(solve_cols(dep, {Rat(1), Rat(1)}).has_value());
  CHECK(rank_cols(dep) == 1);

  // 3 columns in dimension 2: inconsistent right-hand side detected
  std::vector<VecK<Rat>> wide = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(rank_cols(wide) == 2);
}

TEST_CASE("underdetermined solve consistency") {
  // single column in the plane: solvable iff rhs lies on the ray's line
  std::vector<VecK<Rat>> one = {{Rat(2), Rat(4)}};
  auto ok = solve_cols(one, {Rat(1), Rat(2)});
  REQUIRE(ok.has_value());
  CHECK((*ok)[0] == Rat(1, 2));
  CHECK_FALSE(solve_cols(one, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(2) == Rat(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(12) == Rat(-691, 2730));

  CHECK(bernoulli_poly(0, Rat(7, 3)) == 1);
  CHECK(bernoulli_poly(1, Rat(1, 2)) == 0);
  CHECK(bernoulli_poly(2, Rat(0)) == Rat(1, 6));
  CHECK(bernoulli_poly(2, Rat(1, 4)) == Rat(1, 16) - Rat(1, 4) + Rat(1, 6));
  // B_l(1-x) = (-1)^l B_l(x)
  for (unsigned l = 0; l <= 8; ++l) {
    Rat x(3, 7);
    Rat lhs = bernoulli_poly(l, Rat(1) - x);
    Rat rhs = bernoulli_poly(l, x);
    if (l % 2) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("splitmix64 determinism and splitting") {
  SplitMix64 a(1729), b(1729);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  SplitMix64 c(1729);
  SplitMix64 child1 = c.split();
  SplitMix64 child2 = c.split();
  std::set<unsigned long long> seen;
  for (int i = 0; i < 50; ++i) {
    seen.insert(child1.next());
    seen.insert(child2.next());
  }
  CHECK(seen.size() == 100);  // streams do not collide in practice

  SplitMix64 d(42);
  for (int i = 0; i < 1000; ++i) {
    auto v = d.next_in(3, 9);
    CHECK(v >= 3);
    CHECK(v <= 9);
  }
  for (int i = 0; i < 1000; ++i) CHECK(d.next_below(5) < 5);
}

TEST_CASE("precision scope and ball arithmetic") {
  PrecisionScope outer(128);
  Real x = const_pi();
  {
    PrecisionScope inner(256);
    Real y = const_pi();
    CHECK(Real::default_precision() > 60);
    CHECK(abs(y - x) < 1e-35);
    CHECK(abs(y - x) > 0);
  }
  CHECK(Real::default_precision() == bits_to_digits10(128));

  Ball a(Real(1), 1e-20), b(Real(2), 1e-20);
  Ball s = a + b;
  CHECK(s.value == 3);
  CHECK(s.bound >= 2e-20);
  CHECK(s.bound < 3e-20);
  Ball t = a.scaled(Real(10));
  CHECK(t.bound >= 1e-19);
}
