#include "rayclass/fan.hpp"

#include "rayclass/cone.hpp"
#include "rayclass/errors.hpp"
#include "rayclass/lattice_points.hpp"
#include "rayclass/linalg.hpp"

#include <cmath>

namespace rayclass {

namespace {

void check_unit_orientation(const QuadraticField& F, const FieldElem& eps) {
  if (!F.is_totally_positive(eps))
    throw invalid_argument_error("fan unit must be totally positive");
  if (sgn(F.embed(eps, 1) - Quad(Rat(1))) <= 0)
    throw invalid_argument_error("fan unit must exceed 1 at the first place");
}

double embed_double(const QuadraticField& F, const FieldElem& x, int i) {
  return to_real(F.embed(x, i)).convert_to<double>();
}

// log of the ratio of the two embeddings; parametrizes rays of the quadrant
double ray_angle(const QuadraticField& F, const FieldElem& x) {
  return std::log(embed_double(F, x, 1)) - std::log(embed_double(F, x, 2));
}

}  // namespace

Fan quadratic_standard_fan(const QuadraticField& F, const FieldElem& eps) {
  check_unit_orientation(F, eps);
  Fan fan;
  fan.unit = eps;
  fan.cones.push_back({F.one(), eps});
  fan.cones.push_back({F.one()});
  return fan;
}

Fan quadratic_refined_fan(const QuadraticField& F, const FieldElem& eta, long r) {
  check_unit_orientation(F, eta);
  if (r < 1) throw invalid_argument_error("refinement order must be positive");
  Fan fan;
  fan.unit = F.pow(eta, r);
  FieldElem p = F.one();
  for (long k = 0; k < r; ++k) {
    FieldElem q = F.mul(p, eta);
    fan.cones.push_back({p, q});
    fan.cones.push_back({p});
    p = q;
  }
  return fan;
}

Fan fan_scaled(const QuadraticField& F, const Fan& fan, const FieldElem& c) {
  if (!F.is_totally_positive(c))
    throw invalid_argument_error("fan scale must be totally positive");
  Fan out;
  out.unit = fan.unit;
  for (const auto& cone : fan.cones) {
    std::vector<FieldElem> g;
    for (const auto& v : cone) g.push_back(F.mul(c, v));
    out.cones.push_back(std::move(g));
  }
  return out;
}

Fan fan_translate_cone(const QuadraticField& F, const Fan& fan, std::size_t i, long power) {
  if (i >= fan.cones.size()) throw invalid_argument_error("cone index out of range");
  Fan out = fan;
  FieldElem c = F.pow(fan.unit, power);
  for (auto& v : out.cones[i]) v = F.mul(c, v);
  return out;
}

Fan fan_subdivide_cone(const QuadraticField& F, const Fan& fan, std::size_t i,
                       const FieldElem& w) {
  if (i >= fan.cones.size()) throw invalid_argument_error("cone index out of range");
  const auto& cone = fan.cones[i];
  if (cone.size() != 2) throw geometry_error("ray not interior: cannot subdivide a ray");
  std::vector<VecK<Rat>> cols{{cone[0].a, cone[0].b}, {cone[1].a, cone[1].b}};
  auto a = solve_cols(cols, VecK<Rat>{w.a, w.b});
  if (!a || sgn((*a)[0]) <= 0 || sgn((*a)[1]) <= 0)
    throw geometry_error("ray not interior");
  Fan out = fan;
  out.cones[i] = {cone[0], w};
  out.cones.push_back({w, cone[1]});
  out.cones.push_back({w});
  return out;
}

Fan fan_rescale_gen(const Fan& fan, std::size_t i, std::size_t j, const Int& k) {
  if (i >= fan.cones.size() || j >= fan.cones[i].size())
    throw invalid_argument_error("generator index out of range");
  if (k <= 0) throw invalid_argument_error("rescale factor must be positive");
  Fan out = fan;
  out.cones[i][j].a *= Rat(k);
  out.cones[i][j].b *= Rat(k);
  return out;
}

Fan fan_primitivized(const QuadraticField& F, const Fan& fan, const Lattice& lattice) {
  Fan out;
  out.unit = fan.unit;
  for (const auto& cone : fan.cones) {
    std::vector<FieldElem> g;
    for (const auto& v : cone) g.push_back(lattice.primitive_in_ray(v));
    out.cones.push_back(std::move(g));
  }
  return out;
}

bool relint_contains(const QuadraticField& F, const std::vector<FieldElem>& gens,
                     const FieldElem& x) {
  (void)F;
  std::vector<VecK<Rat>> cols;
  for (const auto& g : gens) cols.push_back(VecK<Rat>{g.a, g.b});
  auto a = solve_cols(cols, VecK<Rat>{x.a, x.b});
  if (!a) return false;
  for (const auto& c : *a)
    if (sgn(c) <= 0) return false;
  return true;
}

namespace {

// k-window wide enough that every unit translate meeting the ray of x is
// scanned; membership itself stays exact
std::pair<long, long> translate_window(const QuadraticField& F, const Fan& fan,
                                       const FieldElem& x) {
  double lo = 0, hi = 0;
  bool first = true;
  for (const auto& cone : fan.cones)
    for (const auto& g : cone) {
      double t = ray_angle(F, g);
      if (first || t < lo) lo = t;
      if (first || t > hi) hi = t;
      first = false;
    }
  double u = ray_angle(F, fan.unit);  // > 0 by orientation
  double t = ray_angle(F, x);
  long kmin = static_cast<long>(std::floor((t - hi) / u)) - 2;
  long kmax = static_cast<long>(std::ceil((t - lo) / u)) + 2;
  return {kmin, kmax};
}

}  // namespace

long fan_cover_count(const QuadraticField& F, const Fan& fan, const FieldElem& x) {
  if (!F.is_totally_positive(x))
    throw invalid_argument_error("cover count needs a totally positive point");
  auto [kmin, kmax] = translate_window(F, fan, x);
  long count = 0;
  for (long k = kmin; k <= kmax; ++k) {
    FieldElem y = F.mul(F.pow(fan.unit, -k), x);
    for (const auto& cone : fan.cones)
      if (relint_contains(F, cone, y)) ++count;
  }
  return count;
}

long fan_ucl_count(const QuadraticField& F, const Fan& fan, int h, const FieldElem& x) {
  if (!F.is_totally_positive(x))
    throw invalid_argument_error("cover count needs a totally positive point");
  auto [kmin, kmax] = translate_window(F, fan, x);
  long count = 0;
  for (long k = kmin; k <= kmax; ++k) {
    FieldElem y = F.mul(F.pow(fan.unit, -k), x);
    VecK<Quad> v{F.embed(y, 1), F.embed(y, 2)};
    for (const auto& cone : fan.cones) {
      if (cone.size() != 2) continue;
      auto c = embed_cone(F, cone, h);
      if (ucl_contains(c, v)) ++count;
    }
  }
  return count;
}

}  // namespace rayclass
