#include "rayclass/lattice_points.hpp"

#include "rayclass/errors.hpp"
#include "rayclass/linalg.hpp"
#include "rayclass/rational.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace rayclass {

namespace {

bool in_window(const Rat& x, const CoordWindow& w) {
  if (w.low_open ? !(x > 0) : !(x >= 0)) return false;
  if (w.high_closed ? !(x <= 1) : !(x < 1)) return false;
  return true;
}

// a*u + b*v = g, g >= 0
Int extgcd(Int a, Int b, Int& u, Int& v) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

}  // namespace

std::vector<CoordWindow> variant_windows(PVariant v, int d, FaceMask plus_mask) {
  std::vector<CoordWindow> win(d);
  for (int j = 0; j < d; ++j) {
    bool plus = (plus_mask >> j) & 1;
    switch (v) {
      case PVariant::P:
        win[j] = {true, true};
        break;
      case PVariant::Popen:
        win[j] = {true, false};
        break;
      case PVariant::Pupper:
        win[j] = plus ? CoordWindow{true, true} : CoordWindow{false, false};
        break;
      case PVariant::Plower:
        win[j] = plus ? CoordWindow{false, false} : CoordWindow{true, true};
        break;
    }
  }
  return win;
}

std::vector<RatPoint> enumerate_full(const std::vector<std::vector<Rat>>& gens,
                                     const std::vector<std::vector<Rat>>& lattice,
                                     const std::vector<Rat>& shift,
                                     const std::vector<CoordWindow>& win) {
  const std::size_t n = shift.size();
  if (n == 0 || n > 4) throw invalid_argument_error("ambient dimension must be 1..4");
  if (gens.size() != n || lattice.size() != n || win.size() != n)
    throw invalid_argument_error("full enumeration needs d = n generators");
  if (rank_cols(gens) != n) throw geometry_error("dependent generators");

  // Box in lattice coordinates: preimages of the unit-box corners. The
  // scan covers [0,1]^n, a superset of every window; the filter is exact.
  std::vector<Rat> mins(n), maxs(n);
  for (std::uint32_t c = 0; c < (std::uint32_t(1) << n); ++c) {
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] = -shift[i];
      for (std::size_t j = 0; j < n; ++j)
        if ((c >> j) & 1) rhs[i] += gens[j][i];
    }
    auto m = solve_cols(lattice, rhs);
    if (!m) throw geometry_error("lattice basis is singular");
    for (std::size_t i = 0; i < n; ++i) {
      if (c == 0 || (*m)[i] < mins[i]) mins[i] = (*m)[i];
      if (c == 0 || (*m)[i] > maxs[i]) maxs[i] = (*m)[i];
    }
  }
  std::vector<Int> lo(n), hi(n), m(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_rat(mins[i]);
    hi[i] = floor_rat(maxs[i]);
    if (lo[i] > hi[i]) return {};
    m[i] = lo[i];
  }

  std::vector<RatPoint> out;
  while (true) {
    std::vector<Rat> p(shift);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) p[i] += Rat(m[j]) * lattice[j][i];
    auto x = solve_cols(gens, p);
    bool ok = x.has_value();
    if (ok)
      for (std::size_t j = 0; j < n; ++j)
        if (!in_window((*x)[j], win[j])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(RatPoint{std::move(p), std::move(*x)});

    std::size_t i = 0;
    while (i < n && m[i] == hi[i]) {
      m[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++m[i];
  }
  return out;
}

std::vector<RatPoint> enumerate_ray2(const std::vector<Rat>& g,
                                     const std::vector<std::vector<Rat>>& lattice,
                                     const std::vector<Rat>& shift,
                                     const CoordWindow& win) {
  if (g.size() != 2 || lattice.size() != 2 || shift.size() != 2)
    throw invalid_argument_error("ray enumeration is 2-dimensional");
  if (g[0] == 0 && g[1] == 0) throw invalid_argument_error("zero generator");
  auto gc = solve_cols(lattice, g);
  auto sc = solve_cols(lattice, shift);
  if (!gc || !sc) throw geometry_error("lattice basis is singular");

  // Integer m with sc + m = t*gc for some t; the cross product kills t:
  //   gc2*m1 - gc1*m2 + (sc1*gc2 - sc2*gc1) = 0.
  // Clear denominators to A1*m1 + A2*m2 + A0 = 0 over the integers.
  Rat a1r = (*gc)[1];
  Rat a2r = -(*gc)[0];
  Rat a0r = (*sc)[0] * (*gc)[1] - (*sc)[1] * (*gc)[0];
  Int q = lcm(lcm(den(a1r), den(a2r)), den(a0r));
  Int A1 = num(a1r) * (q / den(a1r));
  Int A2 = num(a2r) * (q / den(a2r));
  Int A0 = num(a0r) * (q / den(a0r));

  Int u, v;
  Int gg = extgcd(A1, A2, u, v);
  if (gg == 0) throw geometry_error("ray enumeration degenerated");
  if (A0 % gg != 0) return {};
  Int s0 = -A0 / gg;
  Int m1 = s0 * u, m2 = s0 * v;
  if (A0 + A1 * m1 + A2 * m2 != 0) throw geometry_error("ray enumeration lost integrality");
  Int h1 = -A2 / gg, h2 = A1 / gg;

  // Coordinate along g is affine in the solution parameter k.
  int i0 = ((*gc)[0] != 0) ? 0 : 1;
  Rat gci = (*gc)[i0];
  Rat alpha = ((*sc)[i0] + Rat(i0 == 0 ? m1 : m2)) / gci;
  Rat beta = Rat(i0 == 0 ? h1 : h2) / gci;
  if (beta == 0) throw geometry_error("ray enumeration degenerated");

  Rat ka = (Rat(0) - alpha) / beta;
  Rat kb = (Rat(1) - alpha) / beta;
  if (ka > kb) std::swap(ka, kb);
  std::vector<RatPoint> out;
  for (Int k = ceil_rat(ka), kend = floor_rat(kb); k <= kend; ++k) {
    Rat t = alpha + beta * Rat(k);
    if (!in_window(t, win)) continue;
    out.push_back(RatPoint{{t * g[0], t * g[1]}, {t}});
  }
  return out;
}

ConeK<Quad> embed_cone(const QuadraticField& F, const std::vector<FieldElem>& gens, int h) {
  std::vector<VecK<Quad>> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) cols.push_back(VecK<Quad>{F.embed(g, 1), F.embed(g, 2)});
  return cone_make<Quad>(std::move(cols), h);
}

std::vector<FieldPoint> parallelotope_points(const QuadraticField& F,
                                             const std::vector<FieldElem>& gens,
                                             int h, const Lattice& lattice,
                                             const FieldElem& shift, PVariant v) {
  const int d = static_cast<int>(gens.size());
  if (d < 1 || d > 2) throw invalid_argument_error("cone dimension must be 1 or 2");
  if (h != 1 && h != 2) throw invalid_argument_error("height index out of range");
  for (const auto& g : gens)
    if (!lattice.contains(g)) throw geometry_error("generator not in lattice");

  std::vector<FieldElem> sg(gens);
  if (d == 2) {
    int c = sgn(F.embed(sg[0], h) - F.embed(sg[1], h));
    if (c == 0) throw geometry_error("equal heights: generator order is ambiguous");
    if (c < 0) std::swap(sg[0], sg[1]);
  }

  FaceMask plus = 0;
  if (v == PVariant::Pupper || v == PVariant::Plower) {
    if (d != 2)
      throw invalid_argument_error("upper and lower variants need a full-dimensional cone");
    auto cone = embed_cone(F, sg, h);
    std::tie(plus, std::ignore) = omega_partition(cone);
  }
  auto win = variant_windows(v, d, plus);

  std::vector<std::vector<Rat>> B{{lattice.basis1().a, lattice.basis1().b},
                                  {lattice.basis2().a, lattice.basis2().b}};
  std::vector<Rat> s{shift.a, shift.b};
  std::vector<FieldPoint> out;
  if (d == 2) {
    std::vector<std::vector<Rat>> G{{sg[0].a, sg[0].b}, {sg[1].a, sg[1].b}};
    for (auto& rp : enumerate_full(G, B, s, win))
      out.push_back(FieldPoint{FieldElem(rp.p[0], rp.p[1]), std::move(rp.x)});
  } else {
    std::vector<Rat> gcol{sg[0].a, sg[0].b};
    for (auto& rp : enumerate_ray2(gcol, B, s, win[0]))
      out.push_back(FieldPoint{FieldElem(rp.p[0], rp.p[1]), std::move(rp.x)});
  }
  return out;
}

FieldPoint conjugate_point(const QuadraticField& F,
                           const std::vector<FieldElem>& gens,
                           const FieldPoint& pt) {
  if (pt.x.size() != gens.size())
    throw invalid_argument_error("coordinate count does not match the generators");
  for (const auto& xk : pt.x)
    if (xk <= 0 || xk > 1)
      throw invalid_argument_error("parallelotope coordinates must lie in (0,1]");
  std::vector<Rat> cx = conjugate_coords(pt.x);
  FieldElem p{Rat(0), Rat(0)};
  for (std::size_t k = 0; k < gens.size(); ++k)
    p = F.add(p, F.scale(cx[k], gens[k]));
  return FieldPoint{p, std::move(cx)};
}

}  // namespace rayclass
