#pragma once

#include "rayclass/errors.hpp"
#include "rayclass/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace rayclass {

// Open simplicial cone over an exact scalar field K: the set of strictly
// positive combinations of d independent generators in R^n. With a height
// index h >= 1 the generators are kept sorted by strictly decreasing height
// (the h-th coordinate) and ties are rejected rather than broken
// arbitrarily; h = 0 keeps the given order and disables every operation
// that needs heights (omega partition, face classification, closures).
template <class K>
struct ConeK {
  std::vector<VecK<K>> gens;
  int h = 0;  // 1-based coordinate index used for heights and halfspaces

  int dim() const { return static_cast<int>(gens.size()); }
  int ambient() const { return static_cast<int>(gens[0].size()); }
};

using FaceMask = std::uint32_t;

template <class K>
ConeK<K> cone_make(std::vector<VecK<K>> gens, int h = 0) {
  if (gens.empty()) throw invalid_argument_error("cone needs at least one generator");
  const std::size_t n = gens[0].size();
  if (gens.size() > n) throw geometry_error("dependent generators: more than ambient dimension");
  if (h < 0 || static_cast<std::size_t>(h) > n)
    throw invalid_argument_error("height index out of range");
  for (const auto& g : gens)
    if (g.size() != n) throw invalid_argument_error("generator dimension mismatch");
  if (rank_cols(gens) != gens.size()) throw geometry_error("dependent generators");
  if (h >= 1) {
    std::stable_sort(gens.begin(), gens.end(), [&](const VecK<K>& x, const VecK<K>& y) {
      return sgn(x[h - 1] - y[h - 1]) > 0;
    });
    for (std::size_t i = 0; i + 1 < gens.size(); ++i)
      if (gens[i][h - 1] == gens[i + 1][h - 1])
        throw geometry_error("equal heights: generator order is ambiguous");
  }
  return ConeK<K>{std::move(gens), h};
}

template <class K>
ConeK<K> face_cone(const ConeK<K>& c, FaceMask mask) {
  std::vector<VecK<K>> g;
  for (int j = 0; j < c.dim(); ++j)
    if (mask & (FaceMask(1) << j)) g.push_back(c.gens[j]);
  if (g.empty()) throw invalid_argument_error("empty face");
  return ConeK<K>{std::move(g), c.h};  // subset of sorted stays sorted
}

// all 2^d - 1 nonzero faces, by generator subset mask
template <class K>
std::vector<FaceMask> faces(const ConeK<K>& c) {
  std::vector<FaceMask> out;
  FaceMask full = (FaceMask(1) << c.dim()) - 1;
  for (FaceMask m = 1; m <= full; ++m) out.push_back(m);
  return out;
}

// e_h = sum a_j omega_j with every a_j nonzero for rational full cones;
// returns masks (plus, minus) with a_j > 0 / a_j < 0.
template <class K>
std::pair<FaceMask, FaceMask> omega_partition(const ConeK<K>& c) {
  const int n = c.ambient();
  if (c.h < 1) throw invalid_argument_error("cone has no height index");
  if (c.dim() != n) throw invalid_argument_error("omega partition needs a full-dimensional cone");
  VecK<K> eh(n, K(0));
  eh[c.h - 1] = K(1);
  auto a = solve_cols(c.gens, eh);
  if (!a) throw geometry_error("dependent generators");
  FaceMask plus = 0, minus = 0;
  for (int j = 0; j < n; ++j) {
    int s = sgn((*a)[j]);
    if (s == 0)
      throw geometry_error("zero coefficient: e_h lies on a generator hyperplane");
    (s > 0 ? plus : minus) |= FaceMask(1) << j;
  }
  return {plus, minus};
}

struct FaceClass {
  bool upper = false;
  bool lower = false;
};

template <class K>
FaceClass classify_face(const ConeK<K>& c, FaceMask tau) {
  FaceMask full = (FaceMask(1) << c.dim()) - 1;
  if (tau == 0 || (tau & ~full)) throw invalid_argument_error("not a face of the cone");
  auto [plus, minus] = omega_partition(c);
  return FaceClass{(tau & plus) == plus, (tau & minus) == minus};
}

// membership of x in the upper (resp. lower) closure, the union of the
// upper (lower) faces of c; decided exactly by locating the face of the
// closed cone that contains x.
template <class K>
bool closure_contains(const ConeK<K>& c, const VecK<K>& x, bool upper) {
  auto a = solve_cols(c.gens, x);
  if (!a) return false;
  FaceMask m = 0;
  for (int j = 0; j < c.dim(); ++j) {
    int s = sgn((*a)[j]);
    if (s < 0) return false;
    if (s > 0) m |= FaceMask(1) << j;
  }
  if (m == 0) return false;  // the origin belongs to no open face
  FaceClass fc = classify_face(c, m);
  return upper ? fc.upper : fc.lower;
}

template <class K>
bool ucl_contains(const ConeK<K>& c, const VecK<K>& x) {
  return closure_contains(c, x, true);
}
template <class K>
bool lcl_contains(const ConeK<K>& c, const VecK<K>& x) {
  return closure_contains(c, x, false);
}

template <class K>
int sign_cone(const ConeK<K>& c) {
  if (c.dim() != c.ambient()) throw invalid_argument_error("sign needs a full-dimensional cone");
  return sgn(det_cols(c.gens));
}

// sign(sigma, tau) for the facet obtained by deleting the l-th generator
// (1-based) of the stored order.
template <class K>
int sign_incidence(const ConeK<K>& c, int l) {
  if (l < 1 || l > c.dim()) throw invalid_argument_error("not a facet: bad delete index");
  int s = sign_cone(c);
  return (l % 2 == 0) ? -s : s;  // (-1)^{l+1}
}

// sum of (-1)^{d(sigma)} over a complete star around a face; the caller
// supplies the star (for unit fans, translate neighbours in)
template <class K>
long star_sign_sum(const std::vector<ConeK<K>>& star) {
  long s = 0;
  for (const auto& c : star) s += (c.dim() % 2 == 0) ? 1 : -1;
  return s;
}

// sum_{tau < rho <u sigma} (-1)^{d(rho)} - ((-1)^n if tau <l sigma else 0)
template <class K>
long upper_reciprocity_residual(const ConeK<K>& c, FaceMask tau) {
  const int n = c.dim();
  FaceMask full = (FaceMask(1) << n) - 1;
  if (tau == 0 || (tau & ~full)) throw invalid_argument_error("not a face of the cone");
  auto [plus, minus] = omega_partition(c);
  long sum = 0;
  // rho ranges over supersets of tau containing all of plus
  FaceMask need = tau | plus;
  FaceMask freebits = full & ~need;
  // iterate subsets of freebits
  FaceMask sub = 0;
  while (true) {
    FaceMask rho = need | sub;
    int d = __builtin_popcount(rho);
    sum += (d % 2 == 0) ? 1 : -1;
    if (sub == freebits) break;
    sub = (sub - freebits) & freebits;
  }
  long expected = ((tau & minus) == minus) ? ((n % 2 == 0) ? 1 : -1) : 0;
  return sum - expected;
}

// stellar subdivision by a ray strictly inside c: the open cone is the
// disjoint union of the cones generated by w together with each proper
// subset of the generators.
template <class K>
std::vector<ConeK<K>> subdivide(const ConeK<K>& c, const VecK<K>& w) {
  if (c.dim() < 2) throw geometry_error("ray not interior: cannot subdivide a ray");
  auto a = solve_cols(c.gens, w);
  if (!a) throw geometry_error("ray not interior: outside the span");
  for (int j = 0; j < c.dim(); ++j)
    if (sgn((*a)[j]) <= 0) throw geometry_error("ray not interior");
  std::vector<ConeK<K>> out;
  FaceMask full = (FaceMask(1) << c.dim()) - 1;
  for (FaceMask m = 0; m < full; ++m) {  // proper subsets, including empty
    std::vector<VecK<K>> g;
    for (int j = 0; j < c.dim(); ++j)
      if (m & (FaceMask(1) << j)) g.push_back(c.gens[j]);
    g.push_back(w);
    out.push_back(cone_make<K>(std::move(g), c.h));
  }
  return out;
}

}  // namespace rayclass
