#include "rayclass/sampling.hpp"

#include "rayclass/chi.hpp"
#include "rayclass/cone.hpp"
#include "rayclass/errors.hpp"

#include <cstddef>
#include <vector>

namespace rayclass {

namespace {

constexpr long kRedrawCap = 64;

Rat rand_rat(SplitMix64& rng, long lo, long hi, long max_den) {
  Int p(rng.next_in(lo * max_den, hi * max_den));
  return Rat(p, Int(max_den));
}

// vector in the open half-space x^(h) > 0 with small rational coordinates
VecK<Rat> rand_halfspace_vec(SplitMix64& rng, int n, int h) {
  VecK<Rat> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = rand_rat(rng, -5, 5, 4);
  Rat& vh = v[static_cast<std::size_t>(h - 1)];
  if (vh <= 0) vh = 1 - vh;
  return v;
}

std::vector<VecK<Rat>> rand_tuple(SplitMix64& rng, int count, int n, int h) {
  std::vector<VecK<Rat>> w;
  w.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) w.push_back(rand_halfspace_vec(rng, n, h));
  return w;
}

// positive combination of a random small subset: lands exactly on a face of
// the configuration, which the closure calculus must handle
VecK<Rat> rand_face_point(SplitMix64& rng, const std::vector<VecK<Rat>>& vecs, int n) {
  std::size_t take = 1 + rng.next_below(static_cast<std::uint64_t>(n - 1));
  VecK<Rat> x(static_cast<std::size_t>(n), Rat(0));
  for (std::size_t t = 0; t < take; ++t) {
    const auto& v = vecs[rng.next_below(vecs.size())];
    Rat c = rand_rat(rng, 1, 4, 2);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] + c * v[i];
  }
  return x;
}

}  // namespace

TrialSummary sample_cocycle(int n, long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    int h = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
    auto w = rand_tuple(rng, n + 1, n, h);
    VecK<Rat> x;
    long guard = 0;
    do {
      x = rand_halfspace_vec(rng, n, h);
      if (!on_small_cone(w, x)) break;
      ++s.redraws;
    } while (++guard < kRedrawCap);
    if (guard >= kRedrawCap) continue;
    ++s.trials;
    if (cocycle_residual(w, x, h) != 0) ++s.failures;
  }
  return s;
}

TrialSummary sample_prism(int n, long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    int h = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
    auto w = rand_tuple(rng, n, n, h);
    auto eta = rand_tuple(rng, n, n, h);
    std::vector<VecK<Rat>> all(w);
    all.insert(all.end(), eta.begin(), eta.end());
    VecK<Rat> x;
    long guard = 0;
    do {
      x = rand_halfspace_vec(rng, n, h);
      if (!on_small_cone(all, x)) break;
      ++s.redraws;
    } while (++guard < kRedrawCap);
    if (guard >= kRedrawCap) continue;
    ++s.trials;
    if (prism_residual(w, eta, x, h, false) != 0) ++s.failures;
  }
  return s;
}

TrialSummary sample_prism_closure(int n, long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    int h = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<VecK<Rat>> w, eta, all;
    long guard = 0;
    do {
      w = rand_tuple(rng, n, n, h);
      eta = rand_tuple(rng, n, n, h);
      all = w;
      all.insert(all.end(), eta.begin(), eta.end());
      if (!vertical_subset(all, h)) break;  // closure identity assumes this
      ++s.redraws;
    } while (++guard < kRedrawCap);
    if (guard >= kRedrawCap) continue;
    VecK<Rat> x = rng.next_below(2) == 0 ? rand_face_point(rng, all, n)
                                         : rand_halfspace_vec(rng, n, h);
    ++s.trials;
    if (prism_residual(w, eta, x, h, true) != 0) ++s.failures;
  }
  return s;
}

TrialSummary sample_upper_reciprocity(int n, long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    int h = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
    long guard = 0;
    bool done = false;
    while (!done && guard++ < kRedrawCap) {
      try {
        auto c = cone_make<Rat>(rand_tuple(rng, n, n, h), h);
        omega_partition(c);  // rejects e_h on a generator hyperplane
        ++s.trials;
        for (FaceMask tau : faces(c))
          if (upper_reciprocity_residual(c, tau) != 0) {
            ++s.failures;
            break;
          }
        done = true;
      } catch (const geometry_error&) {
        ++s.redraws;
      }
    }
  }
  return s;
}

namespace {

FieldElem rand_totally_positive(const QuadraticField& F, SplitMix64& rng) {
  for (;;) {
    FieldElem x{rand_rat(rng, 0, 40, 8), rand_rat(rng, -40, 40, 8)};
    if ((x.a != 0 || x.b != 0) && F.is_totally_positive(x)) return x;
  }
}

}  // namespace

TrialSummary sample_fan_cover(const QuadraticField& F, const Fan& fan,
                              long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    FieldElem x = rand_totally_positive(F, rng);
    ++s.trials;
    if (fan_cover_count(F, fan, x) != 1) ++s.failures;
  }
  return s;
}

TrialSummary sample_fan_ucl(const QuadraticField& F, const Fan& fan, int h,
                            long trials, SplitMix64& rng) {
  TrialSummary s;
  for (long t = 0; t < trials; ++t) {
    FieldElem x = rand_totally_positive(F, rng);
    ++s.trials;
    if (fan_ucl_count(F, fan, h, x) != 1) ++s.failures;
  }
  return s;
}

}  // namespace rayclass
