#pragma once

#include "rayclass/fan.hpp"
#include "rayclass/numberfield.hpp"
#include "rayclass/rng.hpp"

namespace rayclass {

// Seeded exact property trials shared by the test suite and the CLI verify
// command. A trial draws small random rational data, evaluates a residual
// that must vanish identically, and counts exact failures. Draws that miss
// a precondition (non-generic point, tied heights, degenerate cone) are
// redrawn and counted separately.
struct TrialSummary {
  long trials = 0;
  long failures = 0;
  long redraws = 0;

  bool pass() const { return failures == 0; }
};

TrialSummary sample_cocycle(int n, long trials, SplitMix64& rng);
TrialSummary sample_prism(int n, long trials, SplitMix64& rng);
TrialSummary sample_prism_closure(int n, long trials, SplitMix64& rng);
TrialSummary sample_upper_reciprocity(int n, long trials, SplitMix64& rng);

// random totally positive field points, each expected to land in exactly one
// unit translate of an open fan cone (cover) or of an upper closure (ucl)
TrialSummary sample_fan_cover(const QuadraticField& F, const Fan& fan,
                              long trials, SplitMix64& rng);
TrialSummary sample_fan_ucl(const QuadraticField& F, const Fan& fan, int h,
                            long trials, SplitMix64& rng);

}  // namespace rayclass
