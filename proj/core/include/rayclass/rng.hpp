#pragma once

#include <cstdint>

namespace rayclass {

// splitmix64: deterministic, splittable, endian-free. Sampling-based checks
// derive child streams with split() so parallel and serial runs agree.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // value in [0, bound), bound > 0; modulo bias is irrelevant for test sampling
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // signed value in [lo, hi] inclusive
  long long next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

 private:
  std::uint64_t state_;
};

}  // namespace rayclass
