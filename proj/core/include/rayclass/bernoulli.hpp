#pragma once

#include "rayclass/rational.hpp"
#include "rayclass/real.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace rayclass {

inline constexpr unsigned kBernoulliMaxOrder = 64;

// Numbers are needed far past the polynomial cap by the zeta continuation
// scheme (series coefficients of u/(1-e^{-u})); cap generously.
inline constexpr unsigned kBernoulliNumberMax = 512;

// B_m with B_1 = -1/2. Cached; the cache is append-only behind a mutex.
inline const Rat& bernoulli_number(unsigned m) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  if (m > kBernoulliNumberMax)
    throw std::domain_error("bernoulli_number: order above configured max");
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned k = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{k} C(k+1,j) B_j = 0
    Rat acc(0);
    Int binom(1);  // C(k+1, 0)
    for (unsigned j = 0; j < k; ++j) {
      acc += Rat(binom) * cache[j];
      binom = binom * Int(k + 1 - j) / Int(j + 1);
    }
    cache.push_back(-acc / Rat(binom));
  }
  return cache[m];
}

template <class K>
K bernoulli_poly(unsigned l, const K& x) {
  if (l > kBernoulliMaxOrder)
    throw std::domain_error("bernoulli_poly: order above configured max");
  // B_l(x) = sum_k C(l,k) B_k x^{l-k}
  K acc(0), xp(1);
  Int binom(1);  // C(l, l-k) accumulated from the x^0 end
  // iterate k = l..0 so powers of x build up multiplicatively
  std::vector<Rat> bs(l + 1);
  for (unsigned k = 0; k <= l; ++k) bs[k] = bernoulli_number(k);
  for (unsigned i = 0; i <= l; ++i) {
    // term for k = l-i, coefficient C(l, k) = C(l, l-i)
    acc = acc + K(Rat(binom) * bs[l - i]) * xp;
    xp = xp * x;
    binom = binom * Int(l - i) / Int(i + 1);
  }
  return acc;
}

inline Rat bernoulli_poly_rat(unsigned l, const Rat& x) {
  return bernoulli_poly<Rat>(l, x);
}

// B_m(1) = B_m + [m = 1]; these are the coefficients of u/(1 - e^{-u}).
inline Rat bernoulli_number_at1(unsigned m) {
  Rat b = bernoulli_number(m);
  if (m == 1) b += 1;
  return b;
}

}  // namespace rayclass
