#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rayclass {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(a/b) for integers, any signs
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }
inline bool is_integer(const Rat& q) { return den(q) == 1; }

// Fractional part normalized into the half-open interval (0,1]:
// <x> = x - ceil(x) + 1, so <0> = <1> = 1 and <-1/4> = 3/4.
// This is the convention used throughout the cone parallelotopes.
inline Rat fractional_part_unit(const Rat& x) {
  return x - Rat(ceil_rat(x)) + 1;
}

// Parse "p/q" or "p" with optional sign; used by the problem file loader.
inline std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

}  // namespace rayclass
