#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "rayclass/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rayclass {

// Arbitrary precision real; precision is governed by the thread's default,
// see PrecisionScope below.
using Real = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299957) + 4;
}

// RAII switch of the working mantissa size. All temporaries created inside
// the scope use the new precision; nesting restores correctly.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real const_pi() {
  Real x(0);
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

inline Real const_euler_gamma() {
  Real x(0);
  mpfr_const_euler(x.backend().data(), MPFR_RNDN);
  return x;
}

inline Real to_real(const Rat& q) { return Real(q); }

// A value with a certified absolute error bound. Bounds are tracked in
// double with a generous multiplicative cushion, which is crude but safe:
// all target tolerances sit many orders of magnitude above DBL_MIN.
struct Ball {
  Real value{0};
  double bound{0};

  Ball() = default;
  Ball(Real v, double b) : value(std::move(v)), bound(b) {}
  static Ball exact(Real v) { return Ball(std::move(v), 0.0); }

  Ball operator+(const Ball& o) const {
    return Ball(value + o.value, cushion(bound + o.bound));
  }
  Ball operator-(const Ball& o) const {
    return Ball(value - o.value, cushion(bound + o.bound));
  }
  Ball operator-() const { return Ball(-value, bound); }
  Ball& operator+=(const Ball& o) { *this = *this + o; return *this; }

  // multiply by an exactly known factor
  Ball scaled(const Real& c) const {
    double ac = std::fabs(static_cast<double>(c));
    return Ball(value * c, cushion(ac * bound));
  }

  static double cushion(double b) { return b * (1.0 + 1e-9) + 1e-300; }
};

inline Ball ball_exp(const Ball& x) {
  Real v = exp(x.value);
  double dv = static_cast<double>(v);
  return Ball(v, Ball::cushion(std::fabs(dv) * x.bound * (1.0 + x.bound)));
}

inline std::string to_string(const Real& x, unsigned digits10 = 0) {
  if (digits10 == 0) digits10 = Real::default_precision();
  return x.str(digits10, std::ios_base::scientific);
}

}  // namespace rayclass
