#pragma once

#include "rayclass/linalg.hpp"
#include "rayclass/rational.hpp"
#include "rayclass/real.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace rayclass {

// Exact element of Q(sqrt(d)): a + b*sqrt(d). Values with d == 0 are plain
// rationals (b must be 0) and promote when combined with a quadratic value;
// this lets Quad satisfy the K(0)/K(1) construction the generic linear
// algebra performs.
struct Quad {
  Rat a{0}, b{0};
  long long d{0};

  Quad() = default;
  Quad(int v) : a(v) {}  // NOLINT: implicit for generic code
  Quad(Rat v) : a(std::move(v)) {}
  Quad(Rat aa, Rat bb, long long dd)
      : a(std::move(aa)), b(std::move(bb)), d(dd) {}

  static long long join(long long x, long long y) {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x != y) throw std::logic_error("Quad: mixed radicands");
    return x;
  }

  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a + y.a, x.b + y.b, join(x.d, y.d));
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a - y.a, x.b - y.b, join(x.d, y.d));
  }
  friend Quad operator*(const Quad& x, const Quad& y) {
    long long d = join(x.d, y.d);
    return Quad(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
  }
  friend Quad operator/(const Quad& x, const Quad& y) {
    long long d = join(x.d, y.d);
    Rat n = y.a * y.a - y.b * y.b * d;  // nonzero for y != 0, d squarefree
    if (n == 0) throw std::domain_error("Quad: division by zero");
    Quad conj(y.a, -y.b, d);
    Quad prod = x * conj;
    return Quad(prod.a / n, prod.b / n, d);
  }
  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b;  // radicands agree or a value is rational
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
};

// Exact sign: compares a against -b*sqrt(d) by squaring.
inline int sgn(const Quad& x) {
  int sa = sgn(x.a), sb = sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: |a| vs |b| sqrt(d)
  Rat lhs = x.a * x.a, rhs = x.b * x.b * x.d;
  if (lhs == rhs) return 0;  // impossible for squarefree d>1, kept for safety
  return (lhs > rhs) ? sa : sb;
}

inline Real to_real(const Quad& x) {
  if (x.b == 0) return to_real(x.a);
  return to_real(x.a) + to_real(x.b) * sqrt(Real(x.d));
}

// a + b*w0 over the basis (1, w0) of O_F, where w0 = (1+sqrt D)/2 when
// D = 1 mod 4 and w0 = sqrt D otherwise; w0^2 = P*w0 + Q.
struct FieldElem {
  Rat a{0}, b{0};
  FieldElem() = default;
  FieldElem(Rat aa, Rat bb) : a(std::move(aa)), b(std::move(bb)) {}
  explicit FieldElem(Rat aa) : a(std::move(aa)) {}
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_integral() const { return is_integer(a) && is_integer(b); }
};

class QuadraticField {
 public:
  explicit QuadraticField(long long D);

  long long D() const { return D_; }
  long long P() const { return P_; }
  long long Q() const { return Q_; }

  FieldElem one() const { return FieldElem(Rat(1), Rat(0)); }
  FieldElem w0() const { return FieldElem(Rat(0), Rat(1)); }

  FieldElem add(const FieldElem& x, const FieldElem& y) const {
    return FieldElem(x.a + y.a, x.b + y.b);
  }
  FieldElem sub(const FieldElem& x, const FieldElem& y) const {
    return FieldElem(x.a - y.a, x.b - y.b);
  }
  FieldElem neg(const FieldElem& x) const { return FieldElem(-x.a, -x.b); }
  FieldElem mul(const FieldElem& x, const FieldElem& y) const {
    // (a+bw)(c+ew), w^2 = P w + Q
    return FieldElem(x.a * y.a + x.b * y.b * Q_,
                     x.a * y.b + x.b * y.a + x.b * y.b * P_);
  }
  FieldElem scale(const Rat& c, const FieldElem& x) const {
    return FieldElem(c * x.a, c * x.b);
  }
  FieldElem conj(const FieldElem& x) const {
    // w0' = P - w0
    return FieldElem(x.a + x.b * P_, -x.b);
  }
  Rat norm(const FieldElem& x) const {
    return x.a * x.a + x.a * x.b * P_ - x.b * x.b * Q_;
  }
  Rat trace(const FieldElem& x) const { return 2 * x.a + x.b * P_; }
  FieldElem inv(const FieldElem& x) const {
    Rat n = norm(x);
    if (n == 0) throw std::domain_error("field inverse of zero");
    FieldElem c = conj(x);
    return FieldElem(c.a / n, c.b / n);
  }
  FieldElem pow(const FieldElem& x, long e) const;

  // embeddings; i is 1 or 2
  Quad embed(const FieldElem& x, int i) const {
    // w0 = (p + q sqrt D)/2 with (p,q) = (1,1) or (0,2)
    Rat p(w0p_), q(w0q_);
    Rat s = (i == 1) ? q : -q;
    return Quad(x.a + x.b * p / 2, x.b * s / 2, D_);
  }
  Real embed_real(const FieldElem& x, int i) const {
    return to_real(embed(x, i));
  }
  int sign_at(const FieldElem& x, int i) const { return sgn(embed(x, i)); }
  bool is_totally_positive(const FieldElem& x) const {
    return sign_at(x, 1) > 0 && sign_at(x, 2) > 0;
  }

  friend bool operator==(const QuadraticField& f, const QuadraticField& g) {
    return f.D_ == g.D_;
  }

 private:
  long long D_, P_, Q_, w0p_, w0q_;
};

std::string to_string(const QuadraticField& F, const FieldElem& x);

}  // namespace rayclass
