#include "rayclass/barnes.hpp"

#include "rayclass/bernoulli.hpp"
#include "rayclass/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

namespace rayclass {

namespace {

double to_d(const Real& x) { return static_cast<double>(x); }

unsigned working_digits() { return Real::default_precision(); }

// absolute truncation target derived from the working precision
Real scheme_tol() {
  long dig = static_cast<long>(working_digits());
  return pow(Real(10), -std::max<long>(dig - 6, 6));
}

double rounding_rel() { return std::pow(10.0, -static_cast<double>(working_digits()) + 5); }

void check_positive_tuple(const std::vector<Real>& w) {
  if (w.empty()) throw invalid_argument_error("omega tuple must be nonempty");
  for (const auto& wi : w)
    if (!(wi > 0)) throw invalid_argument_error("omega entries must be positive");
}

Int factorial_int(int n) {
  Int f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Real ipow(const Real& b, int e) {
  Real r(1);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return e >= 0 ? r : Real(1 / r);
}

void compositions_rec(int pos, int d, int left, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (pos == d - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int v = left; v >= 0; --v) {
    cur[pos] = v;
    compositions_rec(pos + 1, d, left - v, cur, out);
  }
}

}  // namespace

std::vector<std::vector<int>> weight_compositions(int d) {
  if (d < 1) throw invalid_argument_error("dimension must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d);
  compositions_rec(0, d, d, cur, out);
  return out;
}

Ball e1_exponential_integral(const Real& x) {
  if (!(x > 0)) throw invalid_argument_error("E1 needs a positive argument");
  const unsigned dig = working_digits();
  const Real eps = pow(Real(10), -static_cast<long>(dig));
  Real v;
  if (x < 2) {
    // E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k/(k k!); the partial
    // sums cancel at most ~2 digits on this range
    Real sum(0), term(1);
    for (unsigned k = 1; k < 100000; ++k) {
      term *= x / k;
      Real add = term / k;
      if (k % 2 == 1)
        sum += add;
      else
        sum -= add;
      if (add < eps * (abs(sum) + 1)) break;
    }
    v = -const_euler_gamma() - log(x) + sum;
  } else {
    // modified Lentz on E1(x) = e^{-x}/(x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
    const Real tiny = pow(Real(10), -static_cast<long>(4 * dig));
    Real f = x + 1, C = f, D(0);
    for (unsigned k = 1; k < 200000; ++k) {
      Real a = -Real(k) * Real(k);
      Real b = x + 2 * k + 1;
      D = b + a * D;
      if (D == 0) D = tiny;
      C = b + a / C;
      if (C == 0) C = tiny;
      D = 1 / D;
      Real delta = C * D;
      f *= delta;
      if (abs(delta - 1) < eps) break;
    }
    v = exp(-x) / f;
  }
  double b = std::fabs(to_d(v)) * rounding_rel() + 1e-300;
  return Ball(v, b);
}

Ball barnes_zeta_deriv0(const Real& z, const std::vector<Real>& w) {
  if (!(z > 0)) throw invalid_argument_error("z must be positive");
  const int d = static_cast<int>(w.size());
  if (d == 0) {
    Real v = -log(z);
    return Ball(v, Ball::cushion(std::fabs(to_d(v)) * rounding_rel()));
  }
  check_positive_tuple(w);

  const Real tol = scheme_tol();
  const Real pi = const_pi();
  Real wmax = w[0];
  Real pw(1);
  for (const auto& wi : w) {
    if (wi > wmax) wmax = wi;
    pw *= wi;
  }
  const Real T = pi / wmax;
  const Real rho = T * 3 / 2;

  // Laurent coefficients are dominated by e^{z rho} prod 4/(1 - w_i rho/2pi)
  // at radius rho (inside the 2pi/wmax disc); the tail of the truncated
  // series below T is bounded by pref * (2/3)^{M+1}.
  Real hhat = exp(z * rho);
  for (const auto& wi : w) hhat *= 4 / (1 - wi * rho / (2 * pi));
  const Real pref = hhat * 3 / (ipow(T, d) * pw);
  int M = d + 8;
  {
    const Real r23 = Real(2) / 3;
    while (M < 5000 && pref * pow(r23, M + 1) > tol / 4) M += 16;
    if (M >= 5000) throw precision_error("barnes_zeta_deriv0: series tail misses target");
  }

  // Taylor coefficients of e^{-zt} prod_i H(w_i t), H(u) = u/(1 - e^{-u})
  std::vector<Real> fact(M + 1);
  fact[0] = 1;
  for (int m = 1; m <= M; ++m) fact[m] = fact[m - 1] * m;
  std::vector<Real> h(M + 1), g(M + 1), nh(M + 1);
  h[0] = 1;
  for (int m = 1; m <= M; ++m) h[m] = h[m - 1] * (-z) / m;
  for (const auto& wi : w) {
    Real wp(1);
    for (int m = 0; m <= M; ++m) {
      g[m] = to_real(bernoulli_number_at1(m)) * wp / fact[m];
      wp *= wi;
    }
    for (int m = 0; m <= M; ++m) {
      Real s(0);
      for (int a = 0; a <= m; ++a) s += h[a] * g[m - a];
      nh[m] = s;
    }
    std::swap(h, nh);
  }

  Real res = (h[d] / pw) * (const_euler_gamma() + log(T));
  {
    Real Tpow = ipow(T, -d);
    for (int m = 0; m <= M; ++m) {
      if (m != d) res += (h[m] / pw) * Tpow / (m - d);
      Tpow *= T;
    }
  }

  // E1 lattice sum over k with (z + k.w) T <= L; the cut tail is bounded by
  // e^{-L/2} log(1 + 1/L) e^{-zT/2} prod (1 - e^{-w_i T/2})^{-1}
  Real L = -log(tol) + 1;
  Real e1pref(1);
  for (const auto& wi : w) e1pref /= (1 - exp(-wi * T / 2));
  e1pref *= exp(-z * T / 2);
  while (e1pref * exp(-L / 2) * log(1 + 1 / L) > tol / 4) L += 8;

  double e1err = 0;
  Real e1sum(0);
  auto walk = [&](auto&& self, int idx, const Real& base) -> void {
    for (long k = 0;; ++k) {
      Real a = base + k * w[idx];
      if (k > 0 && a * T > L) break;
      if (idx + 1 < d) {
        self(self, idx + 1, a);
      } else {
        Ball e = e1_exponential_integral(a * T);
        e1sum += e.value;
        e1err += e.bound;
      }
    }
  };
  walk(walk, 0, z);
  res += e1sum;

  double series_round = to_d(pref) * (M + 1) * std::pow(10.0, -static_cast<double>(working_digits()) + 2);
  double bound = to_d(tol) / 2 + e1err + series_round +
                 std::fabs(to_d(res)) * rounding_rel();
  if (!std::isfinite(bound)) throw precision_error("barnes_zeta_deriv0: bound overflow");
  return Ball(res, Ball::cushion(bound));
}

namespace {

// Shared closed form: sum over |l| = d of prod_k w_k^{l_k-1} B_{l_k}(x_k)/l_k!
template <class K>
K zeta0_sum(const std::vector<Rat>& x, const std::vector<K>& w) {
  const int d = static_cast<int>(x.size());
  K total(0);
  for (const auto& l : weight_compositions(d)) {
    K term(1);
    for (int k = 0; k < d; ++k) {
      if (l[k] == 0) term = term / w[k];
      for (int p = 1; p < l[k]; ++p) term = term * w[k];
      Rat c = bernoulli_poly_rat(static_cast<unsigned>(l[k]), x[k]) /
              Rat(factorial_int(l[k]));
      term = term * K(c);
    }
    total = total + term;
  }
  return total;
}

void check_xw(const std::vector<Rat>& x, std::size_t wsize) {
  if (x.empty() || x.size() != wsize)
    throw invalid_argument_error("barycentric coordinates and omega sizes differ");
}

}  // namespace

Rat barnes_zeta_at0(const std::vector<Rat>& x, const std::vector<Rat>& w) {
  check_xw(x, w.size());
  for (const auto& wi : w)
    if (wi <= 0) throw invalid_argument_error("omega entries must be positive");
  Rat s = zeta0_sum<Rat>(x, w);
  return (x.size() % 2 == 0) ? s : -s;
}

Rat shintani_zeta_at0(const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& wemb) {
  check_xw(x, wemb.size());
  const std::size_t m = wemb[0].size();
  for (const auto& wk : wemb)
    if (wk.size() != m) throw invalid_argument_error("embedding counts differ");
  Rat tot(0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rat> wi(wemb.size());
    for (std::size_t k = 0; k < wemb.size(); ++k) wi[k] = wemb[k][i];
    tot += zeta0_sum<Rat>(x, wi);
  }
  if (x.size() % 2 == 1) tot = -tot;
  return tot / Rat(Int(m));
}

Rat shintani_zeta_at0(const std::vector<Rat>& x, const std::vector<std::vector<Quad>>& wemb) {
  check_xw(x, wemb.size());
  const std::size_t m = wemb[0].size();
  for (const auto& wk : wemb)
    if (wk.size() != m) throw invalid_argument_error("embedding counts differ");
  Quad tot(0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Quad> wi(wemb.size());
    for (std::size_t k = 0; k < wemb.size(); ++k) wi[k] = wemb[k][i];
    tot = tot + zeta0_sum<Quad>(x, wi);
  }
  if (tot.b != 0)
    throw invalid_argument_error("embeddings are not Galois conjugates: value is irrational");
  Rat s = tot.a;
  if (x.size() % 2 == 1) s = -s;
  return s / Rat(Int(m));
}

Ball c_integral(const std::vector<int>& l, const std::vector<std::vector<Real>>& wemb) {
  const int d = static_cast<int>(l.size());
  if (d < 1 || wemb.size() != l.size())
    throw invalid_argument_error("c_integral: dimension mismatch");
  const std::size_t m = wemb[0].size();
  int lsum = 0;
  for (int v : l) {
    if (v < 0) throw invalid_argument_error("c_integral: negative weight");
    lsum += v;
  }
  if (lsum != d) throw invalid_argument_error("c_integral: weights must sum to d");
  for (const auto& wk : wemb) {
    if (wk.size() != m) throw invalid_argument_error("embedding counts differ");
    for (const auto& v : wk)
      if (!(v > 0)) throw invalid_argument_error("omega entries must be positive");
  }
  if (m < 2) return Ball::exact(Real(0));
  if (std::all_of(l.begin(), l.end(), [](int v) { return v == 1; }))
    return Ball::exact(Real(0));

  if (d == 2) {
    // exactly one weight is 2, the other 0; per ordered pair the integrand
    // is ((a+bu)/(c+du) - a/c)/u = (bc-ad)/(c(c+du)), a rational-log integral
    const int nu = (l[0] == 2) ? 0 : 1;
    const int de = 1 - nu;
    Real tot(0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        const Real& a = wemb[nu][i];
        const Real& b = wemb[nu][j];
        const Real& c = wemb[de][i];
        const Real& dd = wemb[de][j];
        tot += (b * c - a * dd) / (c * dd) * log((c + dd) / c);
      }
    return Ball(tot, Ball::cushion((std::fabs(to_d(tot)) + 1e-30) * rounding_rel() * 64));
  }

  auto f = [&](const Real& u) {
    Real s(0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        Real p1(1), p2(1);
        for (int k = 0; k < d; ++k) {
          p1 *= ipow(wemb[k][i] + wemb[k][j] * u, l[k] - 1);
          p2 *= ipow(wemb[k][i], l[k] - 1);
        }
        s += (p1 - p2) / u;
      }
    return s;
  };
  const Real qtol = pow(Real(10), -std::max<long>(static_cast<long>(working_digits()) - 12, 8));
  Real err(0);
  Real val = boost::math::quadrature::gauss_kronrod<Real, 61>::integrate(
      f, Real(0), Real(1), 15, qtol, &err);
  double b = to_d(err) * 16 + std::fabs(to_d(val)) * rounding_rel();
  return Ball(val, Ball::cushion(b));
}

Ball shintani_zeta_deriv0(const std::vector<Rat>& x,
                          const std::vector<std::vector<Real>>& wemb) {
  check_xw(x, wemb.size());
  const int d = static_cast<int>(wemb.size());
  const std::size_t m = wemb[0].size();
  for (const auto& wk : wemb)
    if (wk.size() != m) throw invalid_argument_error("embedding counts differ");
  Ball acc;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Real> wi(wemb.size());
    Real zi(0);
    for (int k = 0; k < d; ++k) {
      wi[k] = wemb[k][i];
      zi += to_real(x[k]) * wi[k];
    }
    if (!(zi > 0)) throw invalid_argument_error("embedding of z must be positive");
    acc += barnes_zeta_deriv0(zi, wi);
  }
  if (m > 1) {
    for (const auto& l : weight_compositions(d)) {
      if (std::all_of(l.begin(), l.end(), [](int v) { return v == 1; })) continue;
      Rat bprod(1);
      for (int k = 0; k < d; ++k)
        bprod *= bernoulli_poly_rat(static_cast<unsigned>(l[k]), x[k]) /
                 Rat(factorial_int(l[k]));
      if (bprod == 0) continue;
      if (d % 2 == 1) bprod = -bprod;
      acc += c_integral(l, wemb).scaled(to_real(bprod) / static_cast<int>(m));
    }
  }
  return acc;
}

namespace {

template <class K>
std::vector<std::vector<Real>> embeddings_to_real(const std::vector<std::vector<K>>& wemb) {
  std::vector<std::vector<Real>> out(wemb.size());
  for (std::size_t k = 0; k < wemb.size(); ++k) {
    out[k].reserve(wemb[k].size());
    for (const auto& v : wemb[k]) out[k].push_back(to_real(v));
  }
  return out;
}

template <class K>
void check_xi_domain(const std::vector<Rat>& x, const std::vector<std::vector<K>>& wemb) {
  check_xw(x, wemb.size());
  bool all0 = true, all1 = true;
  for (const auto& xk : x) {
    if (xk < 0 || xk > 1)
      throw invalid_argument_error("xi: coordinates must lie in [0,1]");
    if (xk != 0) all0 = false;
    if (xk != 1) all1 = false;
  }
  if (all0 || all1)
    throw invalid_argument_error("boundary z: xi needs z distinct from 0 and |omega|");
}

std::vector<Rat> complement_coords(const std::vector<Rat>& x) {
  std::vector<Rat> cx(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) cx[k] = 1 - x[k];
  return cx;
}

template <class K>
XiResult xi_impl(const std::vector<Rat>& x, const std::vector<std::vector<K>>& wemb) {
  check_xi_domain(x, wemb);
  const int d = static_cast<int>(x.size());
  const std::vector<Rat> cx = complement_coords(x);

  Rat v0 = -shintani_zeta_at0(x, wemb);
  Rat v1 = shintani_zeta_at0(cx, wemb);
  v0 += (d % 2 == 0) ? v1 : -v1;
  if (v0 != 0) throw invalid_argument_error("xi(0) failed to vanish: inconsistent data");

  auto wembR = embeddings_to_real(wemb);
  Ball a = shintani_zeta_deriv0(x, wembR);
  Ball b = shintani_zeta_deriv0(cx, wembR);
  Ball deriv = (d % 2 == 0) ? (b - a) : (-a - b);
  return XiResult{Rat(0), deriv};
}

template <class K>
Ball xi_embedding_impl(const std::vector<Rat>& x,
                       const std::vector<std::vector<K>>& wemb, int i) {
  check_xi_domain(x, wemb);
  if (i < 1 || static_cast<std::size_t>(i) > wemb[0].size())
    throw invalid_argument_error("embedding index out of range");
  const int d = static_cast<int>(x.size());
  std::vector<Real> w1(wemb.size());
  for (std::size_t k = 0; k < wemb.size(); ++k) w1[k] = to_real(wemb[k][i - 1]);
  Real za(0), zb(0);
  const std::vector<Rat> cx = complement_coords(x);
  for (std::size_t k = 0; k < w1.size(); ++k) {
    za += to_real(x[k]) * w1[k];
    zb += to_real(cx[k]) * w1[k];
  }
  Ball a = barnes_zeta_deriv0(za, w1);
  Ball b = barnes_zeta_deriv0(zb, w1);
  return (d % 2 == 0) ? (b - a) : (-a - b);
}

template <class K>
Ball sine_impl(const std::vector<Rat>& x, const std::vector<std::vector<K>>& wemb,
               bool joint) {
  if (joint) return ball_exp(xi_impl(x, wemb).deriv0);
  Ball acc;
  for (std::size_t i = 1; i <= wemb[0].size(); ++i)
    acc += xi_embedding_impl(x, wemb, static_cast<int>(i));
  return ball_exp(acc);
}

}  // namespace

XiResult xi_value_and_deriv0(const std::vector<Rat>& x,
                             const std::vector<std::vector<Rat>>& wemb) {
  return xi_impl<Rat>(x, wemb);
}
XiResult xi_value_and_deriv0(const std::vector<Rat>& x,
                             const std::vector<std::vector<Quad>>& wemb) {
  return xi_impl<Quad>(x, wemb);
}

Ball xi_deriv0_embedding(const std::vector<Rat>& x,
                         const std::vector<std::vector<Rat>>& wemb, int i) {
  return xi_embedding_impl<Rat>(x, wemb, i);
}
Ball xi_deriv0_embedding(const std::vector<Rat>& x,
                         const std::vector<std::vector<Quad>>& wemb, int i) {
  return xi_embedding_impl<Quad>(x, wemb, i);
}

Ball multiple_sine(const std::vector<Rat>& x,
                   const std::vector<std::vector<Rat>>& wemb, bool joint) {
  return sine_impl<Rat>(x, wemb, joint);
}
Ball multiple_sine(const std::vector<Rat>& x,
                   const std::vector<std::vector<Quad>>& wemb, bool joint) {
  return sine_impl<Quad>(x, wemb, joint);
}

namespace {

// closed-form decreasing upper envelope for the j-dimensional sum at
// exponent sigma via the AM-GM split (y + sum k_i w_i)^{-sigma}
//   <= prod_i (y/j + k_i w_i)^{-sigma/j}
Real envelope_sum(const Real& sigma, const Real& y, const std::vector<Real>& w, int j) {
  if (j == 0) return pow(y, -sigma);
  Real e(1);
  Real sj = sigma / j;
  Real y0 = y / j;
  for (int i = 0; i < j; ++i)
    e *= pow(y0, -sj) + pow(y0, 1 - sj) / ((sj - 1) * w[i]);
  return e;
}

Ball zeta_direct_rec(const Real& s, const Real& z, const std::vector<Real>& w, int j,
                     const Real& tau) {
  if (j == 0) {
    Real v = pow(z, -s);
    return Ball(v, Ball::cushion(std::fabs(to_d(v)) * rounding_rel()));
  }
  const Real& om = w[j - 1];
  // f(k) = S_{j-1}(s, z + k om) is positive, decreasing, convex in k, so the
  // midpoint rule bracketing gives
  //   sum_{k>K} f(k) = int_{K+1/2}^inf f dk - err,
  //   0 <= err <= (1/24) sum_{k>K} f''(k-1/2)
  //            <= (1/24) [ f''(K+1/2) + int_{K+1/2}^inf f'' ]
  long K = 4;
  Real rem;
  for (;; K *= 2) {
    Real yK = z + (Real(K) + Real(1) / 2) * om;
    Real e2 = envelope_sum(s + 2, yK, w, j - 1);
    Real e1 = envelope_sum(s + 1, yK, w, j - 1);
    rem = s * (s + 1) * om * om * (e2 + e1 / ((s + 1) * om)) / 24;
    if (rem < tau / 2 || K > (1L << 32)) break;
  }
  if (!(rem < tau / 2)) throw precision_error("barnes_zeta_direct: tail misses target");
  const Real sub_tau = (tau / 2) / (K + 3);
  Ball acc;
  for (long k = 0; k <= K; ++k)
    acc += zeta_direct_rec(s, z + k * om, w, j - 1, sub_tau);
  // term-wise integration: int_{K+1/2}^inf S_{j-1}(s, z+k om) dk
  //   = S_{j-1}(s-1, z+(K+1/2) om) / ((s-1) om)
  Ball tail = zeta_direct_rec(s - 1, z + (Real(K) + Real(1) / 2) * om, w, j - 1, sub_tau);
  acc += tail.scaled(1 / ((s - 1) * om));
  acc.bound = Ball::cushion(acc.bound + to_d(rem));
  return acc;
}

}  // namespace

Ball barnes_zeta_direct(const Real& s, const Real& z, const std::vector<Real>& w) {
  check_positive_tuple(w);
  if (!(z > 0)) throw invalid_argument_error("z must be positive");
  const int d = static_cast<int>(w.size());
  if (!(s > d))
    throw invalid_argument_error("not convergent: s must exceed the dimension");
  const Real tau = pow(Real(10), -12);
  return zeta_direct_rec(s, z, w, d, tau);
}

}  // namespace rayclass
