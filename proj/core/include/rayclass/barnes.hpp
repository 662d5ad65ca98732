#pragma once

#include "rayclass/numberfield.hpp"
#include "rayclass/rational.hpp"
#include "rayclass/real.hpp"

#include <vector>

namespace rayclass {

// all d-tuples of non-negative integers summing to d, lexicographic
std::vector<std::vector<int>> weight_compositions(int d);

// exponential integral E1(x), x > 0
Ball e1_exponential_integral(const Real& x);

// zeta_d(s,z,w) = sum_{k in N^d} (z + k.w)^{-s} for real s > d, certified by
// midpoint-rule tail estimates with convexity remainder bounds
Ball barnes_zeta_direct(const Real& s, const Real& z, const std::vector<Real>& w);

// zeta_d(0, z, w) closed form, z = sum x_k w_k
Rat barnes_zeta_at0(const std::vector<Rat>& x, const std::vector<Rat>& w);

// d/ds zeta_d(s,z,w) at s = 0 via the Mellin split at T = pi/max(w):
// truncated Laurent series of the integrand below T, an E1 lattice sum
// above T, both with rigorous tail bounds
Ball barnes_zeta_deriv0(const Real& z, const std::vector<Real>& w);

// C_l(w) = sum_{i != j} int_0^1 { prod_k (w_k^(i) + w_k^(j) u)^{l_k - 1}
//   - prod_k (w_k^(i))^{l_k - 1} } du/u.   wemb[k][i] = i-th embedding of w_k.
// Exact zero when all l_k = 1; rational-log closed form for d = 2;
// Gauss-Kronrod quadrature otherwise.
Ball c_integral(const std::vector<int>& l, const std::vector<std::vector<Real>>& wemb);

// zeta_{m,d}(0, z, w) closed form over m embeddings; exact rational. The
// quadratic overload checks that the conjugate parts cancel.
Rat shintani_zeta_at0(const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& wemb);
Rat shintani_zeta_at0(const std::vector<Rat>& x, const std::vector<std::vector<Quad>>& wemb);

// d/ds zeta_{m,d}(s,z,w) at s = 0: per-embedding Barnes derivatives plus the
// C_l correction sum
Ball shintani_zeta_deriv0(const std::vector<Rat>& x,
                          const std::vector<std::vector<Real>>& wemb);

// xi(s,z,w) = -zeta(s,z,w) + (-1)^d zeta(s,|w|-z,w); the second argument is
// taken with barycentric coordinates 1-x_k. value0 is exactly zero for
// every admissible rational input; this is asserted.
struct XiResult {
  Rat value0;
  Ball deriv0;
};
XiResult xi_value_and_deriv0(const std::vector<Rat>& x,
                             const std::vector<std::vector<Rat>>& wemb);
XiResult xi_value_and_deriv0(const std::vector<Rat>& x,
                             const std::vector<std::vector<Quad>>& wemb);

// log S_{1,d} at a single embedding (1-based i); the per-place factors of
// the multiple sine
Ball xi_deriv0_embedding(const std::vector<Rat>& x,
                         const std::vector<std::vector<Rat>>& wemb, int i);
Ball xi_deriv0_embedding(const std::vector<Rat>& x,
                         const std::vector<std::vector<Quad>>& wemb, int i);

// S_{m,d}(z,w) = exp xi'(0). joint = true: the m-embedding sine;
// joint = false: the product of the m per-embedding factors.
Ball multiple_sine(const std::vector<Rat>& x,
                   const std::vector<std::vector<Rat>>& wemb, bool joint);
Ball multiple_sine(const std::vector<Rat>& x,
                   const std::vector<std::vector<Quad>>& wemb, bool joint);

}  // namespace rayclass
