#include "rayclass/units.hpp"

#include "rayclass/errors.hpp"

namespace rayclass {

bool is_unit(const QuadraticField& F, const FieldElem& x) {
  if (!x.is_integral()) return false;
  Rat n = F.norm(x);
  return n == 1 || n == -1;
}

FieldElem fundamental_unit(const QuadraticField& F) {
  // CF state for (P + sqrt D)/Q, maintained exactly: Q | D - P^2 throughout.
  const Int D(F.D());
  const Int sq = boost::multiprecision::sqrt(D);  // floor
  Int P, Q;
  if (F.D() % 4 == 1) {
    P = 1;
    Q = 2;
  } else {
    P = 0;
    Q = 1;
  }
  // convergents p_k/q_k of w0
  Int p0 = 1, p1 = 0, q0 = 0, q1 = 1;  // p_{-1}, p_{-2}, ...
  for (int iter = 0; iter < 100000; ++iter) {
    // a = floor((P + sqrt D)/Q), Q > 0 throughout this expansion
    Int a = floor_div(P + sq, Q);
    Int p = a * p0 + p1, q = a * q0 + q1;
    p1 = p0; p0 = p;
    q1 = q0; q0 = q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    // candidate unit p - q * conj(w0) = (p - q P_F) + q w0
    FieldElem u(Rat(p) - Rat(q) * F.P(), Rat(q));
    Rat n = F.norm(u);
    if (n == 1 || n == -1) {
      if (F.sign_at(u, 1) < 0) u = F.neg(u);
      return u;
    }
  }
  throw precision_error("fundamental unit: continued fraction did not close");
}

UnitGroupData unit_group_mod(const QuadraticField& F, const Lattice& f) {
  UnitGroupData u;
  u.eps0 = fundamental_unit(F);
  u.norm_eps0 = F.norm(u.eps0) == 1 ? 1 : -1;
  u.eta0 = u.norm_eps0 == 1 ? u.eps0 : F.mul(u.eps0, u.eps0);
  // smallest r with eta0^r = 1 mod f
  FieldElem pw = u.eta0;
  const FieldElem one = F.one();
  for (long r = 1; r <= 1000; ++r) {
    if (f.contains(F.sub(pw, one))) {
      u.r = r;
      u.eps_f = pw;
      return u;
    }
    pw = F.mul(pw, u.eta0);
  }
  throw precision_error("eps_f: no totally positive unit = 1 mod f within the power bound");
}

FieldElem fundamental_unit_Ef(const QuadraticField& F, const Lattice& f, int i) {
  UnitGroupData u = unit_group_mod(F, f);
  // eps_f > 1 at place 1; at the other place it is its inverse
  Quad e = F.embed(u.eps_f, i);
  if (sgn(e - Quad(1)) > 0) return u.eps_f;
  return F.inv(u.eps_f);
}

FieldElem find_signed_generator(const QuadraticField& F, const Lattice& f, int j,
                                int shell_bound) {
  if (j != 1 && j != 2) throw invalid_argument_error("place index must be 1 or 2");
  const FieldElem b1 = f.basis1(), b2 = f.basis2();
  for (int s = 1; s <= shell_bound; ++s) {
    for (long c1 = -s; c1 <= s; ++c1) {
      for (long c2 = -s; c2 <= s; ++c2) {
        if (std::max(std::abs(c1), std::abs(c2)) != s) continue;
        FieldElem mu = F.add(F.one(),
                             F.add(F.scale(Rat(c1), b1), F.scale(Rat(c2), b2)));
        bool ok = true;
        for (int i = 1; i <= 2; ++i) {
          int want = (i == j) ? -1 : 1;
          if (F.sign_at(mu, i) != want) { ok = false; break; }
        }
        if (!ok) continue;
        if (is_unit(F, mu)) continue;  // units collapse the relation
        return mu;
      }
    }
  }
  throw precision_error("signed generator: sup-norm shell bound exhausted");
}

}  // namespace rayclass
