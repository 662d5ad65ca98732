#include "rayclass/ideal.hpp"

#include "rayclass/errors.hpp"

#include <algorithm>

namespace rayclass {

namespace {

// Column Hermite form of an integer 2 x k matrix of rank 2.
// Columns are (top, bottom); result [[a,b],[0,c]], a,c > 0, 0 <= b < a.
struct Col {
  Int t, b;
};

std::array<Col, 2> hnf(std::vector<Col> cols) {
  using boost::multiprecision::gcd;
  // clear the bottom row to a single gcd entry via pairwise ext-gcd steps
  std::size_t pivot = cols.size();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].b == 0) continue;
    if (pivot == cols.size()) {
      pivot = i;
      continue;
    }
    // combine columns pivot and i to (g, 0) in the bottom row
    Int a = cols[pivot].b, b = cols[i].b;
    Int g = gcd(a, b);
    // ext gcd: u a + v b = g
    Int u = 0, v = 0;
    {
      Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
      }
      if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
      u = old_s; v = old_t;
    }
    Col np{u * cols[pivot].t + v * cols[i].t, g};
    Col ni{(-b / g) * cols[pivot].t + (a / g) * cols[i].t, Int(0)};
    cols[pivot] = np;
    cols[i] = ni;
  }
  if (pivot == cols.size()) throw geometry_error("lattice basis has rank < 2");
  // gcd of the top entries of the bottom-zero columns
  Int g0 = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i == pivot) continue;
    g0 = gcd(g0, cols[i].t);
  }
  if (g0 == 0) throw geometry_error("lattice basis has rank < 2");
  Int a = g0 < 0 ? -g0 : g0;
  Col second = cols[pivot];
  if (second.b < 0) { second.t = -second.t; second.b = -second.b; }
  // reduce the top of the second column modulo a
  Int r = second.t % a;
  if (r < 0) r += a;
  second.t = r;
  return {Col{a, Int(0)}, second};
}

}  // namespace

Lattice Lattice::span(const QuadraticField& F, const std::vector<FieldElem>& gens) {
  (void)F;
  // scale all coordinates to integers
  Int l = 1;
  for (const auto& g : gens) {
    l = boost::multiprecision::lcm(l, den(g.a));
    l = boost::multiprecision::lcm(l, den(g.b));
  }
  std::vector<Col> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) {
    Rat t = g.a * l, b = g.b * l;
    cols.push_back(Col{num(t), num(b)});
  }
  auto h = hnf(std::move(cols));
  Rat inv_l(Int(1), l);
  return Lattice(FieldElem(Rat(h[0].t) * inv_l, Rat(h[0].b) * inv_l),
                 FieldElem(Rat(h[1].t) * inv_l, Rat(h[1].b) * inv_l));
}

Lattice Lattice::principal(const QuadraticField& F, const FieldElem& g) {
  if (g.is_zero()) throw invalid_argument_error("principal ideal of zero");
  return span(F, {g, F.mul(g, F.w0())});
}

Lattice Lattice::ring_of_integers(const QuadraticField& F) {
  return span(F, {F.one(), F.w0()});
}

std::array<Rat, 2> Lattice::coords(const FieldElem& x) const {
  // solve x = y1 b1 + y2 b2; b1 = (a,0), b2 = (b,c) upper triangular
  Rat y2 = x.b / b2_.b;
  Rat y1 = (x.a - y2 * b2_.a) / b1_.a;
  return {y1, y2};
}

bool Lattice::contains(const FieldElem& x) const {
  auto y = coords(x);
  return is_integer(y[0]) && is_integer(y[1]);
}

bool Lattice::is_primitive(const FieldElem& x) const {
  auto y = coords(x);
  if (!is_integer(y[0]) || !is_integer(y[1])) return false;
  Int g = boost::multiprecision::gcd(num(y[0]), num(y[1]));
  return g == 1;
}

FieldElem Lattice::primitive_in_ray(const FieldElem& x) const {
  if (x.is_zero()) throw invalid_argument_error("primitive generator of the zero ray");
  auto y = coords(x);
  // smallest t > 0 with t*y integral and content 1
  Int m = boost::multiprecision::lcm(den(y[0]), den(y[1]));
  Int g = boost::multiprecision::gcd(num(y[0] * m), num(y[1] * m));
  if (g < 0) g = -g;
  Rat t(m, g);
  Rat c0 = y[0] * t, c1 = y[1] * t;
  FieldElem out(c0 * b1_.a + c1 * b2_.a, c1 * b2_.b);
  return out;
}

Lattice Lattice::scaled(const QuadraticField& F, const FieldElem& c) const {
  return span(F, {F.mul(c, b1_), F.mul(c, b2_)});
}

Lattice Lattice::ideal_mul(const QuadraticField& F, const Lattice& o) const {
  return span(F, {F.mul(b1_, o.b1_), F.mul(b1_, o.b2_), F.mul(b2_, o.b1_),
                  F.mul(b2_, o.b2_)});
}

Lattice Lattice::ideal_inverse(const QuadraticField& F) const {
  // a * conj(a) = N(a) O_F for ideals of the maximal order
  Rat n = covolume();
  FieldElem c1 = F.conj(b1_), c2 = F.conj(b2_);
  Rat inv_n = Rat(1) / n;
  return span(F, {F.scale(inv_n, c1), F.scale(inv_n, c2)});
}

Rat Lattice::covolume() const {
  Rat d = b1_.a * b2_.b;  // triangular basis
  return d < 0 ? -d : d;
}

bool Lattice::sublattice_of(const Lattice& other) const {
  return other.contains(b1_) && other.contains(b2_);
}

Rat Lattice::index_in(const Lattice& other) const {
  return covolume() / other.covolume();
}

bool Lattice::is_integral() const {
  return b1_.is_integral() && b2_.is_integral();
}

}  // namespace rayclass
