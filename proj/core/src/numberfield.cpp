#include "rayclass/numberfield.hpp"

#include "rayclass/errors.hpp"

namespace rayclass {

namespace {
bool squarefree(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}
}  // namespace

QuadraticField::QuadraticField(long long D) : D_(D) {
  if (D <= 1 || !squarefree(D))
    throw invalid_argument_error("field discriminant parameter must be squarefree and > 1");
  if (D % 4 == 1) {
    P_ = 1;
    Q_ = (D - 1) / 4;
    w0p_ = 1;
    w0q_ = 1;
  } else {
    P_ = 0;
    Q_ = D;
    w0p_ = 0;
    w0q_ = 2;
  }
}

FieldElem QuadraticField::pow(const FieldElem& x, long e) const {
  FieldElem base = e < 0 ? inv(x) : x;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  FieldElem r = one();
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string to_string(const QuadraticField& F, const FieldElem& x) {
  std::string w = (F.D() % 4 == 1) ? "w" : "sqrt" + std::to_string(F.D());
  return to_string(x.a) + (sgn(x.b) >= 0 ? "+" : "") + to_string(x.b) + w;
}

}  // namespace rayclass
