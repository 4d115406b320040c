#include "superquant/realization.hpp"

namespace sq {

namespace {

VectorField linear_field(const Signature& sig, const Matrix& A, const Rational& scale) {
  VectorField X(sig);
  for (int i = 0; i < sig.dim(); ++i) {
    for (int j = 0; j < sig.dim(); ++j) {
      if (A(i, j) == 0) continue;
      const int pj = sig.parity(j);
      const bool flip = (pj * (sig.parity(i) + pj)) & 1;
      Rational c = scale * A(i, j);
      if (flip) c = -c;
      X.component(i) += SuperPolynomial::coordinate(sig, j) * c;
    }
  }
  return X;
}

VectorField quadratic_field(const Signature& sig, const Covector& xi, const Rational& scale) {
  SuperPolynomial weight(sig);
  for (int j = 0; j < sig.dim(); ++j) {
    const Rational& xj = xi[static_cast<std::size_t>(j)];
    if (xj == 0) continue;
    weight += SuperPolynomial::coordinate(sig, j) * (sig.parity(j) ? Rational(-scale * xj) : Rational(scale * xj));
  }
  return weight * VectorField::euler(sig);
}

}  // namespace

VectorField realize(const GradedElement& h) {
  const Signature& sig = h.signature;
  VectorField X(sig);
  for (int i = 0; i < sig.dim(); ++i) {
    const Rational& v = h.minus[static_cast<std::size_t>(i)];
    if (v != 0) X.component(i) += SuperPolynomial::constant(sig, -v);
  }
  X += linear_field(sig, h.zero, -1);
  X += quadratic_field(sig, h.plus, 1);
  return X;
}

VectorField realize(const PglElement& a) { return realize(a.graded()); }

VectorField realize_matrix(const Signature& sig, const Matrix& B) {
  const int n = sig.dim();
  Matrix inner(n, n);
  Covector row(static_cast<std::size_t>(n));
  VectorField X(sig);
  for (int i = 0; i < n; ++i) {
    row[static_cast<std::size_t>(i)] = B(0, i + 1);
    if (B(i + 1, 0) != 0) X.component(i) += SuperPolynomial::constant(sig, -B(i + 1, 0));
    for (int j = 0; j < n; ++j) inner(i, j) = B(i + 1, j + 1);
  }
  X += linear_field(sig, inner, -1);
  X += quadratic_field(sig, row, 1);
  X += B(0, 0) * VectorField::euler(sig);
  return X;
}

}  // namespace sq
