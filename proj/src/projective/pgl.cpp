#include "superquant/pgl.hpp"

#include "superquant/errors.hpp"

namespace sq {

GradedElement::GradedElement(Signature sig)
    : signature(sig),
      minus(static_cast<std::size_t>(sig.dim()), Rational(0)),
      zero(sig.dim(), sig.dim()),
      plus(static_cast<std::size_t>(sig.dim()), Rational(0)) {}

GradedElement GradedElement::translation(Signature sig, int r) {
  sig.check_index(r);
  GradedElement h(sig);
  h.minus[static_cast<std::size_t>(r)] = 1;
  return h;
}

GradedElement GradedElement::elementary(Signature sig, int i, int j) {
  sig.check_index(i);
  sig.check_index(j);
  GradedElement h(sig);
  h.zero(i, j) = 1;
  return h;
}

GradedElement GradedElement::linear(Signature sig, Matrix A) {
  if (A.rows() != sig.dim() || A.cols() != sig.dim()) throw std::invalid_argument("g_0 element must be (p+q)-square");
  GradedElement h(sig);
  h.zero = std::move(A);
  return h;
}

GradedElement GradedElement::dual_row(Signature sig, int r) {
  sig.check_index(r);
  GradedElement h(sig);
  h.plus[static_cast<std::size_t>(r)] = 1;
  return h;
}

GradedElement GradedElement::quadratic(Signature sig, Covector xi) {
  if (xi.size() != static_cast<std::size_t>(sig.dim())) throw std::invalid_argument("g_1 element must have p+q entries");
  GradedElement h(sig);
  h.plus = std::move(xi);
  return h;
}

GradedElement GradedElement::euler(Signature sig) { return linear(sig, Rational(-1) * Matrix::identity(sig.dim())); }

Parity GradedElement::parity() const { return PglElement::from_graded(*this).parity(); }

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  require_same(signature, other.signature);
  for (std::size_t i = 0; i < minus.size(); ++i) {
    minus[i] += other.minus[i];
    plus[i] += other.plus[i];
  }
  zero += other.zero;
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& s) {
  for (auto& v : minus) v *= s;
  for (auto& v : plus) v *= s;
  zero *= s;
  return *this;
}

PglElement::PglElement(Signature signature, const Matrix& representative, AlgebraKind kind)
    : signature_(signature), matrix_(representative), kind_(kind) {
  const int n = signature.dim() + 1;
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("pgl element must be (p+1+q)-square");
  if (kind == AlgebraKind::psl) {
    if (!signature.is_psl_case()) throw PreconditionError("psl(n|n) elements require q = p + 1");
    if (supertrace(signature, matrix_) != 0) throw PreconditionError("psl element must be supertraceless");
  }
  normalize();
}

PglElement PglElement::from_graded(const GradedElement& h, AlgebraKind kind) {
  const Signature& sig = h.signature;
  const int n = sig.dim();
  Matrix B(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    B(i + 1, 0) = h.minus[static_cast<std::size_t>(i)];
    B(0, i + 1) = h.plus[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) B(i + 1, j + 1) = h.zero(i, j);
  }
  return PglElement(sig, B, kind);
}

void PglElement::normalize() {
  const Rational a = matrix_(0, 0);
  if (a == 0) return;
  for (int i = 0; i < matrix_.rows(); ++i) matrix_(i, i) -= a;
}

GradedElement PglElement::graded() const {
  const int n = signature_.dim();
  GradedElement h(signature_);
  for (int i = 0; i < n; ++i) {
    h.minus[static_cast<std::size_t>(i)] = matrix_(i + 1, 0);
    h.plus[static_cast<std::size_t>(i)] = matrix_(0, i + 1);
    for (int j = 0; j < n; ++j) h.zero(i, j) = matrix_(i + 1, j + 1);
  }
  return h;
}

Parity PglElement::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (int r = 0; r < matrix_.rows(); ++r) {
    for (int c = 0; c < matrix_.cols(); ++c) {
      if (matrix_(r, c) == 0) continue;
      ((block_parity(signature_, r) + block_parity(signature_, c)) & 1 ? has_odd : has_even) = true;
    }
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

std::pair<PglElement, PglElement> PglElement::split_parity() const {
  const int n = matrix_.rows();
  Matrix even(n, n);
  Matrix odd(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      ((block_parity(signature_, r) + block_parity(signature_, c)) & 1 ? odd : even)(r, c) = matrix_(r, c);
    }
  }
  return {PglElement(signature_, even, kind_), PglElement(signature_, odd, kind_)};
}

PglElement& PglElement::operator+=(const PglElement& other) {
  require_same(signature_, other.signature_);
  matrix_ += other.matrix_;
  normalize();
  return *this;
}

PglElement& PglElement::operator-=(const PglElement& other) {
  require_same(signature_, other.signature_);
  matrix_ -= other.matrix_;
  normalize();
  return *this;
}

PglElement& PglElement::operator*=(const Rational& s) {
  matrix_ *= s;
  return *this;
}

Rational supertrace(const Signature& sig, const Matrix& m) {
  Rational s = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (block_parity(sig, i) == 0) {
      s += m(i, i);
    } else {
      s -= m(i, i);
    }
  }
  return s;
}

Rational supertrace_small(const Signature& sig, const Matrix& m) {
  Rational s = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (sig.parity(i) == 0) {
      s += m(i, i);
    } else {
      s -= m(i, i);
    }
  }
  return s;
}

PglElement bracket(const PglElement& a, const PglElement& b) {
  require_same(a.signature(), b.signature());
  auto [a0, a1] = a.split_parity();
  auto [b0, b1] = b.split_parity();
  const PglElement* as[2] = {&a0, &a1};
  const PglElement* bs[2] = {&b0, &b1};
  const int n = a.matrix().rows();
  Matrix out(n, n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix& x = as[i]->matrix();
      const Matrix& y = bs[j]->matrix();
      out += x * y;
      if (i * j == 1) {
        out += y * x;
      } else {
        out -= y * x;
      }
    }
  }
  // Brackets of supertraceless classes stay supertraceless; the generic kind
  // avoids re-validating.
  const AlgebraKind kind = a.kind() == AlgebraKind::psl && b.kind() == AlgebraKind::psl ? AlgebraKind::psl : AlgebraKind::pgl;
  return PglElement(a.signature(), out, kind);
}

PglElement euler_element(Signature signature, AlgebraKind kind) {
  Matrix B(signature.dim() + 1, signature.dim() + 1);
  B(0, 0) = 1;
  return PglElement(signature, B, kind == AlgebraKind::psl ? AlgebraKind::pgl : kind);
}

std::string to_string(const PglElement& a) {
  std::string out = "[";
  const Matrix& m = a.matrix();
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += format_rational(m(r, c));
    }
  }
  return out + "]";
}

}  // namespace sq
