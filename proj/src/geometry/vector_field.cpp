#include "superquant/vector_field.hpp"

#include "superquant/text_format.hpp"

namespace sq {

VectorField::VectorField(Signature signature)
    : signature_(signature), components_(static_cast<std::size_t>(signature.dim()), SuperPolynomial(signature)) {}

VectorField::VectorField(Signature signature, std::vector<SuperPolynomial> components)
    : signature_(signature), components_(std::move(components)) {
  if (components_.size() != static_cast<std::size_t>(signature.dim())) {
    throw std::invalid_argument("vector field needs exactly p+q components");
  }
  for (const auto& c : components_) require_same(signature_, c.signature());
}

VectorField VectorField::partial(Signature signature, int index) {
  VectorField X(signature);
  X.component(index) = SuperPolynomial::constant(signature, 1);
  return X;
}

VectorField VectorField::euler(Signature signature) {
  VectorField X(signature);
  for (int i = 0; i < signature.dim(); ++i) X.component(i) = SuperPolynomial::coordinate(signature, i);
  return X;
}

bool VectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Parity VectorField::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (int i = 0; i < signature_.dim(); ++i) {
    for (const auto& [m, c] : component(i).terms()) ((m.parity() + signature_.parity(i)) & 1 ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

std::pair<VectorField, VectorField> VectorField::split_parity() const {
  VectorField even(signature_);
  VectorField odd(signature_);
  for (int i = 0; i < signature_.dim(); ++i) {
    auto [ce, co] = component(i).split_parity();
    if (signature_.parity(i) == 0) {
      even.component(i) = std::move(ce);
      odd.component(i) = std::move(co);
    } else {
      even.component(i) = std::move(co);
      odd.component(i) = std::move(ce);
    }
  }
  return {std::move(even), std::move(odd)};
}

SuperPolynomial VectorField::apply(const SuperPolynomial& f) const {
  require_same(signature_, f.signature());
  SuperPolynomial out(signature_);
  for (int i = 0; i < signature_.dim(); ++i) {
    if (component(i).is_zero()) continue;
    out += component(i) * sq::partial(i, f);
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same(signature_, other.signature_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same(signature_, other.signature_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

VectorField operator*(const SuperPolynomial& f, const VectorField& X) {
  VectorField out(X.signature());
  for (int i = 0; i < X.signature().dim(); ++i) out.component(i) = f * X.component(i);
  return out;
}

namespace {
VectorField bracket_homogeneous(const VectorField& X, int px, const VectorField& Y, int py) {
  const Signature& sig = X.signature();
  VectorField out(sig);
  const bool minus = (px * py) % 2 == 0;
  for (int j = 0; j < sig.dim(); ++j) {
    SuperPolynomial c = X.apply(Y.component(j));
    if (minus) {
      c -= Y.apply(X.component(j));
    } else {
      c += Y.apply(X.component(j));
    }
    out.component(j) = std::move(c);
  }
  return out;
}
}  // namespace

VectorField bracket(const VectorField& X, const VectorField& Y) {
  require_same(X.signature(), Y.signature());
  auto [x0, x1] = X.split_parity();
  auto [y0, y1] = Y.split_parity();
  VectorField out(X.signature());
  const VectorField* xs[2] = {&x0, &x1};
  const VectorField* ys[2] = {&y0, &y1};
  for (int a = 0; a < 2; ++a) {
    if (xs[a]->is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (ys[b]->is_zero()) continue;
      out += bracket_homogeneous(*xs[a], a, *ys[b], b);
    }
  }
  return out;
}

SuperPolynomial divergence(const VectorField& X) {
  const Signature& sig = X.signature();
  SuperPolynomial out(sig);
  for (int i = 0; i < sig.dim(); ++i) {
    SuperPolynomial d = sq::partial(i, X.component(i));
    if (sig.parity(i) == 1) {
      // (-1)^{|X^i|} per monomial of X^i; the derivative flips that parity.
      for (const auto& [m, c] : d.terms()) out.add_term(m, m.parity() == 0 ? Rational(-c) : c);
    } else {
      out += d;
    }
  }
  return out;
}

SuperPolynomial lie_density(const VectorField& X, const Rational& lambda, const SuperPolynomial& f) {
  SuperPolynomial out = X.apply(f);
  if (lambda != 0) out += (divergence(X) * f) * lambda;
  return out;
}

std::string to_string(const VectorField& X) {
  const Signature& sig = X.signature();
  std::vector<std::pair<std::string, Rational>> terms;
  for (int i = 0; i < sig.dim(); ++i) {
    const std::string d = sig.parity(i) == 0 ? "dx" + std::to_string(i + 1) : "dt" + std::to_string(i - sig.p() + 1);
    for (const auto& [m, c] : X.component(i).terms()) {
      std::string f = text::factors(m, "x", "t");
      terms.emplace_back(f.empty() ? d : f + "*" + d, c);
    }
  }
  return text::sum(terms);
}

}  // namespace sq
