#include "superquant/super_polynomial.hpp"

#include "superquant/text_format.hpp"

#include <algorithm>

namespace sq {

const char* to_string(Parity parity) {
  switch (parity) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "?";
}

SuperPolynomial::SuperPolynomial(Signature signature) : signature_(signature) {}

SuperPolynomial SuperPolynomial::constant(Signature signature, const Rational& value) {
  SuperPolynomial f(signature);
  f.add_term(Monomial(signature.p()), value);
  return f;
}

SuperPolynomial SuperPolynomial::coordinate(Signature signature, int index) {
  signature.check_index(index);
  SuperPolynomial f(signature);
  f.add_term(generator(index, signature.p()), 1);
  return f;
}

SuperPolynomial SuperPolynomial::monomial(Signature signature, Monomial m, const Rational& c) {
  SuperPolynomial f(signature);
  f.add_term(m, c);
  return f;
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SuperPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Parity SuperPolynomial::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [m, c] : terms_) (m.parity() ? has_odd : has_even) = true;
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

std::pair<SuperPolynomial, SuperPolynomial> SuperPolynomial::split_parity() const {
  SuperPolynomial even(signature_);
  SuperPolynomial odd(signature_);
  for (const auto& [m, c] : terms_) (m.parity() ? odd : even).terms_.emplace(m, c);
  return {std::move(even), std::move(odd)};
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  require_same(signature_, other.signature_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
  require_same(signature_, other.signature_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same(a.signature_, b.signature_);
  SuperPolynomial out(a.signature_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const SignedMonomial prod = multiply(ma, mb);
      if (prod.sign == 0) continue;
      Rational c = ca * cb;
      if (prod.sign < 0) c = -c;
      out.add_term(prod.monomial, c);
    }
  }
  return out;
}

SuperPolynomial multiply_left(const Monomial& m, const Rational& c, const SuperPolynomial& f) {
  SuperPolynomial out(f.signature());
  for (const auto& [mf, cf] : f.terms()) {
    const SignedMonomial prod = multiply(m, mf);
    if (prod.sign == 0) continue;
    Rational v = c * cf;
    if (prod.sign < 0) v = -v;
    out.add_term(prod.monomial, v);
  }
  return out;
}

SuperPolynomial partial(int index, const SuperPolynomial& f) {
  f.signature().check_index(index);
  SuperPolynomial out(f.signature());
  for (const auto& [m, c] : f.terms()) {
    const DerivedMonomial d = left_derivative(m, index, f.signature().p());
    if (d.factor != 0) out.add_term(d.monomial, c * d.factor);
  }
  return out;
}

std::string to_string(const SuperPolynomial& f) {
  std::vector<std::pair<std::string, Rational>> terms;
  terms.reserve(f.size());
  // Highest degree first reads more naturally.
  std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [m, c] : sorted) terms.emplace_back(text::factors(m, "x", "t"), c);
  return text::sum(terms);
}

}  // namespace sq
