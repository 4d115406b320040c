#include "superquant/symbol_field.hpp"
#include "superquant/errors.hpp"

#include "superquant/text_format.hpp"

#include <algorithm>

namespace sq {

SymbolField::SymbolField(Signature signature, Rational weight) : KeyedTerms(signature), weight_(std::move(weight)) {}

SymbolField SymbolField::from_vector_field(const VectorField& Y, const Rational& weight) {
  const Signature& sig = Y.signature();
  SymbolField S(sig, weight);
  for (int i = 0; i < sig.dim(); ++i) S.add(generator(i, sig.p()), Y.component(i));
  return S;
}

SymbolField SymbolField::scalar(const SuperPolynomial& f, const Rational& weight) {
  SymbolField S(f.signature(), weight);
  S.add(Monomial(f.signature().p()), f);
  return S;
}

SymbolField SymbolField::symmetric_product(Signature signature, const std::vector<std::vector<Rational>>& vectors,
                                           const Rational& weight) {
  const int p = signature.p();
  std::map<Monomial, Rational> product{{Monomial(p), Rational(1)}};
  for (const auto& h : vectors) {
    if (h.size() != static_cast<std::size_t>(signature.dim())) {
      throw std::invalid_argument("vector length must be p+q");
    }
    std::map<Monomial, Rational> next;
    for (const auto& [key, c] : product) {
      for (int i = 0; i < signature.dim(); ++i) {
        if (h[static_cast<std::size_t>(i)] == 0) continue;
        const SignedMonomial m = multiply(key, generator(i, p));
        if (m.sign == 0) continue;
        Rational v = c * h[static_cast<std::size_t>(i)];
        if (m.sign < 0) v = -v;
        auto [it, inserted] = next.try_emplace(m.monomial, v);
        if (!inserted) it->second += v;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    product = std::move(next);
  }
  SymbolField S(signature, weight);
  for (const auto& [key, c] : product) S.add(key, SuperPolynomial::constant(signature, c));
  return S;
}

SymbolField SymbolField::component(int k) const {
  SymbolField out(*this);
  out.keep_degree(k);
  return out;
}

SuperPolynomial SymbolField::scalar_part() const { return coefficient(Monomial(signature_.p())); }

VectorField SymbolField::to_vector_field() const {
  VectorField Y(signature_);
  for (int i = 0; i < signature_.dim(); ++i) Y.component(i) = coefficient(generator(i, signature_.p()));
  return Y;
}

std::pair<SymbolField, SymbolField> SymbolField::split_parity() const {
  auto [even_terms, odd_terms] = split_terms_by_parity();
  SymbolField even(signature_, weight_);
  SymbolField odd(signature_, weight_);
  even.terms_ = std::move(even_terms);
  odd.terms_ = std::move(odd_terms);
  return {std::move(even), std::move(odd)};
}

SymbolField& SymbolField::operator+=(const SymbolField& other) {
  if (weight_ != other.weight_) throw PreconditionError("adding symbols of different weights");
  add_all(other, 1);
  return *this;
}

SymbolField& SymbolField::operator-=(const SymbolField& other) {
  if (weight_ != other.weight_) throw PreconditionError("subtracting symbols of different weights");
  add_all(other, -1);
  return *this;
}

SymbolField& SymbolField::operator*=(const Rational& s) {
  scale_all(s);
  return *this;
}

std::string to_string(const SymbolField& S) {
  std::vector<std::pair<Monomial, const SuperPolynomial*>> keys;
  for (const auto& [key, f] : S.terms()) keys.emplace_back(key, &f);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [key, f] : keys) {
    const std::string k = text::factors(key, "ex", "et");
    for (const auto& [m, c] : f->terms()) {
      std::string coeff = text::factors(m, "x", "t");
      if (coeff.empty()) {
        terms.emplace_back(k, c);
      } else {
        terms.emplace_back(k.empty() ? coeff : coeff + "*" + k, c);
      }
    }
  }
  return text::sum(terms);
}

}  // namespace sq
