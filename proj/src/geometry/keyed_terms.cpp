#include "superquant/keyed_terms.hpp"

#include <algorithm>

namespace sq {

int KeyedTerms::max_degree() const {
  int d = -1;
  for (const auto& [key, f] : terms_) d = std::max(d, key.degree());
  return d;
}

int KeyedTerms::min_degree() const {
  int d = -1;
  for (const auto& [key, f] : terms_) d = d < 0 ? key.degree() : std::min(d, key.degree());
  return d;
}

SuperPolynomial KeyedTerms::coefficient(const Monomial& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? SuperPolynomial(signature_) : it->second;
}

void KeyedTerms::add(const Monomial& key, const SuperPolynomial& f) {
  require_same(signature_, f.signature());
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void KeyedTerms::add_term(const Monomial& key, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.try_emplace(key, signature_).first;
  it->second.add_term(m, c);
  if (it->second.is_zero()) terms_.erase(it);
}

Parity KeyedTerms::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [key, f] : terms_) {
    for (const auto& [m, c] : f.terms()) ((m.parity() + key.parity()) & 1 ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

void KeyedTerms::add_all(const KeyedTerms& other, const Rational& scale) {
  require_same(signature_, other.signature_);
  for (const auto& [key, f] : other.terms_) add(key, scale == 1 ? f : f * scale);
}

void KeyedTerms::scale_all(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return;
  }
  for (auto& [key, f] : terms_) f *= s;
}

void KeyedTerms::keep_degree(int k) {
  std::erase_if(terms_, [k](const auto& kv) { return kv.first.degree() != k; });
}

std::pair<KeyedTerms::Terms, KeyedTerms::Terms> KeyedTerms::split_terms_by_parity() const {
  Terms even;
  Terms odd;
  for (const auto& [key, f] : terms_) {
    auto [fe, fo] = f.split_parity();
    // total parity = parity(f-part) + parity(key)
    SuperPolynomial& to_even = key.parity() == 0 ? fe : fo;
    SuperPolynomial& to_odd = key.parity() == 0 ? fo : fe;
    if (!to_even.is_zero()) even.emplace(key, std::move(to_even));
    if (!to_odd.is_zero()) odd.emplace(key, std::move(to_odd));
  }
  return {std::move(even), std::move(odd)};
}

}  // namespace sq
