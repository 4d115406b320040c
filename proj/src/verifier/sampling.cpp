#include "superquant/sampling.hpp"

#include "superquant/geometry.hpp"

#include <bit>

namespace sq {

SampleGenerator::SampleGenerator(Signature signature, std::uint64_t seed) : signature_(signature), engine_(seed) {
  const std::uint32_t limit = signature.q() >= 32 ? 0 : (1U << signature.q());
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (std::popcount(s) <= kMaxCoefficientDegree) small_subsets_.push_back(s);
  }
}

Rational SampleGenerator::rational() {
  std::uniform_int_distribution<int> num(1, 7);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution negative(0.5);
  const int n = num(engine_) * (negative(engine_) ? -1 : 1);
  return ratio(n, den(engine_));
}

Monomial SampleGenerator::coefficient_monomial_with_odd(std::uint32_t odd) {
  Monomial m(signature_.p());
  m.odd = odd;
  int budget = kMaxCoefficientDegree - std::popcount(odd);
  if (signature_.p() == 0 || budget <= 0) return m;
  std::uniform_int_distribution<int> total(0, budget);
  std::uniform_int_distribution<int> which(0, signature_.p() - 1);
  for (int n = total(engine_); n > 0; --n) ++m.even[static_cast<std::size_t>(which(engine_))];
  return m;
}

Monomial SampleGenerator::coefficient_monomial(int parity) {
  std::vector<std::uint32_t> candidates;
  for (auto s : small_subsets_) {
    if ((std::popcount(s) & 1) == parity) candidates.push_back(s);
  }
  if (candidates.empty()) return Monomial();
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return coefficient_monomial_with_odd(candidates[pick(engine_)]);
}

std::optional<Monomial> SampleGenerator::random_key(int k) {
  const auto keys = monomials_of_degree(signature_.p(), signature_.q(), k);
  if (keys.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  return keys[pick(engine_)];
}

std::uint32_t SampleGenerator::forced_subset(int k) {
  if (cursor_.size() <= static_cast<std::size_t>(k)) cursor_.resize(static_cast<std::size_t>(k) + 1, 0);
  const int n = cursor_[static_cast<std::size_t>(k)]++;
  return small_subsets_[static_cast<std::size_t>(n) % small_subsets_.size()];
}

SuperPolynomial SampleGenerator::polynomial(int parity, int terms) {
  SuperPolynomial f(signature_);
  for (int i = 0; i < terms; ++i) {
    Monomial m = coefficient_monomial(parity);
    if (m.even.empty() && signature_.p() > 0) continue;
    f.add_term(m, rational());
  }
  return f;
}

SymbolField SampleGenerator::symbol(int k, const Rational& weight) {
  SymbolField S(signature_, weight);
  const auto lead = random_key(k);
  if (!lead) return S;
  const Monomial& lead_key = *lead;
  const std::uint32_t subset = forced_subset(k);
  const int parity = (std::popcount(subset) + lead_key.parity()) & 1;
  S.add_term(lead_key, coefficient_monomial_with_odd(subset), rational());
  std::uniform_int_distribution<int> extra(0, 4);
  for (int n = extra(engine_); n > 0; --n) {
    const Monomial key = *random_key(k);
    const Monomial m = coefficient_monomial((parity + key.parity()) & 1);
    if (m.even.size() != static_cast<std::size_t>(signature_.p())) continue;
    S.add_term(key, m, rational());
  }
  return S;
}

VectorField SampleGenerator::vector_field() {
  std::bernoulli_distribution odd(0.5);
  const int parity = signature_.q() > 0 && odd(engine_) ? 1 : 0;
  VectorField X(signature_);
  for (int i = 0; i < signature_.dim(); ++i) {
    X.component(i) = polynomial((parity + signature_.parity(i)) & 1, 2);
  }
  return X;
}

DiffOperator SampleGenerator::operator_of_order(int order, const Rational& source, const Rational& target) {
  std::bernoulli_distribution odd(0.5);
  const int parity = signature_.q() > 0 && odd(engine_) ? 1 : 0;
  SymbolField total(signature_, target - source);
  for (int k = 0; k <= order; ++k) {
    for (int n = 0; n < 2; ++n) {
      const auto key_opt = random_key(k);
      if (!key_opt) continue;
      const Monomial& key = *key_opt;
      const Monomial m = coefficient_monomial((parity + key.parity()) & 1);
      if (m.even.size() != static_cast<std::size_t>(signature_.p())) continue;
      total.add_term(key, m, rational());
    }
  }
  return affine_quantize(total, source);
}

}  // namespace sq
