#include "superquant/diff_operator.hpp"

#include "superquant/errors.hpp"
#include "superquant/text_format.hpp"

#include <algorithm>
#include <functional>

namespace sq {

DiffOperator::DiffOperator(Signature signature, Rational source, Rational target)
    : KeyedTerms(signature), source_(std::move(source)), target_(std::move(target)) {}

DiffOperator DiffOperator::identity(Signature signature, const Rational& weight) {
  return multiplication(SuperPolynomial::constant(signature, 1), weight, weight);
}

DiffOperator DiffOperator::multiplication(const SuperPolynomial& f, const Rational& source, const Rational& target) {
  DiffOperator D(f.signature(), source, target);
  D.add(Monomial(f.signature().p()), f);
  return D;
}

DiffOperator DiffOperator::lie_derivative(const VectorField& X, const Rational& lambda) {
  const Signature& sig = X.signature();
  DiffOperator D(sig, lambda, lambda);
  for (int i = 0; i < sig.dim(); ++i) D.add(generator(i, sig.p()), X.component(i));
  if (lambda != 0) D.add(Monomial(sig.p()), divergence(X) * lambda);
  return D;
}

namespace {

/// Smallest generator present in a non-unit multi-index; the remaining
/// multi-index stays canonical after removing it.
int first_generator(const Monomial& alpha, int p) {
  for (int i = 0; i < p; ++i) {
    if (alpha.even[static_cast<std::size_t>(i)] > 0) return i;
  }
  return p + std::countr_zero(alpha.odd);
}

Monomial without(const Monomial& alpha, int index, int p) {
  Monomial out = alpha;
  if (index < p) {
    --out.even[static_cast<std::size_t>(index)];
  } else {
    out.odd &= ~(1U << (index - p));
  }
  return out;
}

/// d_i o (sum_beta g_beta d^beta)
KeyedTerms::Terms derive_left(int i, const KeyedTerms::Terms& terms, const Signature& sig) {
  KeyedTerms acc(sig);
  const int p = sig.p();
  const int pi = sig.parity(i);
  for (const auto& [beta, g] : terms) {
    acc.add(beta, partial(i, g));
    const SignedMonomial key = left_multiply(beta, i, p);
    if (key.sign == 0) continue;
    for (const auto& [m, c] : g.terms()) {
      const int s = ((pi * m.parity()) & 1 ? -1 : 1) * key.sign;
      acc.add_term(key.monomial, m, s < 0 ? Rational(-c) : c);
    }
  }
  return acc.terms();
}

}  // namespace

SuperPolynomial DiffOperator::apply(const SuperPolynomial& f) const {
  require_same(signature_, f.signature());
  const int p = signature_.p();
  std::map<Monomial, SuperPolynomial> memo;
  std::function<const SuperPolynomial&(const Monomial&)> derivs = [&](const Monomial& alpha) -> const SuperPolynomial& {
    if (auto it = memo.find(alpha); it != memo.end()) return it->second;
    if (alpha.degree() == 0) return memo.emplace(alpha, f).first->second;
    const int a = first_generator(alpha, p);
    SuperPolynomial value = partial(a, derivs(without(alpha, a, p)));
    return memo.emplace(alpha, std::move(value)).first->second;
  };
  SuperPolynomial out(signature_);
  for (const auto& [alpha, coeff] : terms_) out += coeff * derivs(alpha);
  return out;
}

std::pair<DiffOperator, DiffOperator> DiffOperator::split_parity() const {
  auto [even_terms, odd_terms] = split_terms_by_parity();
  DiffOperator even(signature_, source_, target_);
  DiffOperator odd(signature_, source_, target_);
  even.terms_ = std::move(even_terms);
  odd.terms_ = std::move(odd_terms);
  return {std::move(even), std::move(odd)};
}

DiffOperator DiffOperator::order_part(int k) const {
  DiffOperator out(*this);
  out.keep_degree(k);
  return out;
}

void DiffOperator::require_same_weights(const DiffOperator& other) const {
  if (source_ != other.source_ || target_ != other.target_) {
    throw PreconditionError("operators act between different density weights");
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  require_same_weights(other);
  add_all(other, 1);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) {
  require_same_weights(other);
  add_all(other, -1);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& s) {
  scale_all(s);
  return *this;
}

DiffOperator compose(const DiffOperator& D1, const DiffOperator& D2) {
  require_same(D1.signature(), D2.signature());
  if (D2.target() != D1.source()) {
    throw PreconditionError("weight mismatch in composition: inner target " + format_rational(D2.target()) +
                            " != outer source " + format_rational(D1.source()));
  }
  const Signature& sig = D1.signature();
  const int p = sig.p();
  std::map<Monomial, KeyedTerms::Terms> memo;
  std::function<const KeyedTerms::Terms&(const Monomial&)> derivs =
      [&](const Monomial& alpha) -> const KeyedTerms::Terms& {
    if (auto it = memo.find(alpha); it != memo.end()) return it->second;
    if (alpha.degree() == 0) return memo.emplace(alpha, D2.terms()).first->second;
    const int a = first_generator(alpha, p);
    KeyedTerms::Terms value = derive_left(a, derivs(without(alpha, a, p)), sig);
    return memo.emplace(alpha, std::move(value)).first->second;
  };
  DiffOperator out(sig, D2.source(), D1.target());
  for (const auto& [alpha, f] : D1.terms()) {
    for (const auto& [beta, g] : derivs(alpha)) out.add(beta, f * g);
  }
  return out;
}

bool equal_by_evaluation(const DiffOperator& a, const DiffOperator& b) {
  require_same(a.signature(), b.signature());
  if (a.source() != b.source() || a.target() != b.target()) return false;
  const Signature& sig = a.signature();
  const int top = std::max(a.order(), b.order());
  for (int d = 0; d <= top; ++d) {
    for (const auto& m : monomials_of_degree(sig.p(), sig.q(), d)) {
      const SuperPolynomial f = SuperPolynomial::monomial(sig, m);
      if (!(a.apply(f) == b.apply(f))) return false;
    }
  }
  return true;
}

std::string to_string(const DiffOperator& D) {
  std::vector<std::pair<Monomial, const SuperPolynomial*>> keys;
  for (const auto& [key, f] : D.terms()) keys.emplace_back(key, &f);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [key, f] : keys) {
    const std::string k = text::factors(key, "dx", "dt");
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
