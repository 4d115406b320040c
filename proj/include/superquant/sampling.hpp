#ifndef SUPERQUANT_SAMPLING_HPP
#define SUPERQUANT_SAMPLING_HPP

#include "superquant/diff_operator.hpp"
#include "superquant/symbol_field.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace sq {

/// Deterministic source of random homogeneous test data. Coefficient
/// polynomials have total degree <= 3. The n-th symbol drawn for a degree
/// contains a coefficient whose odd part is subset number n mod 2^q (subsets
/// of size <= 3), so every odd subset shows up once n runs past 2^q.
class SampleGenerator {
 public:
  SampleGenerator(Signature signature, std::uint64_t seed);

  static constexpr int kMaxCoefficientDegree = 3;

  Rational rational();
  /// Random polynomial of homogeneous parity (0 even, 1 odd); zero when no
  /// monomial of that parity exists (odd with q = 0).
  SuperPolynomial polynomial(int parity, int terms = 2);
  /// Homogeneous-parity symbol of degree k and the given weight.
  SymbolField symbol(int k, const Rational& weight);
  /// Homogeneous-parity vector field.
  VectorField vector_field();
  /// Random operator of order <= order with homogeneous parity.
  DiffOperator operator_of_order(int order, const Rational& source, const Rational& target);

 private:
  Monomial coefficient_monomial(int parity);
  Monomial coefficient_monomial_with_odd(std::uint32_t odd);
  std::optional<Monomial> random_key(int k);
  std::uint32_t forced_subset(int k);

  Signature signature_;
  std::mt19937_64 engine_;
  std::vector<std::uint32_t> small_subsets_;
  std::vector<int> cursor_;
};

}  // namespace sq

#endif
