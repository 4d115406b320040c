#ifndef SUPERQUANT_DIFF_OPERATOR_HPP
#define SUPERQUANT_DIFF_OPERATOR_HPP

#include "superquant/keyed_terms.hpp"
#include "superquant/vector_field.hpp"

#include <string>

namespace sq {

/// Differential operator D: F_lambda -> F_mu in normal form
///   D(f) = sum_alpha f_alpha d_x1^{a1} ... d_xp^{ap} d_t1^{b1} ... d_tq^{bq} f
/// with all coefficients on the left and odd derivatives in ascending order.
class DiffOperator : public KeyedTerms {
 public:
  DiffOperator(Signature signature, Rational source, Rational target);

  static DiffOperator identity(Signature signature, const Rational& weight);
  static DiffOperator multiplication(const SuperPolynomial& f, const Rational& source, const Rational& target);
  /// L^lambda_X = X + lambda div(X), acting on F_lambda.
  static DiffOperator lie_derivative(const VectorField& X, const Rational& lambda);

  const Rational& source() const { return source_; }  ///< lambda
  const Rational& target() const { return target_; }  ///< mu
  int order() const { return max_degree(); }

  SuperPolynomial apply(const SuperPolynomial& f) const;
  std::pair<DiffOperator, DiffOperator> split_parity() const;
  /// Terms of order exactly k.
  DiffOperator order_part(int k) const;

  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator-=(const DiffOperator& other);
  DiffOperator& operator*=(const Rational& s);

  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Rational& s, DiffOperator a) { return a *= s; }

  /// Coefficient-wise equality of normal forms (weights included).
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.signature_ == b.signature_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.terms_ == b.terms_;
  }

 private:
  void require_same_weights(const DiffOperator& other) const;

  Rational source_;
  Rational target_;
};

/// D1 o D2; requires D2.target == D1.source.
DiffOperator compose(const DiffOperator& D1, const DiffOperator& D2);

/// Independent equality check: apply both operators to every monomial of
/// degree <= max order. Agrees with operator== on well-formed inputs.
bool equal_by_evaluation(const DiffOperator& a, const DiffOperator& b);

std::string to_string(const DiffOperator& D);

}  // namespace sq

#endif
