#ifndef SUPERQUANT_VECTOR_FIELD_HPP
#define SUPERQUANT_VECTOR_FIELD_HPP

#include "superquant/super_polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sq {

/// X = sum_i X^i d/dy^i with polynomial components.
class VectorField {
 public:
  explicit VectorField(Signature signature);
  VectorField(Signature signature, std::vector<SuperPolynomial> components);

  /// d/dy^index
  static VectorField partial(Signature signature, int index);
  /// sum_i y^i d/dy^i
  static VectorField euler(Signature signature);

  const Signature& signature() const { return signature_; }
  const std::vector<SuperPolynomial>& components() const { return components_; }
  const SuperPolynomial& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  SuperPolynomial& component(int i) { return components_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  /// Parity as an operator on functions: component i term m contributes
  /// parity(m) + parity(i).
  Parity parity() const;
  std::pair<VectorField, VectorField> split_parity() const;

  /// X(f)
  SuperPolynomial apply(const SuperPolynomial& f) const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& s);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& s, VectorField a) { return a *= s; }
  /// f X: components f X^i
  friend VectorField operator*(const SuperPolynomial& f, const VectorField& X);

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.signature_ == b.signature_ && a.components_ == b.components_;
  }

 private:
  Signature signature_;
  std::vector<SuperPolynomial> components_;
};

/// Super bracket XY - (-1)^{|X||Y|} YX, extended bilinearly to mixed fields.
VectorField bracket(const VectorField& X, const VectorField& Y);

/// div X = sum_i (-1)^{|y^i||X^i|} d_i X^i, per homogeneous term.
SuperPolynomial divergence(const VectorField& X);

/// Lie derivative of a lambda-density: X(f) + lambda div(X) f.
SuperPolynomial lie_density(const VectorField& X, const Rational& lambda, const SuperPolynomial& f);

/// `x1*dx1 - t1*dt2` style text.
std::string to_string(const VectorField& X);

}  // namespace sq

#endif
