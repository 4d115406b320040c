#ifndef SUPERQUANT_SUPER_POLYNOMIAL_HPP
#define SUPERQUANT_SUPER_POLYNOMIAL_HPP

#include "superquant/monomial.hpp"
#include "superquant/rational.hpp"
#include "superquant/signature.hpp"

#include <map>
#include <string>
#include <utility>

namespace sq {

enum class Parity { even, odd, mixed };

const char* to_string(Parity parity);

/// Polynomial superfunction on R^{p|q} with exact rational coefficients.
/// No zero coefficient is ever stored.
class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit SuperPolynomial(Signature signature);

  static SuperPolynomial constant(Signature signature, const Rational& value);
  /// Coordinate y^index, index in [0, p+q).
  static SuperPolynomial coordinate(Signature signature, int index);
  static SuperPolynomial monomial(Signature signature, Monomial m, const Rational& c = 1);

  const Signature& signature() const { return signature_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  int degree() const;  ///< -1 for zero

  void add_term(const Monomial& m, const Rational& c);

  /// Zero counts as even.
  Parity parity() const;
  /// (even part, odd part)
  std::pair<SuperPolynomial, SuperPolynomial> split_parity() const;

  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator-=(const SuperPolynomial& other);
  SuperPolynomial& operator*=(const Rational& s);

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator-(SuperPolynomial a) { return a *= Rational(-1); }
  friend SuperPolynomial operator*(SuperPolynomial a, const Rational& s) { return a *= s; }
  friend SuperPolynomial operator*(const Rational& s, SuperPolynomial a) { return a *= s; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return a.signature_ == b.signature_ && a.terms_ == b.terms_;
  }

 private:
  Signature signature_;
  Terms terms_;
};

/// Product of monomial c*m with f: (c m) * f.
SuperPolynomial multiply_left(const Monomial& m, const Rational& c, const SuperPolynomial& f);

/// d/dy^index. Odd coordinates use the left derivative.
SuperPolynomial partial(int index, const SuperPolynomial& f);

/// Text in the expression language, e.g. `x1^2*t1 - (1/2)*t2`.
std::string to_string(const SuperPolynomial& f);

}  // namespace sq

#endif
