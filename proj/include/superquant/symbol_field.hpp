#ifndef SUPERQUANT_SYMBOL_FIELD_HPP
#define SUPERQUANT_SYMBOL_FIELD_HPP

#include "superquant/keyed_terms.hpp"
#include "superquant/vector_field.hpp"

#include <string>
#include <vector>

namespace sq {

/// Weighted supersymmetric tensor field sum_a f_a (x) e^a in S_delta. Keys
/// are symmetric monomials e_1^{a_1} ... e_p^{a_p} e_{p+j1} ... with odd
/// generators ascending (odd e's anticommute, so the subset form is exact).
/// The density generator u of weight delta is implicit. A field may mix
/// several degrees; `component(k)` extracts S^k_delta.
class SymbolField : public KeyedTerms {
 public:
  SymbolField(Signature signature, Rational weight);

  /// Y = sum Y^i d_i  ->  sum Y^i (x) e_i
  static SymbolField from_vector_field(const VectorField& Y, const Rational& weight);
  /// Degree-0 symbol f (x) 1.
  static SymbolField scalar(const SuperPolynomial& f, const Rational& weight);
  /// Symmetric product h_1 v ... v h_k of constant vectors (column vectors of
  /// length p+q, each homogeneous) with coefficient 1.
  static SymbolField symmetric_product(Signature signature, const std::vector<std::vector<Rational>>& vectors,
                                       const Rational& weight);

  const Rational& weight() const { return weight_; }

  SymbolField component(int k) const;
  /// Degree-0 part as a function.
  SuperPolynomial scalar_part() const;
  VectorField to_vector_field() const;  ///< degree-1 part
  std::pair<SymbolField, SymbolField> split_parity() const;

  SymbolField& operator+=(const SymbolField& other);
  SymbolField& operator-=(const SymbolField& other);
  SymbolField& operator*=(const Rational& s);

  friend SymbolField operator+(SymbolField a, const SymbolField& b) { return a += b; }
  friend SymbolField operator-(SymbolField a, const SymbolField& b) { return a -= b; }
  friend SymbolField operator*(const Rational& s, SymbolField a) { return a *= s; }

  friend bool operator==(const SymbolField& a, const SymbolField& b) {
    return a.signature_ == b.signature_ && a.weight_ == b.weight_ && a.terms_ == b.terms_;
  }

 private:
  Rational weight_;
};

std::string to_string(const SymbolField& S);

}  // namespace sq

#endif
