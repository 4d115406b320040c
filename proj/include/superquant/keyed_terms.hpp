#ifndef SUPERQUANT_KEYED_TERMS_HPP
#define SUPERQUANT_KEYED_TERMS_HPP

#include "superquant/super_polynomial.hpp"

#include <map>
#include <utility>

namespace sq {

/// Finite sum  sum_key f_key (x) key  with polynomial coefficients written on
/// the left. The key is a multi-index over the p|q generators (symmetric
/// tensor generators e_i, or derivatives d_i). Zero coefficients are pruned.
class KeyedTerms {
 public:
  using Terms = std::map<Monomial, SuperPolynomial>;

  explicit KeyedTerms(Signature signature) : signature_(signature) {}

  const Signature& signature() const { return signature_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero element.
  int max_degree() const;
  /// Lowest key degree present; -1 for zero.
  int min_degree() const;
  bool is_homogeneous() const { return max_degree() == min_degree(); }

  SuperPolynomial coefficient(const Monomial& key) const;

  void add(const Monomial& key, const SuperPolynomial& f);
  void add_term(const Monomial& key, const Monomial& m, const Rational& c);

  /// Parity of each term: coefficient monomial parity + key parity.
  Parity parity() const;

 protected:
  void add_all(const KeyedTerms& other, const Rational& scale);
  void scale_all(const Rational& s);
  void keep_degree(int k);
  std::pair<Terms, Terms> split_terms_by_parity() const;

  Signature signature_;
  Terms terms_;
};

}  // namespace sq

#endif
