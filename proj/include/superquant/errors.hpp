#ifndef SUPERQUANT_ERRORS_HPP
#define SUPERQUANT_ERRORS_HPP

#include "superquant/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sq {

/// A mathematical precondition does not hold (critical weight, wrong algebra
/// for the signature, mismatched operator weights, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The weight delta collides two Casimir eigenvalues: alpha(k, delta) equals
/// alpha(k - l, delta), equivalently delta is the l-th member of the critical
/// set of degree k.
class CriticalWeightError : public PreconditionError {
 public:
  CriticalWeightError(int k, int l, const Rational& delta);

  int degree() const { return k_; }
  int index() const { return l_; }
  const Rational& delta() const { return delta_; }

 private:
  int k_;
  int l_;
  Rational delta_;
};

/// Lexical or syntactic error in the expression language.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sq

#endif
