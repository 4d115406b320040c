#ifndef SUPERQUANT_RATIONAL_HPP
#define SUPERQUANT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sq {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses `a`, `-a` or `a/b` (decimal integers). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Prints `a` or `a/b`; never a decimal expansion.
std::string format_rational(const Rational& value);

/// a/b in lowest terms; b must be nonzero.
inline Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& value) { return sgn(value); }

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace sq

#endif
