#ifndef SUPERQUANT_TEXT_FORMAT_HPP
#define SUPERQUANT_TEXT_FORMAT_HPP

#include "superquant/monomial.hpp"
#include "superquant/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sq::text {

/// `x1^2*x3*t1*t2` style product; empty string for the unit monomial.
std::string factors(const Monomial& m, std::string_view even_prefix, std::string_view odd_prefix);

/// Joins already-formatted monomials with their coefficients into a sum.
/// Non-integer coefficients are parenthesized: `x1*dx1 + (1/2)`.
std::string sum(const std::vector<std::pair<std::string, Rational>>& terms);

/// Multi-index key used by the JSON schema, e.g. `x^(2,0);t{1}`.
std::string key(const Monomial& m, std::string_view prefix = "");

}  // namespace sq::text

#endif
