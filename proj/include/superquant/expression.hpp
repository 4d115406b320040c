#ifndef SUPERQUANT_EXPRESSION_HPP
#define SUPERQUANT_EXPRESSION_HPP

#include "superquant/diff_operator.hpp"
#include "superquant/symbol_field.hpp"

#include <string>
#include <string_view>

namespace sq {

/// Text grammar shared by every kind (LL(1)):
///   expr    := ['+' | '-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ['^' INT] | number | '(' expr ')'
///   number  := INT ['/' INT]
///   atom    := x<i> | t<i> | ex<i> | et<i> | dx<i> | dt<i>     (1-based)
/// Products are read in the free supercommutative algebra on all atoms, so
/// `t2*t1` equals `-t1*t2` and `dx1*x1` equals `x1*dx1`. Derivative atoms
/// mean the formal generators of an operator's total symbol, not
/// composition.
enum class ExprKind { poly, vfield, symbol, op };

std::string to_string(ExprKind kind);
ExprKind parse_expr_kind(const std::string& text);

SuperPolynomial parse_polynomial(const Signature& sig, std::string_view text);
/// Every term must carry exactly one derivative atom.
VectorField parse_vector_field(const Signature& sig, std::string_view text);
SymbolField parse_symbol(const Signature& sig, std::string_view text, const Rational& weight);
DiffOperator parse_operator(const Signature& sig, std::string_view text, const Rational& source, const Rational& target);

}  // namespace sq

#endif
