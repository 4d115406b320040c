#ifndef SUPERQUANT_SERIALIZE_HPP
#define SUPERQUANT_SERIALIZE_HPP

#include "superquant/diff_operator.hpp"
#include "superquant/symbol_field.hpp"

#include <map>
#include <vector>

#include <json.hpp>

namespace sq {

/// {signature, weights, kind, terms: [{key, coeff}]}. Keys spell the
/// coefficient monomial followed by the generator multi-index, e.g.
/// `x^(2,0);t{1};d x^(1,0);d t{}`; coefficients are exact `a/b` strings.
nlohmann::ordered_json to_json(const SuperPolynomial& f, const std::map<std::string, Rational>& weights = {});
nlohmann::ordered_json to_json(const VectorField& X);
nlohmann::ordered_json to_json(const SymbolField& S);
nlohmann::ordered_json to_json(const DiffOperator& D);

nlohmann::ordered_json signature_json(const Signature& sig);
nlohmann::ordered_json rational_json(const Signature& sig, const std::string& kind, const Rational& value);

}  // namespace sq

#endif
