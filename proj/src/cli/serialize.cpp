#include "superquant/serialize.hpp"

#include "superquant/text_format.hpp"

namespace sq {

namespace {

nlohmann::ordered_json document(const Signature& sig, const std::string& kind, const std::map<std::string, Rational>& weights,
                        nlohmann::ordered_json terms) {
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [name, value] : weights) w[name] = format_rational(value);
  return {{"signature", signature_json(sig)}, {"weights", w}, {"kind", kind}, {"terms", std::move(terms)}};
}

void append_terms(nlohmann::ordered_json& terms, const std::string& suffix, const SuperPolynomial& f) {
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"key", text::key(m) + suffix}, {"coeff", format_rational(c)}});
  }
}

nlohmann::ordered_json keyed_terms(const KeyedTerms& T, const char* prefix) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [key, f] : T.terms()) append_terms(terms, ";" + text::key(key, prefix), f);
  return terms;
}

}  // namespace

nlohmann::ordered_json signature_json(const Signature& sig) { return {{"p", sig.p()}, {"q", sig.q()}}; }

nlohmann::ordered_json rational_json(const Signature& sig, const std::string& kind, const Rational& value) {
  return {{"signature", signature_json(sig)}, {"kind", kind}, {"value", format_rational(value)}};
}

nlohmann::ordered_json to_json(const SuperPolynomial& f, const std::map<std::string, Rational>& weights) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  append_terms(terms, "", f);
  return document(f.signature(), "poly", weights, std::move(terms));
}

nlohmann::ordered_json to_json(const VectorField& X) {
  const Signature& sig = X.signature();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (int i = 0; i < sig.dim(); ++i) append_terms(terms, ";" + text::key(generator(i, sig.p()), "d"), X.component(i));
  return document(sig, "vfield", {}, std::move(terms));
}

nlohmann::ordered_json to_json(const SymbolField& S) {
  return document(S.signature(), "symbol", {{"delta", S.weight()}}, keyed_terms(S, "e"));
}

nlohmann::ordered_json to_json(const DiffOperator& D) {
  return document(D.signature(), "operator", {{"lambda", D.source()}, {"mu", D.target()}}, keyed_terms(D, "d"));
}

}  // namespace sq
