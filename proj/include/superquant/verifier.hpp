#ifndef SUPERQUANT_VERIFIER_HPP
#define SUPERQUANT_VERIFIER_HPP

#include "superquant/casimir.hpp"
#include "superquant/quantizer.hpp"
#include "superquant/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sq {

inline constexpr int kDefaultSamples = 25;

struct NamedField {
  std::string name;
  VectorField field;
};

/// {X^{e_r}} u {X^{E_ij}} u {X^{eps^r}}; for the psl family the g_0 part is
/// the supertraceless basis of psl followed by the Euler field.
std::vector<NamedField> equivariance_generators(const Signature& sig, Variant variant);

using QuantizerFn = std::function<DiffOperator(const SymbolField&)>;

/// calL_{X^h}(Q S) == Q(L_{X^h} S) for every generator and `samples` random
/// symbols per degree 0..degree_max. Validates cfg first.
CheckReport check_equivariance(const QuantizationConfig& cfg, int degree_max, int samples = kDefaultSamples,
                               std::uint64_t seed = 0);

/// Same suite against an arbitrary map from symbols to operators.
CheckReport check_equivariance(const QuantizationConfig& cfg, const QuantizerFn& quantizer, const std::string& name,
                               int degree_max, int samples = kDefaultSamples, std::uint64_t seed = 0);

/// casimir_apply(S, L) == eigenvalue * S for degrees 0..kmax.
CheckReport check_casimir(const Signature& sig, CasimirAlgebra algebra, const Rational& lambda, const Rational& delta,
                          int kmax, int samples = kDefaultSamples, std::uint64_t seed = 0);

/// realize([a,b]) == [realize a, realize b] on all graded basis pairs, the
/// identity sum_r (-1)^{|r|} [e_r, eps^r] = -1/2 E (sum_r [e_r, eps^r] = 0
/// when q = p+1), and ad(E) = k Id on g_k.
CheckReport check_homomorphism(const Signature& sig);

/// casimir(calL) == casimir(L) + N on random symbols of degrees 0..kmax.
CheckReport check_relcas(const Signature& sig, const Rational& lambda, const Rational& delta, int kmax,
                         int samples = kDefaultSamples, std::uint64_t seed = 0);

}  // namespace sq

#endif
