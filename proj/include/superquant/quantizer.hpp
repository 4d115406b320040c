#ifndef SUPERQUANT_QUANTIZER_HPP
#define SUPERQUANT_QUANTIZER_HPP

#include "superquant/diff_operator.hpp"
#include "superquant/symbol_field.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sq {

enum class Variant { generic_sl, psl_family };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

struct QuantizationConfig {
  QuantizationConfig(Signature sig, Rational lambda, Rational delta, Variant variant = Variant::generic_sl,
                     Rational t = 0);

  Signature sig;
  Rational lambda;
  Rational delta;
  Variant variant;
  Rational t;

  Rational mu() const { return lambda + delta; }

  /// Throws PreconditionError when the variant does not match the signature,
  /// and CriticalWeightError when delta lies in c_1 u ... u c_kmax (generic
  /// variant only).
  void validate(int kmax = 0) const;
};

/// Coefficient provider (k, r) -> C_{k,r}.
using CoefficientFn = std::function<Rational(int k, int r)>;

/// The quantization selected by cfg.variant. Symbols of several degrees are
/// quantized degree by degree.
DiffOperator quantize(const SymbolField& S, const QuantizationConfig& cfg);

/// sum_r C_{k,r} Q_Aff(div^r S_k) with caller-supplied coefficients.
DiffOperator quantize_closed_form(const SymbolField& S, const QuantizationConfig& cfg, const CoefficientFn& coefficient);

/// Q_Aff(S_k + S_{k-1} + ... + S_0), S_r = N S_{r+1} / (alpha(k) - alpha(r)).
DiffOperator quantize_recursive(const SymbolField& S, const QuantizationConfig& cfg);

/// The eigenvector S_k + ... + S_0 of the transported Casimir built by
/// quantize_recursive, before Q_Aff.
SymbolField recursive_lift(const SymbolField& S, const QuantizationConfig& cfg);

/// The one-parameter family on q = p+1: Q_Aff(S) + t div(S) on degree 1,
/// the closed form with p - q = -1 elsewhere.
DiffOperator quantize_psl(const SymbolField& S, const QuantizationConfig& cfg);

/// Inverse of quantize: entry k is the degree-k symbol; the vector has
/// order(D)+1 entries (one zero entry for the zero operator).
std::vector<SymbolField> symbol_map(const DiffOperator& D, const QuantizationConfig& cfg);

}  // namespace sq

#endif
