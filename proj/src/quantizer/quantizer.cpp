#include "superquant/quantizer.hpp"

#include "superquant/casimir.hpp"
#include "superquant/constants.hpp"
#include "superquant/errors.hpp"
#include "superquant/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sq {

std::string to_string(Variant v) { return v == Variant::generic_sl ? "sl" : "psl"; }

Variant parse_variant(const std::string& text) {
  if (text == "sl" || text == "generic-sl") return Variant::generic_sl;
  if (text == "psl" || text == "psl-family") return Variant::psl_family;
  throw std::invalid_argument("unknown variant '" + text + "' (expected sl or psl)");
}

QuantizationConfig::QuantizationConfig(Signature sig_, Rational lambda_, Rational delta_, Variant variant_, Rational t_)
    : sig(sig_), lambda(std::move(lambda_)), delta(std::move(delta_)), variant(variant_), t(std::move(t_)) {}

void QuantizationConfig::validate(int kmax) const {
  if (variant == Variant::generic_sl) {
    if (sig.is_psl_case()) throw PreconditionError("the generic quantization requires q != p + 1; use the psl variant");
    for (int k = 1; k <= kmax; ++k) {
      if (auto l = critical_member(sig, k, delta)) throw CriticalWeightError(k, *l, delta);
    }
  } else if (!sig.is_psl_case()) {
    throw PreconditionError("the psl family requires q = p + 1");
  }
}

namespace {

void check_symbol(const SymbolField& S, const QuantizationConfig& cfg) {
  require_same(S.signature(), cfg.sig);
  if (S.weight() != cfg.delta) {
    throw PreconditionError("symbol weight " + format_rational(S.weight()) + " differs from delta " + format_rational(cfg.delta));
  }
}

DiffOperator zero_operator(const QuantizationConfig& cfg) { return DiffOperator(cfg.sig, cfg.lambda, cfg.mu()); }

DiffOperator closed_form_degree(const SymbolField& Sk, int k, const QuantizationConfig& cfg, const CoefficientFn& coefficient) {
  DiffOperator out = zero_operator(cfg);
  SymbolField current = Sk;
  for (int r = 0; r <= k; ++r) {
    const Rational c = coefficient(k, r);
    if (c != 0 && !current.is_zero()) out += c * affine_quantize(current, cfg.lambda);
    if (r < k) current = divergence(current);
  }
  return out;
}

}  // namespace

DiffOperator quantize_closed_form(const SymbolField& S, const QuantizationConfig& cfg, const CoefficientFn& coefficient) {
  check_symbol(S, cfg);
  DiffOperator out = zero_operator(cfg);
  for (int k = 0; k <= S.max_degree(); ++k) {
    const SymbolField Sk = S.component(k);
    if (Sk.is_zero()) continue;
    out += closed_form_degree(Sk, k, cfg, coefficient);
  }
  return out;
}

DiffOperator quantize(const SymbolField& S, const QuantizationConfig& cfg) {
  if (cfg.variant == Variant::psl_family) return quantize_psl(S, cfg);
  cfg.validate(std::max(S.max_degree(), 0));
  check_symbol(S, cfg);
  return quantize_closed_form(S, cfg, [&cfg](int k, int r) { return coeff(k, r, cfg.lambda, cfg.delta, cfg.sig); });
}

SymbolField recursive_lift(const SymbolField& S, const QuantizationConfig& cfg) {
  if (cfg.variant != Variant::generic_sl) throw PreconditionError("the recursive construction applies to the generic variant only");
  cfg.validate(std::max(S.max_degree(), 0));
  check_symbol(S, cfg);
  SymbolField out(cfg.sig, cfg.delta);
  for (int k = 0; k <= S.max_degree(); ++k) {
    SymbolField current = S.component(k);
    if (current.is_zero()) continue;
    out += current;
    const Rational ak = alpha(k, cfg.delta, cfg.sig);
    for (int r = k - 1; r >= 0; --r) {
      const Rational gap = ak - alpha(r, cfg.delta, cfg.sig);
      if (gap == 0) throw CriticalWeightError(k, k - r, cfg.delta);
      current = (Rational(1) / gap) * n_apply(current, cfg.lambda).component(r);
      out += current;
    }
  }
  return out;
}

DiffOperator quantize_recursive(const SymbolField& S, const QuantizationConfig& cfg) {
  return affine_quantize(recursive_lift(S, cfg), cfg.lambda);
}

DiffOperator quantize_psl(const SymbolField& S, const QuantizationConfig& cfg) {
  cfg.validate();
  check_symbol(S, cfg);
  DiffOperator out = zero_operator(cfg);
  for (int k = 0; k <= S.max_degree(); ++k) {
    const SymbolField Sk = S.component(k);
    if (Sk.is_zero()) continue;
    if (k == 1) {
      out += affine_quantize(Sk, cfg.lambda);
      if (cfg.t != 0) {
        out += cfg.t * DiffOperator::multiplication(divergence(Sk).scalar_part(), cfg.lambda, cfg.mu());
      }
    } else {
      out += closed_form_degree(Sk, k, cfg, [](int kk, int r) { return psl_coeff(kk, r); });
    }
  }
  return out;
}

std::vector<SymbolField> symbol_map(const DiffOperator& D, const QuantizationConfig& cfg) {
  require_same(D.signature(), cfg.sig);
  if (D.source() != cfg.lambda || D.target() != cfg.mu()) {
    throw PreconditionError("operator weights (" + format_rational(D.source()) + ", " + format_rational(D.target()) +
                            ") differ from (lambda, lambda + delta)");
  }
  const int order = std::max(D.order(), 0);
  cfg.validate(cfg.variant == Variant::generic_sl ? order : 0);
  std::vector<SymbolField> out(static_cast<std::size_t>(order + 1), SymbolField(cfg.sig, cfg.delta));
  DiffOperator rest = D;
  for (int k = order; k >= 0; --k) {
    SymbolField sk = principal_symbol(k, rest);
    if (sk.is_zero()) continue;
    rest -= quantize(sk, cfg);
    out[static_cast<std::size_t>(k)] = std::move(sk);
  }
  if (!rest.is_zero()) throw std::logic_error("symbol map peeling left a remainder");
  return out;
}

}  // namespace sq
