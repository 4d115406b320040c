#include "superquant/casimir.hpp"

#include "superquant/errors.hpp"
#include "superquant/geometry.hpp"
#include "superquant/realization.hpp"

namespace sq {

CasimirAlgebra default_algebra(const Signature& sig) {
  return sig.is_psl_case() ? CasimirAlgebra::psl : CasimirAlgebra::sl;
}

SymbolField casimir_apply(const SymbolField& S, const Rational& lambda, Rep rep, CasimirAlgebra algebra, G0Basis basis) {
  const Signature& sig = S.signature();
  if (algebra != default_algebra(sig)) {
    throw PreconditionError(algebra == CasimirAlgebra::sl ? "the sl Casimir requires q != p + 1"
                                                          : "the psl Casimir requires q = p + 1");
  }
  const DualBasisPair& pair = dual_basis(sig, basis);
  auto act = [&](const VectorField& X, const SymbolField& T) {
    return rep == Rep::L ? lie_symbol(X, T) : lie_symbol_affine(X, T, lambda);
  };
  SymbolField out(sig, S.weight());
  for (std::size_t i = 0; i < pair.basis_fields.size(); ++i) {
    out += act(pair.dual_fields[i], act(pair.basis_fields[i], S));
  }
  return out;
}

SymbolField gamma_apply(const GradedElement& h, const SymbolField& S, const Rational& lambda) {
  const VectorField X = realize(h);
  return lie_symbol_affine(X, S, lambda) - lie_symbol(X, S);
}

SymbolField gamma_closed_form(const GradedElement& h, const SymbolField& S, const Rational& lambda) {
  const Signature& sig = S.signature();
  require_same(sig, h.signature);
  SymbolField out(sig, S.weight());
  const int kmax = S.max_degree();
  for (int k = 1; k <= kmax; ++k) {
    const SymbolField part = S.component(k);
    if (part.is_zero()) continue;
    const Rational factor = -(lambda * (sig.superdimension() + 1) + (k - 1));
    out += factor * interior(h.plus, part);
  }
  return out;
}

SymbolField n_apply(const SymbolField& S, const Rational& lambda) {
  const Signature& sig = S.signature();
  if (sig.is_psl_case()) throw PreconditionError("N is defined only for q != p + 1");
  SymbolField out(sig, S.weight());
  for (int i = 0; i < sig.dim(); ++i) {
    const SymbolField moved = lie_symbol(realize(GradedElement::translation(sig, i)), S);
    out += gamma_apply(scaled_dual_row(sig, i), moved, lambda);
  }
  return Rational(2) * out;
}

}  // namespace sq
