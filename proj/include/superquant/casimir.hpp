#ifndef SUPERQUANT_CASIMIR_HPP
#define SUPERQUANT_CASIMIR_HPP

#include "superquant/forms.hpp"
#include "superquant/symbol_field.hpp"

namespace sq {

/// L: the natural action on symbols. calL: the action transported from
/// operators, Q_Aff^{-1} o calL_X o Q_Aff.
enum class Rep { L, calL };
enum class CasimirAlgebra { sl, psl };

/// sum_i beta(u'_i) beta(u_i) S over the dual basis pair of the signature.
/// sl requires q != p+1, psl requires q = p+1.
SymbolField casimir_apply(const SymbolField& S, const Rational& lambda, Rep rep, CasimirAlgebra algebra,
                          G0Basis basis = G0Basis::elementary);

/// The algebra matching the signature.
CasimirAlgebra default_algebra(const Signature& sig);

/// gamma(h) S = calL_{X^h} S - L_{X^h} S, from the definition.
SymbolField gamma_apply(const GradedElement& h, const SymbolField& S, const Rational& lambda);

/// -(lambda(p-q+1) + k - 1) i(xi) on each degree k, for h = xi in g_1.
SymbolField gamma_closed_form(const GradedElement& h, const SymbolField& S, const Rational& lambda);

/// N S = 2 sum_i gamma(eps^i) L_{X^{e_i}} S with the scaled eps^i. Requires q != p+1.
SymbolField n_apply(const SymbolField& S, const Rational& lambda);

}  // namespace sq

#endif
