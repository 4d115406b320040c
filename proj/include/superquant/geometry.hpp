#ifndef SUPERQUANT_GEOMETRY_HPP
#define SUPERQUANT_GEOMETRY_HPP

#include "superquant/diff_operator.hpp"
#include "superquant/symbol_field.hpp"
#include "superquant/vector_field.hpp"

#include <vector>

namespace sq {

/// Row vector in (R^{p|q})^*; entries at even (odd) positions form its even
/// (odd) part.
using Covector = std::vector<Rational>;
/// Column vector in R^{p|q}.
using Vector = std::vector<Rational>;

/// Lie derivative of a weighted symmetric tensor field:
///   L_X(f (x) v) = X(f) (x) v + (-1)^{|X||f|} sum_ij f J_i^j (x) rho(e^i_j) v,
///   J_i^j = (-1)^{|y^i||X| + 1} d_i X^j,
/// where rho acts on S^k as a derivation and on the density generator by
/// -delta str. Mixed-parity fields are split.
SymbolField lie_symbol(const VectorField& X, const SymbolField& S);

/// L^mu_X o D - (-1)^{|X||D|} D o L^lambda_X
DiffOperator lie_operator(const VectorField& X, const DiffOperator& D);

/// Interior product i(h): derivation of the symmetric product pairing h with
/// one tensor slot, with parity |h|; kills the density generator.
SymbolField interior(const Covector& h, const SymbolField& S);

/// div S = sum_j (-1)^{|y^j|} i(eps^j) d_{y^j} S
SymbolField divergence(const SymbolField& S);

/// Coefficient-wise bijection f_a (x) e^a <-> f_a d^a. The operator acts
/// F_lambda -> F_{lambda + delta}.
DiffOperator affine_quantize(const SymbolField& S, const Rational& lambda);
/// Total symbol; weight mu - lambda.
SymbolField affine_symbol(const DiffOperator& D);

/// Terms of order exactly k; throws PreconditionError when order(D) > k.
SymbolField principal_symbol(int k, const DiffOperator& D);

/// Product form of the affine quantization of t (x) h_1 v ... v h_k:
/// (-1)^k t L_{X^{h_1}} o ... o L_{X^{h_k}} with X^h = -sum h^i d_i.
DiffOperator affine_quantize_product(const SuperPolynomial& t, const std::vector<Vector>& vectors,
                                     const Rational& lambda, const Rational& delta);

/// The representation transported from operators: Q_Aff^{-1} o calL_X o Q_Aff.
SymbolField lie_symbol_affine(const VectorField& X, const SymbolField& S, const Rational& lambda);

}  // namespace sq

#endif
