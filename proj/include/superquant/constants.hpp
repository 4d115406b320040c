#ifndef SUPERQUANT_CONSTANTS_HPP
#define SUPERQUANT_CONSTANTS_HPP

#include "superquant/rational.hpp"
#include "superquant/signature.hpp"

#include <optional>
#include <vector>

namespace sq {

/// Casimir eigenvalue on symbols of degree k and weight delta:
///   (p-q)/2 delta^2 - (2k+p-q)/2 delta + k(k+p-q)/(p-q+1).
Rational alpha(int k, const Rational& delta, const Signature& sig);

/// Eigenvalue 2k(k-1) of the Kaplansky Casimir when q = p + 1.
Rational psl_eigenvalue(int k);

/// c_k = {(2k-l+p-q)/(p-q+1) : l = 1..k}, in increasing order of l.
std::vector<Rational> critical_values(const Signature& sig, int k);

/// Sorted union of c_1, ..., c_kmax without duplicates.
std::vector<Rational> critical_set(const Signature& sig, int kmax);

/// Smallest l with delta equal to the l-th member of c_k.
std::optional<int> critical_member(const Signature& sig, int k, const Rational& delta);

/// True when alpha(k, delta) = alpha(l, delta) for some l < k <= kmax.
bool is_critical(const Signature& sig, const Rational& delta, int kmax);

/// C_{k,r} = prod_{j=1}^r ((p-q+1) lambda + k - j)
///           / (r! prod_{j=1}^r (p-q+2k-j-(p-q+1) delta)),  C_{k,0} = 1.
/// Throws CriticalWeightError naming j when a denominator factor vanishes.
Rational coeff(int k, int r, const Rational& lambda, const Rational& delta, const Signature& sig);

/// The same product with p - q = -1 (lambda and delta drop out):
/// prod (k-j) / (r! prod (2k-1-j)). Defined for k != 1.
Rational psl_coeff(int k, int r);

}  // namespace sq

#endif
