#ifndef SUPERQUANT_MONOMIAL_HPP
#define SUPERQUANT_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace sq {

/// Canonical Grassmann monomial x^a theta^I with the odd indices of I in
/// ascending order. The same shape indexes symmetric tensors e^a e^I and
/// derivative multi-indices d^a d^I, so it doubles as a multi-index.
struct Monomial {
  std::vector<int> even;     ///< p exponents
  std::uint32_t odd = 0;     ///< bit j <-> odd generator j (0-based)

  Monomial() = default;
  explicit Monomial(int p) : even(static_cast<std::size_t>(p), 0) {}
  Monomial(std::vector<int> e, std::uint32_t o) : even(std::move(e)), odd(o) {}

  int parity() const { return std::popcount(odd) & 1; }
  int odd_degree() const { return std::popcount(odd); }
  int even_degree() const;
  int degree() const { return even_degree() + odd_degree(); }
  bool has_odd(int j) const { return (odd >> j) & 1U; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// (-1)^{#(i in a, j in b, i > j)}: the sign of sorting theta^a theta^b.
int merge_sign(std::uint32_t a, std::uint32_t b);

/// Number of set bits of mask strictly below bit j.
inline int bits_below(std::uint32_t mask, int j) {
  return std::popcount(mask & ((1U << j) - 1U));
}

/// Product of canonical monomials; sign == 0 when an odd generator repeats.
struct SignedMonomial {
  Monomial monomial;
  int sign = 0;
};

SignedMonomial multiply(const Monomial& a, const Monomial& b);

/// Left derivative with respect to generator `index` (0-based over p+q),
/// returning the multiplicity (even) or the sign (odd) and the reduced
/// monomial. Factor 0 when the generator is absent.
struct DerivedMonomial {
  Monomial monomial;
  int factor = 0;
};

DerivedMonomial left_derivative(const Monomial& m, int index, int p);

/// Left multiplication by generator `index`.
SignedMonomial left_multiply(const Monomial& m, int index, int p);

/// Single generator as a monomial.
Monomial generator(int index, int p);

/// All monomials of total degree exactly `degree` in p even and q odd
/// generators.
std::vector<Monomial> monomials_of_degree(int p, int q, int degree);

}  // namespace sq

#endif
