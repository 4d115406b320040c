#ifndef SQ_TEST_ORACLES_HPP
#define SQ_TEST_ORACLES_HPP

#include "superquant/geometry.hpp"
#include "superquant/quantizer.hpp"

#include <optional>
#include <string>
#include <vector>

/// Reference computations written independently of the library code paths
/// they are compared against.
namespace oracle {

using sq::DiffOperator;
using sq::Monomial;
using sq::Rational;
using sq::Signature;
using sq::SuperPolynomial;
using sq::SymbolField;

/// Canonical form of an arbitrary product of generators, by bubble sort with
/// one sign per transposition of two odd factors. Sign 0 when an odd factor
/// repeats.
std::pair<int, Monomial> canonical_word(const Signature& sig, std::vector<int> word);

/// Generators of a canonical monomial as a word (evens first, odds ascending).
std::vector<int> word_of(const Signature& sig, const Monomial& m);

/// Left derivative by moving each occurrence of the generator to the front.
SuperPolynomial left_derivative(const Signature& sig, int index, const SuperPolynomial& f);

/// Interior product summed over the positions of each symmetric word.
SymbolField interior(const std::vector<Rational>& h, int h_parity, const SymbolField& S);

/// Q_Aff(t (x) h_1 ... h_k) expanded as (-1)^k t L_{X^{h_1}} o ... o L_{X^{h_k}}
/// from single Lie derivatives and compositions.
DiffOperator product_form(const SuperPolynomial& t, const std::vector<std::vector<Rational>>& vectors,
                          const Rational& lambda, const Rational& delta);

/// Solves the equivariance equations of sum_r c_r Q_Aff(div^r S) under the
/// quadratic generators for c_1..c_k (c_0 = 1). nullopt when the linear system
/// has no unique solution.
std::optional<std::vector<Rational>> solve_coefficients(const Signature& sig, const Rational& lambda,
                                                        const Rational& delta, int k);

/// Generalized binomial a(a-1)...(a-r+1)/r!.
Rational binomial(const Rational& a, int r);

/// binom((n+1) lambda + k - 1, r) / prod_{j=1}^r (n + 2k - j - (n+1) delta).
Rational classical_coefficient(int n, int k, int r, const Rational& lambda, const Rational& delta);

/// Degree-k symbol whose coefficients repeat the key as a coordinate
/// monomial, so every power of the divergence is nonzero.
SymbolField diagonal_symbol(const Signature& sig, int k, const Rational& weight);

/// All degree-k keys with constant coefficient 1, split into parity parts.
std::vector<SymbolField> constant_symbols(const Signature& sig, int k, const Rational& weight);

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

/// One JSON golden per CLI subcommand.
std::vector<GoldenCase> golden_cases();

/// Runs the CLI in-process; returns (exit code, stdout).
std::pair<int, std::string> run_tool(const std::vector<std::string>& args);

std::string golden_path(const std::string& name);
std::string read_file(const std::string& path);

}  // namespace oracle

#endif
