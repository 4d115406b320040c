#include "superquant/constants.hpp"

#include "superquant/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sq {

namespace {

void require_sl(const Signature& sig) {
  if (sig.is_psl_case()) throw PreconditionError("p - q + 1 = 0: the generic formulas are undefined for " + sig.to_string());
}

void check_degree(int k) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
}

Rational coeff_product(int k, int r, const Rational& lambda, const Rational& delta, int superdim) {
  check_degree(k);
  if (r < 0 || r > k) throw std::invalid_argument("step r must satisfy 0 <= r <= k");
  Rational num = 1;
  Rational den = 1;
  for (int j = 1; j <= r; ++j) {
    num *= Rational(superdim + 1) * lambda + k - j;
    const Rational factor = Rational(superdim + 2 * k - j) - Rational(superdim + 1) * delta;
    if (factor == 0) throw CriticalWeightError(k, j, delta);
    den *= factor * j;
  }
  return num / den;
}

}  // namespace

Rational alpha(int k, const Rational& delta, const Signature& sig) {
  require_sl(sig);
  check_degree(k);
  const int n = sig.superdimension();
  return ratio(n, 2) * delta * delta - ratio(2 * k + n, 2) * delta + ratio(k * (k + n), n + 1);
}

Rational psl_eigenvalue(int k) {
  check_degree(k);
  return Rational(2 * k * (k - 1));
}

std::vector<Rational> critical_values(const Signature& sig, int k) {
  require_sl(sig);
  check_degree(k);
  const int n = sig.superdimension();
  std::vector<Rational> out;
  for (int l = 1; l <= k; ++l) out.push_back(ratio(2 * k - l + n, n + 1));
  return out;
}

std::vector<Rational> critical_set(const Signature& sig, int kmax) {
  std::vector<Rational> out;
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& v : critical_values(sig, k)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> critical_member(const Signature& sig, int k, const Rational& delta) {
  const auto values = critical_values(sig, k);
  for (std::size_t l = 0; l < values.size(); ++l) {
    if (values[l] == delta) return static_cast<int>(l) + 1;
  }
  return std::nullopt;
}

bool is_critical(const Signature& sig, const Rational& delta, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    const Rational a = alpha(k, delta, sig);
    for (int l = 0; l < k; ++l) {
      if (alpha(l, delta, sig) == a) return true;
    }
  }
  return false;
}

Rational coeff(int k, int r, const Rational& lambda, const Rational& delta, const Signature& sig) {
  require_sl(sig);
  return coeff_product(k, r, lambda, delta, sig.superdimension());
}

Rational psl_coeff(int k, int r) {
  if (k == 1 && r == 1) throw CriticalWeightError(1, 1, Rational(0));
  return coeff_product(k, r, Rational(0), Rational(0), -1);
}

}  // namespace sq
