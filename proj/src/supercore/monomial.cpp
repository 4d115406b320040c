#include "superquant/monomial.hpp"

#include <numeric>

namespace sq {

int Monomial::even_degree() const { return std::accumulate(even.begin(), even.end(), 0); }

int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

SignedMonomial multiply(const Monomial& a, const Monomial& b) {
  if (a.odd & b.odd) return {};
  SignedMonomial out;
  out.monomial.even.resize(a.even.size());
  for (std::size_t i = 0; i < a.even.size(); ++i) out.monomial.even[i] = a.even[i] + b.even[i];
  out.monomial.odd = a.odd | b.odd;
  out.sign = merge_sign(a.odd, b.odd);
  return out;
}

DerivedMonomial left_derivative(const Monomial& m, int index, int p) {
  DerivedMonomial out;
  if (index < p) {
    const int e = m.even[static_cast<std::size_t>(index)];
    if (e == 0) return out;
    out.monomial = m;
    out.monomial.even[static_cast<std::size_t>(index)] = e - 1;
    out.factor = e;
    return out;
  }
  const int j = index - p;
  if (!m.has_odd(j)) return out;
  out.monomial = m;
  out.monomial.odd &= ~(1U << j);
  out.factor = (bits_below(m.odd, j) & 1) ? -1 : 1;
  return out;
}

SignedMonomial left_multiply(const Monomial& m, int index, int p) {
  SignedMonomial out;
  if (index < p) {
    out.monomial = m;
    ++out.monomial.even[static_cast<std::size_t>(index)];
    out.sign = 1;
    return out;
  }
  const int j = index - p;
  if (m.has_odd(j)) return out;
  out.monomial = m;
  out.monomial.odd |= 1U << j;
  out.sign = (bits_below(m.odd, j) & 1) ? -1 : 1;
  return out;
}

Monomial generator(int index, int p) {
  Monomial m(p);
  if (index < p) {
    m.even[static_cast<std::size_t>(index)] = 1;
  } else {
    m.odd = 1U << (index - p);
  }
  return m;
}

namespace {
void even_compositions(int p, int degree, std::size_t slot, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (slot + 1 == static_cast<std::size_t>(p)) {
    current[slot] = degree;
    out.push_back(current);
    return;
  }
  for (int d = degree; d >= 0; --d) {
    current[slot] = d;
    even_compositions(p, degree - d, slot + 1, current, out);
  }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int p, int q, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (std::uint32_t mask = 0; mask < (1U << q); ++mask) {
    const int rest = degree - std::popcount(mask);
    if (rest < 0) continue;
    if (p == 0) {
      if (rest == 0) out.emplace_back(std::vector<int>{}, mask);
      continue;
    }
    std::vector<std::vector<int>> evens;
    std::vector<int> current(static_cast<std::size_t>(p), 0);
    even_compositions(p, rest, 0, current, evens);
    for (auto& e : evens) out.emplace_back(std::move(e), mask);
  }
  return out;
}

}  // namespace sq
