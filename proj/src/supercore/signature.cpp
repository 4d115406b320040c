#include "superquant/signature.hpp"

#include <stdexcept>

namespace sq {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature dimensions must be non-negative");
  if (p + q < 1) throw std::invalid_argument("signature must have p + q >= 1");
  if (q > kMaxOdd) throw std::invalid_argument("too many odd coordinates");
}

void Signature::check_index(int index) const {
  if (index < 0 || index >= dim()) {
    throw std::out_of_range("coordinate index " + std::to_string(index + 1) + " out of range for R^" + to_string());
  }
}

std::string Signature::to_string() const { return "{" + std::to_string(p_) + "|" + std::to_string(q_) + "}"; }

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw std::invalid_argument("signature mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace sq
