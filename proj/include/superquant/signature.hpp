#ifndef SUPERQUANT_SIGNATURE_HPP
#define SUPERQUANT_SIGNATURE_HPP

#include <string>

namespace sq {

/// Dimension p|q of the superspace R^{p|q}. Coordinates are indexed from 0:
/// indices [0, p) are the even x's, [p, p+q) the odd theta's.
class Signature {
 public:
  static constexpr int kMaxOdd = 30;

  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  int superdimension() const { return p_ - q_; }
  int parity(int index) const { return index < p_ ? 0 : 1; }

  /// q == p + 1, where pgl(p+1|q) is not isomorphic to sl(p+1|q).
  bool is_psl_case() const { return q_ == p_ + 1; }

  void check_index(int index) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

void require_same(const Signature& a, const Signature& b);

}  // namespace sq

#endif
