#ifndef SUPERQUANT_PGL_HPP
#define SUPERQUANT_PGL_HPP

#include "superquant/geometry.hpp"
#include "superquant/matrix.hpp"
#include "superquant/super_polynomial.hpp"

#include <string>
#include <utility>

namespace sq {

enum class AlgebraKind { pgl, psl };

/// Element of g_{-1} + g_0 + g_1 = R^{p|q} + gl(p|q) + (R^{p|q})^*.
struct GradedElement {
  explicit GradedElement(Signature signature);

  /// e_r in g_{-1}
  static GradedElement translation(Signature signature, int r);
  /// Elementary matrix E_ij in g_0 (entry 1 at row i, column j).
  static GradedElement elementary(Signature signature, int i, int j);
  static GradedElement linear(Signature signature, Matrix A);
  /// eps^r in g_1
  static GradedElement dual_row(Signature signature, int r);
  static GradedElement quadratic(Signature signature, Covector xi);
  /// -Id in g_0; realizes to the Euler field.
  static GradedElement euler(Signature signature);

  Parity parity() const;

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator*=(const Rational& s);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;

  Signature signature;
  Vector minus;   ///< h in g_{-1}
  Matrix zero;    ///< A - a Id in g_0
  Covector plus;  ///< xi in g_1
};

/// Class [B] of a (p+1+q)-square supermatrix modulo R Id. Index 0 and 1..p are
/// even, p+1..p+q odd. The stored representative has B(0,0) = 0.
class PglElement {
 public:
  PglElement(Signature signature, const Matrix& representative, AlgebraKind kind = AlgebraKind::pgl);

  static PglElement from_graded(const GradedElement& h, AlgebraKind kind = AlgebraKind::pgl);

  const Signature& signature() const { return signature_; }
  AlgebraKind kind() const { return kind_; }
  const Matrix& matrix() const { return matrix_; }

  /// The grading isomorphism j: [[a, xi], [h, A]] -> (h, A - a Id, xi).
  GradedElement graded() const;

  Parity parity() const;
  std::pair<PglElement, PglElement> split_parity() const;

  PglElement& operator+=(const PglElement& other);
  PglElement& operator-=(const PglElement& other);
  PglElement& operator*=(const Rational& s);
  friend PglElement operator+(PglElement a, const PglElement& b) { return a += b; }
  friend PglElement operator-(PglElement a, const PglElement& b) { return a -= b; }
  friend PglElement operator*(const Rational& s, PglElement a) { return a *= s; }

  friend bool operator==(const PglElement& a, const PglElement& b) {
    return a.signature_ == b.signature_ && a.matrix_ == b.matrix_;
  }

 private:
  void normalize();

  Signature signature_;
  Matrix matrix_;
  AlgebraKind kind_;
};

/// Parity of row/column index of the (p+1+q) supermatrix.
inline int block_parity(const Signature& sig, int index) { return index <= sig.p() ? 0 : 1; }

/// Supertrace of a (p+1+q)-square supermatrix.
Rational supertrace(const Signature& sig, const Matrix& m);
/// Supertrace of a (p+q)-square supermatrix in gl(p|q).
Rational supertrace_small(const Signature& sig, const Matrix& m);

/// [a, b] = ab - (-1)^{|a||b|} ba on homogeneous parts, modulo R Id.
PglElement bracket(const PglElement& a, const PglElement& b);

/// Euler element [diag(1, 0, ..., 0)].
PglElement euler_element(Signature signature, AlgebraKind kind = AlgebraKind::pgl);

std::string to_string(const PglElement& a);

}  // namespace sq

#endif
