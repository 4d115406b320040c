#ifndef SUPERQUANT_FORMS_HPP
#define SUPERQUANT_FORMS_HPP

#include "superquant/pgl.hpp"
#include "superquant/vector_field.hpp"

#include <vector>

namespace sq {

enum class Form { killing, kaplansky };

/// Choice of basis for the g_0 block.
///  - elementary: all E_ij of gl(p|q) (sl case); off-diagonal E_ij plus
///    consecutive supertraceless diagonals (psl case, g_0 = sl(p|p+1)).
///  - alternate: sl(p|q) basis plus the Euler element when p != q; partial
///    diagonal sums when p == q; diagonals anchored at the last index (psl).
enum class G0Basis { elementary, alternate };

/// Killing form via the closed form 2(p+1-q) str(iota(A) iota(B)) with
/// iota(A) = A - str(A)/(p+1-q) Id. Requires q != p+1.
Rational killing_form(const PglElement& a, const PglElement& b);

/// Killing form computed as str(ad(a) ad(b)) over the graded basis.
Rational killing_form_adjoint(const PglElement& a, const PglElement& b);

/// Kaplansky form str(AB) on supertraceless representatives (q = p+1).
Rational kaplansky_form(const PglElement& a, const PglElement& b);

/// Coordinates of a class in the basis (e_r, E_ij row-major, eps^r).
std::vector<Rational> graded_coordinates(const PglElement& a);
/// Parity of each graded coordinate.
std::vector<int> graded_coordinate_parities(const Signature& sig);
/// The basis (e_r, E_ij, eps^r) of pgl(p+1|q).
std::vector<PglElement> graded_basis(const Signature& sig);
/// ad(a) in graded coordinates.
Matrix adjoint_matrix(const PglElement& a);

/// Basis of g_0 used by the dual-basis construction.
std::vector<GradedElement> g0_basis(const Signature& sig, G0Basis choice);

/// Homogeneous basis u_i with form-dual u'_j: form(u_i, u'_j) = delta_ij.
struct DualBasisPair {
  Form form;
  std::vector<PglElement> basis;
  std::vector<PglElement> dual;
  std::vector<VectorField> basis_fields;  ///< X^{u_i}
  std::vector<VectorField> dual_fields;   ///< X^{u'_i}
};

/// Killing duals for q != p+1, Kaplansky duals on psl(p+1|p+1) for q = p+1.
/// g_{-1}/g_1 duals are the explicit ones ((eps^r, (-1)^{|t|} e_t) and
/// ((-1)^{|i|} eps^i, (-1)^{|i|} e_i)); g_0 duals come from inverting the
/// exact Gram matrix. Memoized per (signature, basis choice); thread safe.
const DualBasisPair& dual_basis(const Signature& sig, G0Basis choice = G0Basis::elementary);

/// Same construction without the cache.
DualBasisPair build_dual_basis(const Signature& sig, G0Basis choice);

/// Evaluates the pair's form.
Rational evaluate_form(Form form, const PglElement& a, const PglElement& b);

/// eps^r scaled: (-1)^{|r|} / (2(p-q+1)) eps^r.
GradedElement scaled_dual_row(const Signature& sig, int r);

}  // namespace sq

#endif
