#ifndef SUPERQUANT_REALIZATION_HPP
#define SUPERQUANT_REALIZATION_HPP

#include "superquant/pgl.hpp"
#include "superquant/vector_field.hpp"

namespace sq {

/// Vector field X^h of a graded element:
///   v in g_{-1}:  -sum_i v^i d_i
///   A in g_0:     -sum_ij (-1)^{|j|(|i|+|j|)} A^i_j y^j d_i
///   xi in g_1:    sum_j xi_j y^j (-1)^{|j|} E
VectorField realize(const GradedElement& h);
VectorField realize(const PglElement& a);

/// The same realization read off the full (p+1+q) matrix B without passing
/// through the grading:
///   -( sum_{i,j>=1} (-1)^{|j|(|i|+|j|)} B^i_j y^j d_i + sum_j B^j_0 d_j
///      - sum_j B^0_j y^j (-1)^{|j|} E - B^0_0 E ).
/// Accepts any representative; the result is independent of B -> B + c Id.
VectorField realize_matrix(const Signature& sig, const Matrix& B);

}  // namespace sq

#endif
