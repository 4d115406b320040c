#include "superquant/forms.hpp"

#include "superquant/errors.hpp"
#include "superquant/realization.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace sq {

namespace {

Matrix iota(const PglElement& a) {
  const Signature& sig = a.signature();
  const Rational denom = sig.p() + 1 - sig.q();
  Matrix m = a.matrix();
  const Rational shift = supertrace(sig, m) / denom;
  for (int i = 0; i < m.rows(); ++i) m(i, i) -= shift;
  return m;
}

void require_sl(const Signature& sig) {
  if (sig.is_psl_case()) throw PreconditionError("the Killing form of pgl(p+1|p+1) is degenerate (q = p + 1)");
}

void require_psl(const Signature& sig) {
  if (!sig.is_psl_case()) throw PreconditionError("the Kaplansky form is used only when q = p + 1");
}

}  // namespace

Rational killing_form(const PglElement& a, const PglElement& b) {
  require_same(a.signature(), b.signature());
  const Signature& sig = a.signature();
  require_sl(sig);
  return Rational(2 * (sig.p() + 1 - sig.q())) * supertrace(sig, iota(a) * iota(b));
}

std::vector<Rational> graded_coordinates(const PglElement& a) {
  const GradedElement h = a.graded();
  const int n = a.signature().dim();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n * n + 2 * n));
  for (const auto& v : h.minus) out.push_back(v);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(h.zero(i, j));
  }
  for (const auto& v : h.plus) out.push_back(v);
  return out;
}

std::vector<int> graded_coordinate_parities(const Signature& sig) {
  const int n = sig.dim();
  std::vector<int> out;
  for (int r = 0; r < n; ++r) out.push_back(sig.parity(r));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back((sig.parity(i) + sig.parity(j)) & 1);
  }
  for (int r = 0; r < n; ++r) out.push_back(sig.parity(r));
  return out;
}

std::vector<PglElement> graded_basis(const Signature& sig) {
  const int n = sig.dim();
  std::vector<PglElement> out;
  for (int r = 0; r < n; ++r) out.push_back(PglElement::from_graded(GradedElement::translation(sig, r)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(PglElement::from_graded(GradedElement::elementary(sig, i, j)));
  }
  for (int r = 0; r < n; ++r) out.push_back(PglElement::from_graded(GradedElement::dual_row(sig, r)));
  return out;
}

Matrix adjoint_matrix(const PglElement& a) {
  const auto basis = graded_basis(a.signature());
  const int dim = static_cast<int>(basis.size());
  Matrix ad(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const auto coords = graded_coordinates(bracket(a, basis[static_cast<std::size_t>(k)]));
    for (int r = 0; r < dim; ++r) ad(r, k) = coords[static_cast<std::size_t>(r)];
  }
  return ad;
}

Rational killing_form_adjoint(const PglElement& a, const PglElement& b) {
  require_same(a.signature(), b.signature());
  const Matrix prod = adjoint_matrix(a) * adjoint_matrix(b);
  const auto parities = graded_coordinate_parities(a.signature());
  Rational s = 0;
  for (int i = 0; i < prod.rows(); ++i) {
    if (parities[static_cast<std::size_t>(i)] == 0) {
      s += prod(i, i);
    } else {
      s -= prod(i, i);
    }
  }
  return s;
}

Rational kaplansky_form(const PglElement& a, const PglElement& b) {
  require_same(a.signature(), b.signature());
  require_psl(a.signature());
  const Signature& sig = a.signature();
  if (supertrace(sig, a.matrix()) != 0 || supertrace(sig, b.matrix()) != 0) {
    throw PreconditionError("Kaplansky form is defined on psl(p+1|p+1) only");
  }
  return supertrace(sig, a.matrix() * b.matrix());
}

Rational evaluate_form(Form form, const PglElement& a, const PglElement& b) {
  return form == Form::killing ? killing_form(a, b) : kaplansky_form(a, b);
}

GradedElement scaled_dual_row(const Signature& sig, int r) {
  const int denom = 2 * (sig.p() - sig.q() + 1);
  if (denom == 0) throw PreconditionError("eps^r is undefined when q = p + 1");
  const Rational scale = ratio(sig.parity(r) ? -1 : 1, denom);
  return scale * GradedElement::dual_row(sig, r);
}

std::vector<GradedElement> g0_basis(const Signature& sig, G0Basis choice) {
  const int n = sig.dim();
  std::vector<GradedElement> out;
  auto diag = [&sig, n](const std::vector<std::pair<int, Rational>>& entries) {
    Matrix A(n, n);
    for (const auto& [i, v] : entries) A(i, i) += v;
    return GradedElement::linear(sig, A);
  };
  auto str_sign = [&sig](int i) { return Rational(sig.parity(i) ? -1 : 1); };
  const bool psl = sig.is_psl_case();
  if (!psl && choice == G0Basis::elementary) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out.push_back(GradedElement::elementary(sig, i, j));
    }
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) out.push_back(GradedElement::elementary(sig, i, j));
    }
  }
  if (psl) {
    // Supertraceless diagonals: (-1)^{|i|} E_ii - (-1)^{|m|} E_mm.
    for (int i = 0; i + 1 < n; ++i) {
      const int m = choice == G0Basis::elementary ? i + 1 : n - 1;
      out.push_back(diag({{i, str_sign(i)}, {m, -str_sign(m)}}));
    }
    return out;
  }
  if (sig.p() != sig.q()) {
    for (int i = 0; i + 1 < n; ++i) out.push_back(diag({{i, str_sign(i)}, {i + 1, -str_sign(i + 1)}}));
    out.push_back(GradedElement::euler(sig));
    return out;
  }
  // p == q: the Euler element is supertraceless, so use partial diagonal sums.
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, Rational>> entries;
    for (int k = 0; k <= i; ++k) entries.emplace_back(k, Rational(1));
    out.push_back(diag(entries));
  }
  return out;
}

DualBasisPair build_dual_basis(const Signature& sig, G0Basis choice) {
  const bool psl = sig.is_psl_case();
  const AlgebraKind kind = psl ? AlgebraKind::psl : AlgebraKind::pgl;
  DualBasisPair pair;
  pair.form = psl ? Form::kaplansky : Form::killing;
  const int n = sig.dim();
  auto sign = [&sig](int r) { return Rational(sig.parity(r) ? -1 : 1); };

  // g_{-1}
  for (int r = 0; r < n; ++r) {
    pair.basis.push_back(PglElement::from_graded(GradedElement::translation(sig, r), kind));
    const GradedElement d = psl ? sign(r) * GradedElement::dual_row(sig, r) : scaled_dual_row(sig, r);
    pair.dual.push_back(PglElement::from_graded(d, kind));
  }
  // g_0 via Gram inversion
  std::vector<PglElement> g0;
  for (const auto& g : g0_basis(sig, choice)) g0.push_back(PglElement::from_graded(g, kind));
  const int m = static_cast<int>(g0.size());
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) gram(i, j) = evaluate_form(pair.form, g0[static_cast<std::size_t>(i)], g0[static_cast<std::size_t>(j)]);
  }
  const auto inv = inverse(gram);
  if (!inv) throw PreconditionError("invariant form is degenerate on the chosen g_0 basis");
  for (int j = 0; j < m; ++j) {
    pair.basis.push_back(g0[static_cast<std::size_t>(j)]);
    Matrix acc(n + 1, n + 1);
    for (int k = 0; k < m; ++k) {
      if ((*inv)(k, j) != 0) acc += (*inv)(k, j) * g0[static_cast<std::size_t>(k)].matrix();
    }
    pair.dual.push_back(PglElement(sig, acc, kind));
  }
  // g_1
  for (int t = 0; t < n; ++t) {
    const GradedElement b = psl ? sign(t) * GradedElement::dual_row(sig, t) : scaled_dual_row(sig, t);
    pair.basis.push_back(PglElement::from_graded(b, kind));
    pair.dual.push_back(PglElement::from_graded(sign(t) * GradedElement::translation(sig, t), kind));
  }
  for (const auto& u : pair.basis) pair.basis_fields.push_back(realize(u));
  for (const auto& u : pair.dual) pair.dual_fields.push_back(realize(u));
  return pair;
}

const DualBasisPair& dual_basis(const Signature& sig, G0Basis choice) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<DualBasisPair>> cache;
  const auto key = std::make_tuple(sig.p(), sig.q(), static_cast<int>(choice));
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<DualBasisPair>(build_dual_basis(sig, choice));
  return *slot;
}

}  // namespace sq
