#include "superquant/geometry.hpp"

#include "superquant/errors.hpp"

namespace sq {

namespace {

SymbolField lie_symbol_homogeneous(const VectorField& X, int px, const SymbolField& S) {
  const Signature& sig = X.signature();
  const int n = sig.dim();
  const int p = sig.p();
  SymbolField out(sig, S.weight());

  // J_i^j = (-1)^{|y^i||X| + 1} d_i X^j
  std::vector<std::vector<SuperPolynomial>> J(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const bool negate = ((sig.parity(i) * px + 1) & 1) != 0;
    for (int j = 0; j < n; ++j) {
      SuperPolynomial d = partial(i, X.component(j));
      if (negate) d *= Rational(-1);
      J[static_cast<std::size_t>(i)].push_back(std::move(d));
    }
  }
  // Density part: -delta str(e^i_j) = -delta delta_ij (-1)^{|i|}.
  SuperPolynomial density(sig);
  if (S.weight() != 0) {
    for (int i = 0; i < n; ++i) {
      const SuperPolynomial& Jii = J[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      if (sig.parity(i) == 0) {
        density -= Jii;
      } else {
        density += Jii;
      }
    }
    density *= S.weight();
  }

  for (const auto& [v, f] : S.terms()) {
    out.add(v, X.apply(f));
    for (const auto& [m, c] : f.terms()) {
      const Rational sc = ((px * m.parity()) & 1) ? Rational(-c) : c;
      if (!density.is_zero()) out.add(v, multiply_left(m, sc, density));
      for (int i = 0; i < n; ++i) {
        const DerivedMonomial dv = left_derivative(v, i, p);
        if (dv.factor == 0) continue;
        for (int j = 0; j < n; ++j) {
          const SuperPolynomial& Jij = J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (Jij.is_zero()) continue;
          const SignedMonomial w = left_multiply(dv.monomial, j, p);
          if (w.sign == 0) continue;
          out.add(w.monomial, multiply_left(m, sc * (dv.factor * w.sign), Jij));
        }
      }
    }
  }
  return out;
}

}  // namespace

SymbolField lie_symbol(const VectorField& X, const SymbolField& S) {
  require_same(X.signature(), S.signature());
  auto [x0, x1] = X.split_parity();
  SymbolField out(S.signature(), S.weight());
  if (!x0.is_zero()) out += lie_symbol_homogeneous(x0, 0, S);
  if (!x1.is_zero()) out += lie_symbol_homogeneous(x1, 1, S);
  return out;
}

DiffOperator lie_operator(const VectorField& X, const DiffOperator& D) {
  require_same(X.signature(), D.signature());
  auto [x0, x1] = X.split_parity();
  auto [d0, d1] = D.split_parity();
  DiffOperator out(D.signature(), D.source(), D.target());
  const VectorField* xs[2] = {&x0, &x1};
  const DiffOperator* ds[2] = {&d0, &d1};
  for (int a = 0; a < 2; ++a) {
    if (xs[a]->is_zero()) continue;
    const DiffOperator left = DiffOperator::lie_derivative(*xs[a], D.target());
    const DiffOperator right = DiffOperator::lie_derivative(*xs[a], D.source());
    for (int b = 0; b < 2; ++b) {
      if (ds[b]->is_zero()) continue;
      out += compose(left, *ds[b]);
      DiffOperator tail = compose(*ds[b], right);
      if (a * b == 1) {
        out += tail;
      } else {
        out -= tail;
      }
    }
  }
  return out;
}

SymbolField interior(const Covector& h, const SymbolField& S) {
  const Signature& sig = S.signature();
  if (h.size() != static_cast<std::size_t>(sig.dim())) throw std::invalid_argument("covector length must be p+q");
  const int p = sig.p();
  SymbolField out(sig, S.weight());
  for (const auto& [v, f] : S.terms()) {
    for (int j = 0; j < sig.dim(); ++j) {
      const Rational& hj = h[static_cast<std::size_t>(j)];
      if (hj == 0) continue;
      const DerivedMonomial dv = left_derivative(v, j, p);
      if (dv.factor == 0) continue;
      // (-1)^{|h||f|}: the odd part of h passes the coefficient.
      const int ph = sig.parity(j);
      for (const auto& [m, c] : f.terms()) {
        Rational val = c * hj * dv.factor;
        if ((ph * m.parity()) & 1) val = -val;
        out.add_term(dv.monomial, m, val);
      }
    }
  }
  return out;
}

SymbolField divergence(const SymbolField& S) {
  const Signature& sig = S.signature();
  SymbolField out(sig, S.weight());
  for (int j = 0; j < sig.dim(); ++j) {
    SymbolField dS(sig, S.weight());
    for (const auto& [v, f] : S.terms()) dS.add(v, partial(j, f));
    if (dS.is_zero()) continue;
    Covector eps(static_cast<std::size_t>(sig.dim()), Rational(0));
    eps[static_cast<std::size_t>(j)] = sig.parity(j) == 0 ? 1 : -1;
    out += interior(eps, dS);
  }
  return out;
}

DiffOperator affine_quantize(const SymbolField& S, const Rational& lambda) {
  DiffOperator D(S.signature(), lambda, lambda + S.weight());
  for (const auto& [key, f] : S.terms()) D.add(key, f);
  return D;
}

SymbolField affine_symbol(const DiffOperator& D) {
  SymbolField S(D.signature(), D.target() - D.source());
  for (const auto& [key, f] : D.terms()) S.add(key, f);
  return S;
}

SymbolField principal_symbol(int k, const DiffOperator& D) {
  if (D.order() > k) {
    throw PreconditionError("operator of order " + std::to_string(D.order()) + " has no principal symbol of degree " +
                            std::to_string(k));
  }
  return affine_symbol(D.order_part(k));
}

DiffOperator affine_quantize_product(const SuperPolynomial& t, const std::vector<Vector>& vectors,
                                     const Rational& lambda, const Rational& delta) {
  const Signature& sig = t.signature();
  const Rational mu = lambda + delta;
  // Constant fields are divergence free, so L_{X^h} = X^h on every weight.
  DiffOperator chain = DiffOperator::identity(sig, lambda);
  for (auto it = vectors.rbegin(); it != vectors.rend(); ++it) {
    VectorField Xh(sig);
    for (int i = 0; i < sig.dim(); ++i) {
      Xh.component(i) = SuperPolynomial::constant(sig, -(*it)[static_cast<std::size_t>(i)]);
    }
    chain = compose(DiffOperator::lie_derivative(Xh, lambda), chain);
  }
  DiffOperator out = compose(DiffOperator::multiplication(t, lambda, mu), chain);
  if (vectors.size() % 2 == 1) out *= Rational(-1);
  return out;
}

SymbolField lie_symbol_affine(const VectorField& X, const SymbolField& S, const Rational& lambda) {
  return affine_symbol(lie_operator(X, affine_quantize(S, lambda)));
}

}  // namespace sq
