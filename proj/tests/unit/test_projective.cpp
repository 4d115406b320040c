#include <doctest.h>

#include "oracles.hpp"
#include "superquant/casimir.hpp"
#include "superquant/constants.hpp"
#include "superquant/errors.hpp"
#include "superquant/expression.hpp"
#include "superquant/realization.hpp"
#include "superquant/sampling.hpp"
#include "superquant/verifier.hpp"

using namespace sq;

namespace {

const Signature kDesk[] = {Signature(1, 1), Signature(2, 1), Signature(1, 2),
                           Signature(2, 2), Signature(3, 2), Signature(2, 3)};
const Signature kSl[] = {Signature(1, 0), Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(0, 2)};

Matrix random_matrix(SampleGenerator& gen, int n) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = (r + c) % 3 == 0 ? Rational(0) : gen.rational();
  }
  return m;
}

Matrix supertraceless(const Signature& sig, Matrix m) {
  // Move the supertrace into entry (0,0), an even slot.
  m(0, 0) -= supertrace(sig, m);
  return m;
}

std::vector<VectorField> all_generators(const Signature& sig) {
  std::vector<VectorField> out;
  for (const auto& b : graded_basis(sig)) out.push_back(realize(b));
  return out;
}

}  // namespace

TEST_SUITE("projective") {

TEST_CASE("grading by the Euler element") {
  for (const auto& sig : kDesk) {
    const PglElement E = euler_element(sig);
    for (int r = 0; r < sig.dim(); ++r) {
      const auto v = PglElement::from_graded(GradedElement::translation(sig, r));
      const auto xi = PglElement::from_graded(GradedElement::dual_row(sig, r));
      CHECK(bracket(E, v) == Rational(-1) * v);
      CHECK(bracket(E, xi) == xi);
    }
  }
}

TEST_CASE("crochet identity") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(3, 2), Signature(1, 0)}) {
    PglElement sum(sig, Matrix(sig.dim() + 1, sig.dim() + 1));
    for (int r = 0; r < sig.dim(); ++r) {
      const auto e = PglElement::from_graded(GradedElement::translation(sig, r));
      const auto eps = PglElement::from_graded(scaled_dual_row(sig, r));
      sum += Rational(sig.parity(r) ? -1 : 1) * bracket(e, eps);
    }
    CHECK(sum == ratio(-1, 2) * euler_element(sig));
  }
}

TEST_CASE("graded round trip and normalization") {
  for (const auto& sig : kDesk) {
    SampleGenerator gen(sig, 21);
    const Matrix B = random_matrix(gen, sig.dim() + 1);
    const PglElement a(sig, B);
    CHECK(a.matrix()(0, 0) == 0);
    CHECK(PglElement::from_graded(a.graded()) == a);
    CHECK(PglElement(sig, B + ratio(5, 3) * Matrix::identity(sig.dim() + 1)) == a);
  }
  CHECK_THROWS_AS(PglElement(Signature(1, 1), Matrix::identity(3), AlgebraKind::psl), PreconditionError);
  const Signature psl(1, 2);
  Matrix E11(4, 4);
  E11(1, 1) = 1;
  CHECK_THROWS_AS(PglElement(psl, E11, AlgebraKind::psl), PreconditionError);
}

TEST_CASE("realization examples") {
  const Signature sig(2, 1);
  CHECK(realize(GradedElement::translation(sig, 0)) == Rational(-1) * VectorField::partial(sig, 0));
  CHECK(realize(GradedElement::euler(sig)) == VectorField::euler(sig));
  CHECK(realize(GradedElement::dual_row(sig, 0)) ==
        SuperPolynomial::coordinate(sig, 0) * VectorField::euler(sig));
  CHECK(realize(euler_element(sig)) == VectorField::euler(sig));
}

TEST_CASE("realization from the full matrix formula") {
  for (const auto& sig : kDesk) {
    SampleGenerator gen(sig, 22);
    for (int n = 0; n < 10; ++n) {
      const Matrix B = random_matrix(gen, sig.dim() + 1);
      CHECK(realize_matrix(sig, B) == realize(PglElement(sig, B)));
      CHECK(realize_matrix(sig, B + ratio(2, 3) * Matrix::identity(sig.dim() + 1)) == realize_matrix(sig, B));
    }
  }
}

TEST_CASE("realization is a homomorphism") {
  for (const auto& sig : kDesk) {
    const auto report = check_homomorphism(sig);
    CHECK_MESSAGE(report.passed(), to_text(report));
  }
}

TEST_CASE("Killing form: closed form, adjoint supertrace and str(AB)") {
  for (const auto& sig : {Signature(1, 0), Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(3, 2)}) {
    SampleGenerator gen(sig, 23);
    for (int n = 0; n < 6; ++n) {
      const Matrix A = supertraceless(sig, random_matrix(gen, sig.dim() + 1));
      const Matrix B = supertraceless(sig, random_matrix(gen, sig.dim() + 1));
      const PglElement a(sig, A);
      const PglElement b(sig, B);
      const Rational expected = Rational(2 * (sig.p() + 1 - sig.q())) * supertrace(sig, A * B);
      CHECK(killing_form(a, b) == expected);
      CHECK(killing_form_adjoint(a, b) == expected);
    }
  }
  CHECK_THROWS_AS(killing_form(euler_element(Signature(1, 2)), euler_element(Signature(1, 2))), PreconditionError);
}

TEST_CASE("dual bases are exact") {
  for (const auto& sig : kDesk) {
    for (auto choice : {G0Basis::elementary, G0Basis::alternate}) {
      const auto& pair = dual_basis(sig, choice);
      REQUIRE(pair.basis.size() == pair.dual.size());
      CHECK(pair.form == (sig.is_psl_case() ? Form::kaplansky : Form::killing));
      const std::size_t n = pair.basis.size();
      const std::size_t expected = sig.is_psl_case() ? static_cast<std::size_t>((sig.dim() + 1) * (sig.dim() + 1) - 2)
                                                     : static_cast<std::size_t>((sig.dim() + 1) * (sig.dim() + 1) - 1);
      CHECK(n == expected);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(evaluate_form(pair.form, pair.basis[i], pair.dual[j]) == Rational(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("Casimir does not depend on the g_0 basis") {
  for (const auto& sig : kDesk) {
    SampleGenerator gen(sig, 24);
    for (int k = 0; k <= 2; ++k) {
      const auto S = gen.symbol(k, ratio(1, 5));
      for (auto rep : {Rep::L, Rep::calL}) {
        CHECK(casimir_apply(S, ratio(1, 3), rep, default_algebra(sig), G0Basis::elementary) ==
              casimir_apply(S, ratio(1, 3), rep, default_algebra(sig), G0Basis::alternate));
      }
    }
  }
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(alpha(0, 0, Signature(2, 1)) == 0);
  CHECK(alpha(1, 0, Signature(2, 1)) == 1);
  for (const auto& sig : kSl) {
    for (int k = 0; k <= 3; ++k) {
      for (const Rational& delta : {Rational(0), ratio(2, 7), ratio(-3, 2)}) {
        for (const auto& S : oracle::constant_symbols(sig, k, delta)) {
          if (S.is_zero()) continue;
          CHECK(casimir_apply(S, 0, Rep::L, CasimirAlgebra::sl) == alpha(k, delta, sig) * S);
        }
      }
    }
  }
  for (const auto& sig : {Signature(1, 2), Signature(0, 1)}) {
    for (int k = 0; k <= 3; ++k) {
      for (const auto& S : oracle::constant_symbols(sig, k, ratio(1, 5))) {
        if (S.is_zero()) continue;
        CHECK(casimir_apply(S, 0, Rep::L, CasimirAlgebra::psl) == psl_eigenvalue(k) * S);
      }
    }
  }
  CHECK(psl_eigenvalue(0) == 0);
  CHECK(psl_eigenvalue(1) == 0);
  CHECK(psl_eigenvalue(2) == 4);
  CHECK_THROWS_AS(casimir_apply(SymbolField(Signature(1, 2), 0), 0, Rep::L, CasimirAlgebra::sl), PreconditionError);
  CHECK_THROWS_AS(casimir_apply(SymbolField(Signature(1, 1), 0), 0, Rep::L, CasimirAlgebra::psl), PreconditionError);
  CHECK_THROWS_AS(alpha(1, 0, Signature(1, 2)), PreconditionError);
}

TEST_CASE("Casimir operators commute with their representations") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 1), Signature(1, 2)}) {
    SampleGenerator gen(sig, 25);
    const Rational lambda = ratio(1, 3);
    for (int k = 0; k <= 2; ++k) {
      const auto S = gen.symbol(k, ratio(1, 5));
      for (const auto& X : all_generators(sig)) {
        CHECK(casimir_apply(lie_symbol(X, S), lambda, Rep::L, default_algebra(sig)) ==
              lie_symbol(X, casimir_apply(S, lambda, Rep::L, default_algebra(sig))));
        CHECK(casimir_apply(lie_symbol_affine(X, S, lambda), lambda, Rep::calL, default_algebra(sig)) ==
              lie_symbol_affine(X, casimir_apply(S, lambda, Rep::calL, default_algebra(sig)), lambda));
      }
    }
  }
}

TEST_CASE("gamma vanishes on the affine part") {
  for (const auto& sig : kDesk) {
    SampleGenerator gen(sig, 26);
    const auto S = gen.symbol(2, ratio(1, 5));
    for (int r = 0; r < sig.dim(); ++r) CHECK(gamma_apply(GradedElement::translation(sig, r), S, ratio(1, 2)).is_zero());
    for (int i = 0; i < sig.dim(); ++i) {
      for (int j = 0; j < sig.dim(); ++j) CHECK(gamma_apply(GradedElement::elementary(sig, i, j), S, ratio(1, 2)).is_zero());
    }
  }
}

TEST_CASE("gamma closed form on constant symbols for several weights") {
  for (const auto& sig : kDesk) {
    for (const Rational& delta : {Rational(0), ratio(1, 5), Rational(3)}) {
      for (const Rational& lambda : {Rational(0), ratio(1, 2), ratio(-2, 3)}) {
        for (int k = 0; k <= 3; ++k) {
          for (const auto& S : oracle::constant_symbols(sig, k, delta)) {
            for (int r = 0; r < sig.dim(); ++r) {
              const auto h = GradedElement::dual_row(sig, r);
              const auto g = gamma_apply(h, S, lambda);
              CHECK(g == gamma_closed_form(h, S, lambda));
              // order zero, constant coefficients, parity of h
              for (const auto& [key, f] : g.terms()) CHECK(f.degree() == 0);
              if (!g.is_zero() && S.parity() != Parity::mixed) {
                const int expected = ((S.parity() == Parity::odd ? 1 : 0) + sig.parity(r)) % 2;
                CHECK(g.parity() == (expected ? Parity::odd : Parity::even));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("gamma vanishes on degree one when q = p + 1") {
  for (const auto& sig : {Signature(1, 2), Signature(2, 3), Signature(0, 1)}) {
    SampleGenerator gen(sig, 27);
    for (const Rational& lambda : {Rational(0), ratio(1, 2), ratio(-7, 3)}) {
      for (int n = 0; n < 5; ++n) {
        const auto S = gen.symbol(1, ratio(1, 5));
        for (int r = 0; r < sig.dim(); ++r) CHECK(gamma_apply(GradedElement::dual_row(sig, r), S, lambda).is_zero());
      }
    }
  }
}

TEST_CASE("the map N") {
  for (const auto& sig : kSl) {
    SampleGenerator gen(sig, 28);
    const Rational lambda = ratio(1, 2);
    CHECK(n_apply(oracle::constant_symbols(sig, 0, 0)[0], lambda).is_zero());
    for (int k = 0; k <= 3; ++k) {
      const auto S = gen.symbol(k, ratio(1, 5));
      const auto N = n_apply(S, lambda);
      CHECK((N.is_zero() || N.max_degree() == k - 1));
      CHECK(casimir_apply(S, lambda, Rep::calL, CasimirAlgebra::sl) == casimir_apply(S, lambda, Rep::L, CasimirAlgebra::sl) + N);
    }
    // lambda (p - q + 1) = 0 and k = 1
    const auto S1 = gen.symbol(1, ratio(1, 5));
    CHECK(n_apply(S1, 0).is_zero());
  }
  CHECK_THROWS_AS(n_apply(SymbolField(Signature(1, 2), 0), 0), PreconditionError);
}

TEST_CASE("critical sets") {
  CHECK(critical_set(Signature(1, 0), 1) == std::vector<Rational>{Rational(1)});
  CHECK(critical_set(Signature(2, 1), 3) ==
        std::vector<Rational>{Rational(1), ratio(3, 2), Rational(2), ratio(5, 2), Rational(3)});
  // a signature with negative superdimension where 0 is critical
  CHECK(critical_member(Signature(1, 3), 2, 0) == 2);
  CHECK(is_critical(Signature(1, 3), 0, 2));
  for (const auto& sig : kSl) {
    const auto set = critical_set(sig, 3);
    for (const auto& delta : set) CHECK(is_critical(sig, delta, 3));
    for (int a = -12; a <= 12; ++a) {
      for (int b = 1; b <= 4; ++b) {
        const Rational delta = ratio(a, b);
        const bool member = std::find(set.begin(), set.end(), delta) != set.end();
        bool vanishing = false;
        for (int k = 1; k <= 3; ++k) {
          try {
            coeff(k, k, 1, delta, sig);
          } catch (const CriticalWeightError&) {
            vanishing = true;
          }
        }
        CHECK(member == vanishing);
        CHECK(member == is_critical(sig, delta, 3));
      }
    }
  }
  CHECK_THROWS_AS(critical_set(Signature(1, 2), 2), PreconditionError);
}

TEST_CASE("coefficients C_{k,r}") {
  const Signature line(1, 0);
  for (const Rational& lambda : {Rational(0), ratio(1, 3), ratio(-5, 2)}) {
    for (const Rational& delta : {Rational(0), ratio(1, 5), Rational(3)}) {
      CHECK(coeff(1, 1, lambda, delta, line) == lambda / (1 - delta));
      for (int k = 0; k <= 3; ++k) CHECK(coeff(k, 0, lambda, delta, Signature(2, 1)) == 1);
    }
  }
  CHECK(coeff(1, 1, 0, ratio(1, 5), Signature(2, 2)) == 0);
  try {
    coeff(2, 2, 1, ratio(3, 2), Signature(2, 1));
    FAIL("expected a critical weight error");
  } catch (const CriticalWeightError& e) {
    CHECK(e.degree() == 2);
    CHECK(e.index() == 2);
    CHECK(e.delta() == ratio(3, 2));
  }
  CHECK(psl_coeff(2, 1) == ratio(1, 2));
  CHECK(psl_coeff(2, 2) == 0);
  CHECK_THROWS_AS(psl_coeff(1, 1), CriticalWeightError);
}

TEST_CASE("alpha agrees with the brute-force Casimir for random weights") {
  SampleGenerator gen(Signature(2, 1), 29);
  for (const auto& sig : kSl) {
    for (int n = 0; n < 4; ++n) {
      const Rational delta = gen.rational();
      for (int k = 0; k <= 3; ++k) {
        const auto S = oracle::diagonal_symbol(sig, k, delta);
        if (S.is_zero()) continue;
        CHECK(casimir_apply(S, 0, Rep::L, CasimirAlgebra::sl) == alpha(k, delta, sig) * S);
      }
    }
  }
}

}  // TEST_SUITE
