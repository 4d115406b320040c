#include <doctest.h>

#include "oracles.hpp"
#include "superquant/casimir.hpp"
#include "superquant/constants.hpp"
#include "superquant/errors.hpp"
#include "superquant/expression.hpp"
#include "superquant/sampling.hpp"
#include "superquant/verifier.hpp"

using namespace sq;

namespace {

const Signature kGeneric[] = {Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(3, 2)};

DiffOperator sum_of_quantized(const std::vector<SymbolField>& parts, const QuantizationConfig& cfg) {
  DiffOperator out(cfg.sig, cfg.lambda, cfg.mu());
  for (const auto& s : parts) out += quantize(s, cfg);
  return out;
}

}  // namespace

TEST_SUITE("quantizer") {

TEST_CASE("degree zero symbols quantize to multiplication") {
  const Signature sig(2, 1);
  const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5));
  const auto f = parse_polynomial(sig, "x1*t1 + 3");
  CHECK(quantize(SymbolField::scalar(f, cfg.delta), cfg) == DiffOperator::multiplication(f, cfg.lambda, cfg.mu()));
}

TEST_CASE("first order on the line") {
  const Signature sig(1, 0);
  SampleGenerator gen(sig, 31);
  for (const Rational& lambda : {Rational(0), ratio(1, 3), ratio(-2, 5)}) {
    for (const Rational& delta : {Rational(0), ratio(1, 5), Rational(3)}) {
      const QuantizationConfig cfg(sig, lambda, delta);
      for (int n = 0; n < 5; ++n) {
        const auto f = gen.polynomial(0, 3);
        const auto g = gen.polynomial(0, 3);
        SymbolField S(sig, delta);
        S.add(generator(0, 1), f);
        const auto expected = f * partial(0, g) + (lambda / (1 - delta)) * (partial(0, f) * g);
        CHECK(quantize(S, cfg).apply(g) == expected);
      }
    }
  }
}

TEST_CASE("lambda = 0 makes degree one affine") {
  for (const auto& sig : kGeneric) {
    SampleGenerator gen(sig, 32);
    const QuantizationConfig cfg(sig, 0, ratio(1, 5));
    for (int n = 0; n < 5; ++n) {
      const auto S = gen.symbol(1, cfg.delta);
      CHECK(quantize(S, cfg) == affine_quantize(S, 0));
    }
  }
}

TEST_CASE("closed form and recursion agree") {
  for (const auto& sig : kGeneric) {
    SampleGenerator gen(sig, 33);
    for (const Rational& lambda : {Rational(0), ratio(1, 3)}) {
      for (const Rational& delta : {Rational(0), ratio(1, 5)}) {
        const QuantizationConfig cfg(sig, lambda, delta);
        for (int k = 0; k <= 3; ++k) {
          const auto S = gen.symbol(k, delta);
          CHECK(quantize(S, cfg) == quantize_recursive(S, cfg));
          const auto lift = recursive_lift(S, cfg);
          CHECK(casimir_apply(lift, lambda, Rep::calL, CasimirAlgebra::sl) == alpha(k, delta, sig) * lift);
          if (k == 0) CHECK(lift == S);
        }
      }
    }
  }
}

TEST_CASE("coefficients agree with the equivariance-equation solver") {
  for (const auto& sig : {Signature(1, 0), Signature(2, 0), Signature(1, 1), Signature(2, 1), Signature(2, 2)}) {
    for (const Rational& lambda : {ratio(1, 3), ratio(-3, 4)}) {
      for (const Rational& delta : {Rational(0), ratio(1, 5)}) {
        for (int k = 1; k <= 3; ++k) {
          const auto solved = oracle::solve_coefficients(sig, lambda, delta, k);
          CAPTURE(sig.to_string());
          CAPTURE(k);
          REQUIRE(solved.has_value());
          for (int r = 0; r <= k; ++r) CHECK((*solved)[static_cast<std::size_t>(r)] == coeff(k, r, lambda, delta, sig));
        }
      }
    }
  }
}

TEST_CASE("normalization: the principal symbol of Q(S) is S") {
  for (const auto& sig : {Signature(2, 1), Signature(1, 2), Signature(2, 2)}) {
    SampleGenerator gen(sig, 34);
    const Variant variant = sig.is_psl_case() ? Variant::psl_family : Variant::generic_sl;
    const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5), variant, ratio(-2, 3));
    for (int k = 0; k <= 3; ++k) {
      const auto S = gen.symbol(k, cfg.delta);
      CHECK(principal_symbol(k, quantize(S, cfg)) == S);
    }
  }
}

TEST_CASE("symbol map inverts the quantization") {
  const Signature sig(2, 1);
  const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5));
  SampleGenerator gen(sig, 35);
  for (int n = 0; n < 10; ++n) {
    const auto D = gen.operator_of_order(2, cfg.lambda, cfg.mu());
    const auto parts = symbol_map(D, cfg);
    CHECK(parts.size() == static_cast<std::size_t>(std::max(D.order(), 0) + 1));
    CHECK(sum_of_quantized(parts, cfg) == D);
  }
  for (int k = 0; k <= 3; ++k) {
    const auto S = gen.symbol(k, cfg.delta);
    const auto parts = symbol_map(quantize(S, cfg), cfg);
    for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
      if (j == k) {
        CHECK(parts[static_cast<std::size_t>(j)] == S);
      } else {
        CHECK(parts[static_cast<std::size_t>(j)].is_zero());
      }
    }
  }
  const auto f = parse_polynomial(sig, "x1^2 + t1");
  const auto parts = symbol_map(DiffOperator::multiplication(f, cfg.lambda, cfg.mu()), cfg);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == SymbolField::scalar(f, cfg.delta));
  CHECK_THROWS_AS(symbol_map(DiffOperator(sig, 0, 1), cfg), PreconditionError);
}

TEST_CASE("symbol map on the psl family") {
  const Signature sig(1, 2);
  const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5), Variant::psl_family, Rational(1));
  SampleGenerator gen(sig, 36);
  for (int n = 0; n < 5; ++n) {
    const auto D = gen.operator_of_order(3, cfg.lambda, cfg.mu());
    CHECK(sum_of_quantized(symbol_map(D, cfg), cfg) == D);
  }
}

TEST_CASE("critical weights are rejected with the offending pair") {
  const Signature sig(2, 1);
  SampleGenerator gen(sig, 37);
  const auto S = gen.symbol(2, ratio(3, 2));
  try {
    quantize(S, QuantizationConfig(sig, ratio(1, 3), ratio(3, 2)));
    FAIL("expected a critical weight error");
  } catch (const CriticalWeightError& e) {
    CHECK(e.degree() == 2);
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(quantize_recursive(S, QuantizationConfig(sig, ratio(1, 3), ratio(3, 2))), CriticalWeightError);
  CHECK_THROWS_AS(QuantizationConfig(Signature(1, 2), 0, 0).validate(), PreconditionError);
  CHECK_THROWS_AS(QuantizationConfig(sig, 0, 0, Variant::psl_family).validate(), PreconditionError);
  CHECK_THROWS_AS(quantize(gen.symbol(1, 0), QuantizationConfig(sig, 0, ratio(1, 5))), PreconditionError);
}

TEST_CASE("equivariance of the generic quantization") {
  for (const auto& sig : kGeneric) {
    const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5));
    const auto report = check_equivariance(cfg, 3, 4, 1);
    CHECK_MESSAGE(report.passed(), to_text(report));
  }
}

TEST_CASE("perturbing a coefficient breaks equivariance") {
  for (const auto& sig : kGeneric) {
    const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5));
    auto perturbed = [&cfg](int k, int r) {
      return coeff(k, r, cfg.lambda, cfg.delta, cfg.sig) + (k == 2 && r == 1 ? Rational(1) : Rational(0));
    };
    const auto report = check_equivariance(
        cfg, [&](const SymbolField& S) { return quantize_closed_form(S, cfg, perturbed); }, "perturbed", 2, 4, 1);
    CHECK_FALSE(report.passed());
  }
}

TEST_CASE("the psl family") {
  const Signature sig(1, 2);
  SampleGenerator gen(sig, 38);
  for (const Rational& t : {Rational(0), Rational(1), ratio(-2, 3)}) {
    const QuantizationConfig cfg(sig, ratio(1, 3), ratio(1, 5), Variant::psl_family, t);
    const QuantizationConfig base(sig, ratio(1, 3), ratio(1, 5), Variant::psl_family, 0);
    for (int n = 0; n < 5; ++n) {
      const auto S = gen.symbol(1, cfg.delta);
      if (t == 0) CHECK(quantize(S, cfg) == affine_quantize(S, cfg.lambda));
      CHECK(quantize(S, cfg) - quantize(S, base) ==
            t * DiffOperator::multiplication(divergence(S).scalar_part(), cfg.lambda, cfg.mu()));
    }
    const auto report = check_equivariance(cfg, 3, 4, 2);
    CHECK_MESSAGE(report.passed(), to_text(report));
  }
}

}  // TEST_SUITE
