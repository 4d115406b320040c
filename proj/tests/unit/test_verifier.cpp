#include <doctest.h>

#include "superquant/constants.hpp"
#include "superquant/errors.hpp"
#include "superquant/geometry.hpp"
#include "superquant/sampling.hpp"
#include "superquant/verifier.hpp"

#include <set>

using namespace sq;

TEST_SUITE("verifier") {

TEST_CASE("reports survive a JSON round trip") {
  CheckReport report("equivariance", Signature(2, 1), 42);
  report.parameters["lambda"] = "1/3";
  report.samples_run = 7;
  report.fail("E(x1,t1) k=2", "x1*ex1", "0", "t1");
  const auto j = to_json(report);
  CHECK(j["check"] == "equivariance");
  CHECK(j["signature"]["p"] == 2);
  CHECK(j["passed"] == false);
  CHECK(report_from_json(j) == report);
  CHECK(report_from_json(nlohmann::ordered_json::parse(j.dump())) == report);
  CHECK(to_text(report).find("FAIL") != std::string::npos);
}

TEST_CASE("checks are deterministic for a fixed seed") {
  const QuantizationConfig cfg(Signature(2, 1), ratio(1, 3), ratio(1, 5));
  CHECK(to_json(check_equivariance(cfg, 2, 3, 9)) == to_json(check_equivariance(cfg, 2, 3, 9)));
  SampleGenerator a(Signature(2, 2), 5);
  SampleGenerator b(Signature(2, 2), 5);
  for (int k = 0; k <= 3; ++k) CHECK(a.symbol(k, 0) == b.symbol(k, 0));
  CHECK(a.vector_field() == b.vector_field());
}

TEST_CASE("samples have homogeneous parity") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 1), Signature(1, 2), Signature(2, 3)}) {
    SampleGenerator gen(sig, 11);
    for (int n = 0; n < 20; ++n) {
      for (int k = 0; k <= 3; ++k) {
        const auto S = gen.symbol(k, 0);
        if (!S.is_zero()) CHECK(S.parity() != Parity::mixed);
        CHECK((S.is_zero() || (S.max_degree() == k && S.min_degree() == k)));
      }
      CHECK(gen.vector_field().parity() != Parity::mixed);
      CHECK(gen.polynomial(0).parity() != Parity::odd);
      CHECK(gen.operator_of_order(2, 0, 1).parity() != Parity::mixed);
    }
  }
}

TEST_CASE("every odd subset appears in the coefficients for q <= 3") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 2), Signature(1, 3), Signature(2, 3)}) {
    SampleGenerator gen(sig, 12);
    for (int k = 0; k <= 2; ++k) {
      std::set<std::uint32_t> seen;
      for (int n = 0; n < (1 << sig.q()); ++n) {
        const auto S = gen.symbol(k, 0);
        for (const auto& [key, f] : S.terms()) {
          for (const auto& [m, c] : f.terms()) seen.insert(m.odd);
        }
      }
      CHECK(seen.size() == static_cast<std::size_t>(1 << sig.q()));
    }
  }
}

TEST_CASE("the affine quantization is not projectively equivariant") {
  const Signature sig(2, 1);
  const QuantizationConfig cfg(sig, 1, 0);
  const auto report = check_equivariance(
      cfg, [&](const SymbolField& S) { return affine_quantize(S, cfg.lambda); }, "affine", 2, 3, 4);
  CHECK_FALSE(report.passed());
  CHECK(report.samples_run > 0);
}

TEST_CASE("a critical delta is reported as an error") {
  const QuantizationConfig cfg(Signature(2, 1), ratio(1, 3), ratio(3, 2));
  CHECK_THROWS_AS(check_equivariance(cfg, 2, 2, 0), CriticalWeightError);
  CHECK_NOTHROW(check_equivariance(cfg, 1, 2, 0));
}

TEST_CASE("the checks pass on a grid of signatures") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 1), Signature(1, 2), Signature(2, 2), Signature(1, 0)}) {
    const auto hom = check_homomorphism(sig);
    CHECK_MESSAGE(hom.passed(), to_text(hom));
    const auto cas = check_casimir(sig, default_algebra(sig), ratio(1, 3), ratio(1, 5), 3, 3, 1);
    CHECK_MESSAGE(cas.passed(), to_text(cas));
    if (!sig.is_psl_case()) {
      const auto rel = check_relcas(sig, ratio(1, 3), ratio(1, 5), 2, 3, 1);
      CHECK_MESSAGE(rel.passed(), to_text(rel));
    }
  }
}

TEST_CASE("the psl Casimir has eigenvalue 4 in degree 2") {
  CHECK(psl_eigenvalue(2) == 4);
  const Signature sig(1, 2);
  SampleGenerator gen(sig, 13);
  for (int n = 0; n < 5; ++n) {
    const auto S = gen.symbol(2, ratio(1, 5));
    CHECK(casimir_apply(S, ratio(1, 3), Rep::L, CasimirAlgebra::psl) == Rational(4) * S);
  }
  const auto report = check_casimir(sig, CasimirAlgebra::psl, ratio(1, 3), 0, 2, 4, 3);
  CHECK(report.passed());
}

TEST_CASE("psl generators include the Euler field") {
  const auto gens = equivariance_generators(Signature(1, 2), Variant::psl_family);
  CHECK(gens.back().name == "eps_t2");
  bool has_euler = false;
  for (const auto& g : gens) has_euler = has_euler || (g.name == "Euler" && g.field == VectorField::euler(Signature(1, 2)));
  CHECK(has_euler);
  CHECK(equivariance_generators(Signature(2, 1), Variant::generic_sl).size() == 3 + 9 + 3);
}

}  // TEST_SUITE
