#include "superquant/verifier.hpp"

#include "superquant/constants.hpp"
#include "superquant/geometry.hpp"
#include "superquant/realization.hpp"
#include "superquant/sampling.hpp"

namespace sq {

namespace {

std::string index_name(const Signature& sig, int i) {
  return sig.parity(i) ? "t" + std::to_string(i - sig.p() + 1) : "x" + std::to_string(i + 1);
}

std::string elementary_name(const Signature& sig, int i, int j) {
  return "E(" + index_name(sig, i) + "," + index_name(sig, j) + ")";
}

std::vector<std::string> graded_basis_names(const Signature& sig) {
  std::vector<std::string> out;
  for (int r = 0; r < sig.dim(); ++r) out.push_back("e_" + index_name(sig, r));
  for (int i = 0; i < sig.dim(); ++i) {
    for (int j = 0; j < sig.dim(); ++j) out.push_back(elementary_name(sig, i, j));
  }
  for (int r = 0; r < sig.dim(); ++r) out.push_back("eps_" + index_name(sig, r));
  return out;
}

void set_weights(CheckReport& report, const Rational& lambda, const Rational& delta) {
  report.parameters["lambda"] = format_rational(lambda);
  report.parameters["delta"] = format_rational(delta);
}

}  // namespace

std::vector<NamedField> equivariance_generators(const Signature& sig, Variant variant) {
  std::vector<NamedField> out;
  for (int r = 0; r < sig.dim(); ++r) out.push_back({"e_" + index_name(sig, r), realize(GradedElement::translation(sig, r))});
  if (variant == Variant::psl_family) {
    const auto g0 = g0_basis(sig, G0Basis::elementary);
    for (std::size_t i = 0; i < g0.size(); ++i) out.push_back({"g0_" + std::to_string(i + 1), realize(g0[i])});
    out.push_back({"Euler", VectorField::euler(sig)});
  } else {
    for (int i = 0; i < sig.dim(); ++i) {
      for (int j = 0; j < sig.dim(); ++j) out.push_back({elementary_name(sig, i, j), realize(GradedElement::elementary(sig, i, j))});
    }
  }
  for (int r = 0; r < sig.dim(); ++r) out.push_back({"eps_" + index_name(sig, r), realize(GradedElement::dual_row(sig, r))});
  return out;
}

CheckReport check_equivariance(const QuantizationConfig& cfg, int degree_max, int samples, std::uint64_t seed) {
  cfg.validate(cfg.variant == Variant::generic_sl ? degree_max : 0);
  CheckReport report = check_equivariance(cfg, [&cfg](const SymbolField& S) { return quantize(S, cfg); }, "equivariance",
                                          degree_max, samples, seed);
  return report;
}

CheckReport check_equivariance(const QuantizationConfig& cfg, const QuantizerFn& quantizer, const std::string& name,
                               int degree_max, int samples, std::uint64_t seed) {
  CheckReport report(name, cfg.sig, seed);
  set_weights(report, cfg.lambda, cfg.delta);
  report.parameters["variant"] = to_string(cfg.variant);
  report.parameters["t"] = format_rational(cfg.t);
  report.parameters["degree_max"] = std::to_string(degree_max);
  report.parameters["samples"] = std::to_string(samples);
  const auto generators = equivariance_generators(cfg.sig, cfg.variant);
  SampleGenerator gen(cfg.sig, seed);
  for (int k = 0; k <= degree_max; ++k) {
    for (int n = 0; n < samples; ++n) {
      const SymbolField S = gen.symbol(k, cfg.delta);
      const DiffOperator QS = quantizer(S);
      for (const auto& g : generators) {
        const DiffOperator lhs = lie_operator(g.field, QS);
        const DiffOperator rhs = quantizer(lie_symbol(g.field, S));
        ++report.samples_run;
        if (!(lhs == rhs)) report.fail(g.name + " k=" + std::to_string(k), to_string(S), to_string(lhs), to_string(rhs));
      }
    }
  }
  return report;
}

CheckReport check_casimir(const Signature& sig, CasimirAlgebra algebra, const Rational& lambda, const Rational& delta,
                          int kmax, int samples, std::uint64_t seed) {
  CheckReport report("casimir", sig, seed);
  set_weights(report, lambda, delta);
  report.parameters["algebra"] = algebra == CasimirAlgebra::sl ? "sl" : "psl";
  report.parameters["kmax"] = std::to_string(kmax);
  SampleGenerator gen(sig, seed);
  for (int k = 0; k <= kmax; ++k) {
    const Rational eigen = algebra == CasimirAlgebra::sl ? alpha(k, delta, sig) : psl_eigenvalue(k);
    for (int n = 0; n < samples; ++n) {
      const SymbolField S = gen.symbol(k, delta);
      const SymbolField got = casimir_apply(S, lambda, Rep::L, algebra);
      const SymbolField expected = eigen * S;
      ++report.samples_run;
      if (!(got == expected)) report.fail("k=" + std::to_string(k), to_string(S), to_string(expected), to_string(got));
    }
  }
  return report;
}

CheckReport check_homomorphism(const Signature& sig) {
  CheckReport report("homomorphism", sig, 0);
  const auto basis = graded_basis(sig);
  const auto names = graded_basis_names(sig);
  std::vector<VectorField> fields;
  for (const auto& b : basis) fields.push_back(realize(b));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const VectorField lhs = realize(bracket(basis[a], basis[b]));
      const VectorField rhs = bracket(fields[a], fields[b]);
      ++report.samples_run;
      if (!(lhs == rhs)) report.fail("[" + names[a] + ", " + names[b] + "]", "", to_string(rhs), to_string(lhs));
    }
  }

  // sum_r (-1)^{|r|} [e_r, eps^r] with the scaled eps^r when it exists.
  const PglElement euler = euler_element(sig);
  PglElement sum(sig, Matrix(sig.dim() + 1, sig.dim() + 1));
  PglElement expected = sum;
  for (int r = 0; r < sig.dim(); ++r) {
    const PglElement e = PglElement::from_graded(GradedElement::translation(sig, r));
    if (sig.is_psl_case()) {
      sum += bracket(e, PglElement::from_graded(GradedElement::dual_row(sig, r)));
    } else {
      const Rational sign = sig.parity(r) ? -1 : 1;
      sum += sign * bracket(e, PglElement::from_graded(scaled_dual_row(sig, r)));
    }
  }
  if (!sig.is_psl_case()) expected = ratio(-1, 2) * euler;
  ++report.samples_run;
  if (!(sum == expected)) report.fail("crochet identity", "", to_string(expected), to_string(sum));

  // ad(E) acts by -1, 0, 1 on g_{-1}, g_0, g_1.
  const int n = sig.dim();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const int grade = a < static_cast<std::size_t>(n) ? -1 : (a < static_cast<std::size_t>(n + n * n) ? 0 : 1);
    const PglElement got = bracket(euler, basis[a]);
    const PglElement want = Rational(grade) * basis[a];
    ++report.samples_run;
    if (!(got == want)) report.fail("[E, " + names[a] + "]", "", to_string(want), to_string(got));
  }
  return report;
}

CheckReport check_relcas(const Signature& sig, const Rational& lambda, const Rational& delta, int kmax, int samples,
                         std::uint64_t seed) {
  CheckReport report("relcas", sig, seed);
  set_weights(report, lambda, delta);
  report.parameters["kmax"] = std::to_string(kmax);
  SampleGenerator gen(sig, seed);
  for (int k = 0; k <= kmax; ++k) {
    for (int n = 0; n < samples; ++n) {
      const SymbolField S = gen.symbol(k, delta);
      const SymbolField lhs = casimir_apply(S, lambda, Rep::calL, CasimirAlgebra::sl);
      const SymbolField rhs = casimir_apply(S, lambda, Rep::L, CasimirAlgebra::sl) + n_apply(S, lambda);
      ++report.samples_run;
      if (!(lhs == rhs)) report.fail("k=" + std::to_string(k), to_string(S), to_string(rhs), to_string(lhs));
    }
  }
  return report;
}

}  // namespace sq
