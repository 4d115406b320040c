#include "superquant/cli.hpp"

#include "superquant/casimir.hpp"
#include "superquant/constants.hpp"
#include "superquant/errors.hpp"
#include "superquant/expression.hpp"
#include "superquant/geometry.hpp"
#include "superquant/realization.hpp"
#include "superquant/serialize.hpp"
#include "superquant/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace sq {

namespace {

struct GlobalOptions {
  int p = 1;
  int q = 0;
  std::string lambda = "0";
  std::string delta = "0";
  std::string t = "0";
  std::string variant;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

struct Output {
  std::string text;
  nlohmann::ordered_json json;
  int code = kExitOk;
};

struct Context {
  Signature sig;
  Rational lambda;
  Rational delta;
  Rational t;
  Variant variant;
  std::uint64_t seed;

  Rational mu() const { return lambda + delta; }
  QuantizationConfig config() const { return QuantizationConfig(sig, lambda, delta, variant, t); }
};

Context make_context(const GlobalOptions& g) {
  Signature sig(g.p, g.q);
  Variant variant = sig.is_psl_case() ? Variant::psl_family : Variant::generic_sl;
  if (!g.variant.empty()) variant = parse_variant(g.variant);
  return {sig, parse_rational(g.lambda), parse_rational(g.delta), parse_rational(g.t), variant, g.seed};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_row(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(trim(item)));
  return out;
}

Matrix parse_matrix(const Signature& sig, const std::string& text) {
  const int n = sig.dim() + 1;
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_row(row));
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("matrix needs " + std::to_string(n) + " rows separated by ';'");
  }
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " needs " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

Output value(const SuperPolynomial& f, const std::map<std::string, Rational>& weights = {}) {
  return {to_string(f), to_json(f, weights)};
}
Output value(const VectorField& X) { return {to_string(X), to_json(X)}; }
Output value(const SymbolField& S) { return {to_string(S), to_json(S)}; }
Output value(const DiffOperator& D) { return {to_string(D), to_json(D)}; }
Output value(const Signature& sig, const std::string& kind, const Rational& v) {
  return {format_rational(v), rational_json(sig, kind, v)};
}
Output value(const CheckReport& report) {
  return {to_text(report), to_json(report), report.passed() ? kExitOk : kExitCheckFailed};
}

using Action = std::function<Output(const Context&)>;

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact projectively equivariant quantization over R^{p|q}", "sqtool"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--p", g.p, "number of even coordinates");
  app.add_option("--q", g.q, "number of odd coordinates");
  app.add_option("--lambda", g.lambda, "source density weight (a or a/b)");
  app.add_option("--delta", g.delta, "symbol weight (a or a/b)");
  app.add_option("--t", g.t, "parameter of the psl family");
  app.add_option("--variant", g.variant, "sl or psl (default from the signature)")->check(CLI::IsMember({"sl", "psl"}));
  app.add_option("--seed", g.seed, "seed of the sample generator");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write the result to FILE");

  Action action;
  std::string symbol_text;
  std::string operator_text;
  std::string field_text;
  std::string function_text;
  std::string xi_text;
  std::string matrix_text;
  std::string rep_text = "L";
  std::string basis_text = "elementary";
  bool recursive = false;
  bool closed_form = false;
  int k = 0;
  int r = 0;
  int kmax = 3;
  int kmax_equivariance = 2;
  int kmax_relcas = 2;
  int samples = kDefaultSamples;

  auto symbol = [&](const Context& c) { return parse_symbol(c.sig, symbol_text, c.delta); };
  auto field = [&](const Context& c) { return parse_vector_field(c.sig, field_text); };

  auto* quantize_cmd = app.add_subcommand("quantize", "equivariant quantization of a symbol");
  quantize_cmd->add_option("--symbol", symbol_text, "symbol, e.g. x1*ex1^2")->required();
  quantize_cmd->add_flag("--recursive", recursive, "use the Casimir recursion instead of the closed form");
  quantize_cmd->callback([&] {
    action = [&](const Context& c) {
      const auto S = symbol(c);
      return value(recursive ? quantize_recursive(S, c.config()) : quantize(S, c.config()));
    };
  });

  auto* symbol_map_cmd = app.add_subcommand("symbol-map", "inverse of the quantization");
  symbol_map_cmd->add_option("--operator", operator_text, "operator, e.g. x1*dx1^2 + 3")->required();
  symbol_map_cmd->callback([&] {
    action = [&](const Context& c) {
      const auto D = parse_operator(c.sig, operator_text, c.lambda, c.mu());
      const auto parts = symbol_map(D, c.config());
      Output o;
      o.json = {{"signature", signature_json(c.sig)}, {"kind", "symbol_list"}, {"items", nlohmann::ordered_json::array()}};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        o.text += "k=" + std::to_string(i) + ": " + to_string(parts[i]) + "\n";
        o.json["items"].push_back(to_json(parts[i]));
      }
      if (!o.text.empty()) o.text.pop_back();
      return o;
    };
  });

  auto* affine_cmd = app.add_subcommand("affine-quantize", "coefficient-wise quantization Q_Aff");
  affine_cmd->add_option("--symbol", symbol_text, "symbol")->required();
  affine_cmd->callback([&] { action = [&](const Context& c) { return value(affine_quantize(symbol(c), c.lambda)); }; });

  auto* lie_cmd = app.add_subcommand("lie", "Lie derivatives");
  lie_cmd->require_subcommand(1);
  auto* lie_density_cmd = lie_cmd->add_subcommand("density", "L^lambda_X f");
  lie_density_cmd->add_option("--field", field_text, "vector field, e.g. x1*dx1")->required();
  lie_density_cmd->add_option("--function", function_text, "density coefficient f")->required();
  lie_density_cmd->callback([&] {
    action = [&](const Context& c) {
      return value(lie_density(field(c), c.lambda, parse_polynomial(c.sig, function_text)), {{"lambda", c.lambda}});
    };
  });
  auto* lie_symbol_cmd = lie_cmd->add_subcommand("symbol", "L_X on symbols of weight delta");
  lie_symbol_cmd->add_option("--field", field_text, "vector field")->required();
  lie_symbol_cmd->add_option("--symbol", symbol_text, "symbol")->required();
  lie_symbol_cmd->callback([&] { action = [&](const Context& c) { return value(lie_symbol(field(c), symbol(c))); }; });
  auto* lie_operator_cmd = lie_cmd->add_subcommand("operator", "L_X on operators F_lambda -> F_{lambda+delta}");
  lie_operator_cmd->add_option("--field", field_text, "vector field")->required();
  lie_operator_cmd->add_option("--operator", operator_text, "operator")->required();
  lie_operator_cmd->callback([&] {
    action = [&](const Context& c) {
      return value(lie_operator(field(c), parse_operator(c.sig, operator_text, c.lambda, c.mu())));
    };
  });

  auto* div_cmd = app.add_subcommand("div", "divergence");
  div_cmd->require_subcommand(1);
  auto* div_field_cmd = div_cmd->add_subcommand("vfield", "divergence of a vector field");
  div_field_cmd->add_option("--field", field_text, "vector field")->required();
  div_field_cmd->callback([&] { action = [&](const Context& c) { return value(divergence(field(c))); }; });
  auto* div_symbol_cmd = div_cmd->add_subcommand("symbol", "divergence of a symbol");
  div_symbol_cmd->add_option("--symbol", symbol_text, "symbol")->required();
  div_symbol_cmd->callback([&] { action = [&](const Context& c) { return value(divergence(symbol(c))); }; });

  auto* gamma_cmd = app.add_subcommand("gamma", "gamma(xi) for xi in g_1");
  gamma_cmd->add_option("--xi", xi_text, "row covector, comma separated (p+q entries)")->required();
  gamma_cmd->add_option("--symbol", symbol_text, "symbol")->required();
  gamma_cmd->add_flag("--closed-form", closed_form, "evaluate -(lambda(p-q+1)+k-1) i(xi) instead of the definition");
  gamma_cmd->callback([&] {
    action = [&](const Context& c) {
      const auto h = GradedElement::quadratic(c.sig, parse_row(xi_text));
      const auto S = symbol(c);
      return value(closed_form ? gamma_closed_form(h, S, c.lambda) : gamma_apply(h, S, c.lambda));
    };
  });

  auto* casimir_cmd = app.add_subcommand("casimir", "Casimir operator on a symbol");
  casimir_cmd->add_option("--symbol", symbol_text, "symbol")->required();
  casimir_cmd->add_option("--rep", rep_text, "L or calL")->check(CLI::IsMember({"L", "calL"}));
  casimir_cmd->add_option("--g0-basis", basis_text, "elementary or alternate")->check(CLI::IsMember({"elementary", "alternate"}));
  casimir_cmd->callback([&] {
    action = [&](const Context& c) {
      const Rep rep = rep_text == "L" ? Rep::L : Rep::calL;
      const G0Basis basis = basis_text == "elementary" ? G0Basis::elementary : G0Basis::alternate;
      return value(casimir_apply(symbol(c), c.lambda, rep, default_algebra(c.sig), basis));
    };
  });

  auto* alpha_cmd = app.add_subcommand("alpha", "Casimir eigenvalue alpha(k, delta)");
  alpha_cmd->add_option("--k", k, "symbol degree")->required();
  alpha_cmd->callback([&] { action = [&](const Context& c) { return value(c.sig, "alpha", alpha(k, c.delta, c.sig)); }; });

  auto* coeff_cmd = app.add_subcommand("coeff", "coefficient C_{k,r}");
  coeff_cmd->add_option("--k", k, "symbol degree")->required();
  coeff_cmd->add_option("--r", r, "step 0..k")->required();
  coeff_cmd->callback([&] {
    action = [&](const Context& c) { return value(c.sig, "coeff", coeff(k, r, c.lambda, c.delta, c.sig)); };
  });

  auto* critical_cmd = app.add_subcommand("critical", "critical weights c_1 u ... u c_kmax");
  critical_cmd->add_option("--kmax", kmax, "largest degree");
  critical_cmd->callback([&] {
    action = [&](const Context& c) {
      Output o;
      o.json = {{"signature", signature_json(c.sig)}, {"kind", "critical_set"}, {"kmax", kmax}, {"values", nlohmann::ordered_json::array()}};
      for (const auto& v : critical_set(c.sig, kmax)) {
        if (!o.text.empty()) o.text += " ";
        o.text += format_rational(v);
        o.json["values"].push_back(format_rational(v));
      }
      return o;
    };
  });

  auto* realize_cmd = app.add_subcommand("realize", "vector field of a pgl(p+1|q) matrix");
  realize_cmd->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")->required();
  realize_cmd->callback([&] {
    action = [&](const Context& c) { return value(realize(PglElement(c.sig, parse_matrix(c.sig, matrix_text)))); };
  });

  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  check_cmd->require_subcommand(1);
  auto* check_eq = check_cmd->add_subcommand("equivariance", "equivariance of the quantization");
  check_eq->add_option("--kmax", kmax_equivariance, "largest symbol degree");
  check_eq->add_option("--samples", samples, "symbols per degree");
  check_eq->callback([&] {
    action = [&](const Context& c) { return value(check_equivariance(c.config(), kmax_equivariance, samples, c.seed)); };
  });
  auto* check_cas = check_cmd->add_subcommand("casimir", "Casimir eigenvalues");
  check_cas->add_option("--kmax", kmax, "largest symbol degree");
  check_cas->add_option("--samples", samples, "symbols per degree");
  check_cas->callback([&] {
    action = [&](const Context& c) {
      return value(check_casimir(c.sig, default_algebra(c.sig), c.lambda, c.delta, kmax, samples, c.seed));
    };
  });
  auto* check_hom = check_cmd->add_subcommand("homomorphism", "realization respects brackets");
  check_hom->callback([&] { action = [&](const Context& c) { return value(check_homomorphism(c.sig)); }; });
  auto* check_rel = check_cmd->add_subcommand("relcas", "transported Casimir equals C + N");
  check_rel->add_option("--kmax", kmax_relcas, "largest symbol degree");
  check_rel->add_option("--samples", samples, "symbols per degree");
  check_rel->callback([&] {
    action = [&](const Context& c) { return value(check_relcas(c.sig, c.lambda, c.delta, kmax_relcas, samples, c.seed)); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output result;
  try {
    const Context context = make_context(g);
    result = action(context);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << "\n";
    return kExitUsage;
  }

  while (!result.text.empty() && result.text.back() == '\n') result.text.pop_back();
  const std::string rendered = g.format == "json" ? result.json.dump(2) + "\n" : result.text + "\n";
  if (g.out.empty()) {
    out << rendered;
  } else {
    std::ofstream file(g.out);
    if (!file) {
      err << "cannot write " << g.out << "\n";
      return kExitUsage;
    }
    file << rendered;
  }
  return result.code;
}

}  // namespace sq
