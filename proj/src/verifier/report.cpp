#include "superquant/report.hpp"

#include <sstream>

namespace sq {

CheckReport::CheckReport(std::string name, const Signature& sig, std::uint64_t seed_value)
    : check_name(std::move(name)), p(sig.p()), q(sig.q()), seed(seed_value) {}

void CheckReport::fail(std::string context, std::string input, std::string expected, std::string got) {
  failures.push_back({std::move(context), std::move(input), std::move(expected), std::move(got)});
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"context", f.context}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  }
  return {
      {"check", report.check_name},
      {"signature", {{"p", report.p}, {"q", report.q}}},
      {"parameters", report.parameters},
      {"samples_run", report.samples_run},
      {"seed", report.seed},
      {"passed", report.passed()},
      {"failures", failures},
  };
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r;
  r.check_name = j.at("check").get<std::string>();
  r.p = j.at("signature").at("p").get<int>();
  r.q = j.at("signature").at("q").get<int>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  r.samples_run = j.at("samples_run").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("context").get<std::string>(), f.at("input").get<std::string>(),
                          f.at("expected").get<std::string>(), f.at("got").get<std::string>()});
  }
  return r;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.check_name << " {" << report.p << "|" << report.q << "}";
  for (const auto& [key, value] : report.parameters) out << " " << key << "=" << value;
  out << " seed=" << report.seed << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.samples_run
      << " comparisons, " << report.failures.size() << " failures)\n";
  for (const auto& f : report.failures) {
    out << "  [" << f.context << "]\n    input:    " << f.input << "\n    expected: " << f.expected
        << "\n    got:      " << f.got << "\n";
  }
  return out.str();
}

}  // namespace sq
