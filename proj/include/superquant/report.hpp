#ifndef SUPERQUANT_REPORT_HPP
#define SUPERQUANT_REPORT_HPP

#include "superquant/signature.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace sq {

struct CheckFailure {
  std::string context;  ///< generator, degree or identity being checked
  std::string input;
  std::string expected;
  std::string got;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

/// Outcome of one verification run. Passing means no failures.
struct CheckReport {
  std::string check_name;
  int p = 0;
  int q = 0;
  std::map<std::string, std::string> parameters;
  int samples_run = 0;
  std::vector<CheckFailure> failures;
  std::uint64_t seed = 0;

  CheckReport() = default;
  CheckReport(std::string name, const Signature& sig, std::uint64_t seed_value);

  bool passed() const { return failures.empty(); }
  void fail(std::string context, std::string input, std::string expected, std::string got);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

nlohmann::ordered_json to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const CheckReport& report);

}  // namespace sq

#endif
