#include "superquant/text_format.hpp"

namespace sq::text {

std::string factors(const Monomial& m, std::string_view even_prefix, std::string_view odd_prefix) {
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for (std::size_t i = 0; i < m.even.size(); ++i) {
    const int e = m.even[i];
    if (e == 0) continue;
    std::string f = std::string(even_prefix) + std::to_string(i + 1);
    if (e > 1) f += "^" + std::to_string(e);
    append(f);
  }
  for (int j = 0; j < 32; ++j) {
    if (m.has_odd(j)) append(std::string(odd_prefix) + std::to_string(j + 1));
  }
  return out;
}

std::string sum(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = sgn(coeff) < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string c = format_rational(magnitude);
    if (!is_integer(magnitude)) c = "(" + c + ")";
    if (mono.empty()) {
      out += c;
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

std::string key(const Monomial& m, std::string_view prefix) {
  std::string pre = prefix.empty() ? std::string() : std::string(prefix) + " ";
  std::string out = pre + "x^(";
  for (std::size_t i = 0; i < m.even.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.even[i]);
  }
  out += ");" + pre + "t{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!m.has_odd(j)) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(j + 1);
  }
  out += "}";
  return out;
}

}  // namespace sq::text
