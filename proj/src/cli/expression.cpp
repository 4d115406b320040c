#include "superquant/expression.hpp"

#include "superquant/errors.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace sq {

std::string to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::poly: return "poly";
    case ExprKind::vfield: return "vfield";
    case ExprKind::symbol: return "symbol";
    case ExprKind::op: return "operator";
  }
  return "";
}

ExprKind parse_expr_kind(const std::string& text) {
  if (text == "poly") return ExprKind::poly;
  if (text == "vfield") return ExprKind::vfield;
  if (text == "symbol") return ExprKind::symbol;
  if (text == "operator") return ExprKind::op;
  throw std::invalid_argument("unknown expression kind '" + text + "'");
}

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

/// Atom classes: coordinates, symbol generators, derivative generators.
enum class AtomClass { coordinate, symbol, derivative };

/// Parses into the free supercommutative algebra over 2p even and 2q odd
/// generators: x's and t's at the low indices, the e/d generators above.
class Parser {
 public:
  Parser(const Signature& sig, std::string_view text, ExprKind kind)
      : sig_(sig), formal_(2 * sig.p(), 2 * sig.q()), tokens_(lex(text)), kind_(kind) {}

  SuperPolynomial parse() {
    SuperPolynomial out = expr();
    if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return out;
  }

  const Signature& formal() const { return formal_; }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  const Token& next() { return tokens_[cursor_++]; }

  SuperPolynomial expr() {
    SuperPolynomial out(formal_);
    bool negative = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) negative = next().kind == Tok::minus;
    while (true) {
      SuperPolynomial t = term();
      if (negative) {
        out -= t;
      } else {
        out += t;
      }
      if (peek().kind != Tok::plus && peek().kind != Tok::minus) break;
      negative = next().kind == Tok::minus;
    }
    return out;
  }

  SuperPolynomial term() {
    SuperPolynomial out = factor();
    while (peek().kind == Tok::star) {
      next();
      out = out * factor();
    }
    return out;
  }

  SuperPolynomial factor() {
    const Token& tok = peek();
    if (tok.kind == Tok::number) {
      next();
      Rational value = parse_rational(tok.text);
      if (peek().kind == Tok::slash) {
        next();
        const Token& den = next();
        if (den.kind != Tok::number) throw ParseError("expected denominator", den.pos);
        const Rational d = parse_rational(den.text);
        if (d == 0) throw ParseError("zero denominator", den.pos);
        value /= d;
      }
      if (peek().kind == Tok::caret) throw ParseError("'^' applies only to atoms", peek().pos);
      return SuperPolynomial::constant(formal_, value);
    }
    if (tok.kind == Tok::lparen) {
      next();
      SuperPolynomial inner = expr();
      if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
      next();
      if (peek().kind == Tok::caret) throw ParseError("'^' applies only to atoms", peek().pos);
      return inner;
    }
    if (tok.kind == Tok::ident) {
      next();
      const int index = atom_index(tok);
      int exponent = 1;
      if (peek().kind == Tok::caret) {
        next();
        const Token& e = next();
        if (e.kind != Tok::number) throw ParseError("expected a positive integer exponent", e.pos);
        if (e.text.size() > 6) throw ParseError("exponent too large", e.pos);
        exponent = std::stoi(e.text);
        if (exponent < 1) throw ParseError("exponent must be positive", e.pos);
        if (formal_.parity(index) == 1 && exponent > 1) {
          throw ParseError("odd atom '" + tok.text + "' raised to a power greater than 1", e.pos);
        }
      }
      SuperPolynomial out = SuperPolynomial::constant(formal_, 1);
      const SuperPolynomial y = SuperPolynomial::coordinate(formal_, index);
      for (int i = 0; i < exponent; ++i) out = out * y;
      return out;
    }
    if (tok.kind == Tok::end) throw ParseError("unexpected end of input", tok.pos);
    throw ParseError("unexpected '" + tok.text + "'", tok.pos);
  }

  int atom_index(const Token& tok) {
    const std::string& s = tok.text;
    std::size_t split = 0;
    while (split < s.size() && std::isalpha(static_cast<unsigned char>(s[split]))) ++split;
    const std::string prefix = s.substr(0, split);
    const std::string digits = s.substr(split);
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits[0] == '0') {
      throw ParseError("malformed atom '" + s + "'", tok.pos);
    }
    const int i = std::stoi(digits) - 1;
    bool odd = false;
    AtomClass cls = AtomClass::coordinate;
    if (prefix == "x") {
    } else if (prefix == "t") {
      odd = true;
    } else if (prefix == "ex" || prefix == "et") {
      cls = AtomClass::symbol;
      odd = prefix == "et";
    } else if (prefix == "dx" || prefix == "dt") {
      cls = AtomClass::derivative;
      odd = prefix == "dt";
    } else {
      throw ParseError("unknown atom '" + s + "'", tok.pos);
    }
    const int bound = odd ? sig_.q() : sig_.p();
    if (i >= bound) {
      throw ParseError("atom '" + s + "' is out of range for signature " + sig_.to_string(), tok.pos);
    }
    check_class(cls, tok);
    const int p = sig_.p();
    const int q = sig_.q();
    const int high = cls == AtomClass::coordinate ? 0 : 1;
    return odd ? 2 * p + high * q + i : high * p + i;
  }

  void check_class(AtomClass cls, const Token& tok) const {
    const bool ok = cls == AtomClass::coordinate || (cls == AtomClass::symbol && kind_ == ExprKind::symbol) ||
                    (cls == AtomClass::derivative && (kind_ == ExprKind::vfield || kind_ == ExprKind::op));
    if (!ok) throw ParseError("atom '" + tok.text + "' is not allowed in a " + to_string(kind_), tok.pos);
  }

  Signature sig_;
  Signature formal_;
  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  ExprKind kind_;
};

/// Splits a formal monomial into (coefficient monomial, key).
std::pair<Monomial, Monomial> split_formal(const Signature& sig, const Monomial& m) {
  const int p = sig.p();
  const int q = sig.q();
  Monomial coeff(p);
  Monomial key(p);
  for (int i = 0; i < p; ++i) {
    coeff.even[static_cast<std::size_t>(i)] = m.even[static_cast<std::size_t>(i)];
    key.even[static_cast<std::size_t>(i)] = m.even[static_cast<std::size_t>(p + i)];
  }
  const std::uint32_t low = q == 0 ? 0U : ((1U << q) - 1U);
  coeff.odd = m.odd & low;
  key.odd = (m.odd >> q) & low;
  return {coeff, key};
}

template <typename Sink>
void for_each_split(const Signature& sig, const SuperPolynomial& formal, Sink sink) {
  for (const auto& [m, c] : formal.terms()) {
    auto [coeff, key] = split_formal(sig, m);
    sink(coeff, key, c);
  }
}

SuperPolynomial parse_formal(const Signature& sig, std::string_view text, ExprKind kind) {
  Parser parser(sig, text, kind);
  return parser.parse();
}

}  // namespace

SuperPolynomial parse_polynomial(const Signature& sig, std::string_view text) {
  SuperPolynomial out(sig);
  for_each_split(sig, parse_formal(sig, text, ExprKind::poly),
                 [&out](const Monomial& coeff, const Monomial&, const Rational& c) { out.add_term(coeff, c); });
  return out;
}

VectorField parse_vector_field(const Signature& sig, std::string_view text) {
  VectorField out(sig);
  for_each_split(sig, parse_formal(sig, text, ExprKind::vfield), [&](const Monomial& coeff, const Monomial& key, const Rational& c) {
    if (key.degree() != 1) throw ParseError("every vector field term needs exactly one derivative atom", 0);
    int index = 0;
    if (key.odd) {
      index = sig.p() + std::countr_zero(key.odd);
    } else {
      while (key.even[static_cast<std::size_t>(index)] == 0) ++index;
    }
    out.component(index).add_term(coeff, c);
  });
  return out;
}

SymbolField parse_symbol(const Signature& sig, std::string_view text, const Rational& weight) {
  SymbolField out(sig, weight);
  for_each_split(sig, parse_formal(sig, text, ExprKind::symbol),
                 [&out](const Monomial& coeff, const Monomial& key, const Rational& c) { out.add_term(key, coeff, c); });
  return out;
}

DiffOperator parse_operator(const Signature& sig, std::string_view text, const Rational& source, const Rational& target) {
  DiffOperator out(sig, source, target);
  for_each_split(sig, parse_formal(sig, text, ExprKind::op),
                 [&out](const Monomial& coeff, const Monomial& key, const Rational& c) { out.add_term(key, coeff, c); });
  return out;
}

}  // namespace sq
