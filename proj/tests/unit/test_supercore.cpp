#include <doctest.h>

#include "oracles.hpp"
#include "superquant/errors.hpp"
#include "superquant/expression.hpp"
#include "superquant/sampling.hpp"

using namespace sq;

namespace {

SuperPolynomial P(const Signature& sig, const char* text) { return parse_polynomial(sig, text); }

}  // namespace

TEST_SUITE("supercore") {

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == ratio(3, 4));
  CHECK(parse_rational("-6/8") == ratio(-3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK(format_rational(ratio(-6, 8)) == "-3/4");
  CHECK(format_rational(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("signature validation and parities") {
  CHECK_THROWS(Signature(0, 0));
  CHECK_THROWS(Signature(-1, 2));
  const Signature sig(2, 1);
  CHECK(sig.parity(0) == 0);
  CHECK(sig.parity(1) == 0);
  CHECK(sig.parity(2) == 1);
  CHECK(sig.superdimension() == 1);
  CHECK_THROWS_AS(sig.check_index(3), std::out_of_range);
  CHECK(Signature(1, 2).is_psl_case());
}

TEST_CASE("Grassmann products") {
  const Signature sig(1, 2);
  const auto t1 = SuperPolynomial::coordinate(sig, 1);
  const auto t2 = SuperPolynomial::coordinate(sig, 2);
  const auto one = SuperPolynomial::constant(sig, 1);
  CHECK((t1 * t2 * t1).is_zero());
  CHECK((one + t1) * (one - t1) == one);
  CHECK(t2 * t1 == -(t1 * t2));
  CHECK(P(sig, "t2*t1") == Rational(-1) * P(sig, "t1*t2"));
}

TEST_CASE("canonical sorting agrees with the word oracle") {
  const Signature sig(1, 3);
  // every ordering of the three odd generators
  std::vector<int> word{1, 2, 3};
  int count = 0;
  do {
    auto [sign, mono] = oracle::canonical_word(sig, word);
    SuperPolynomial prod = SuperPolynomial::constant(sig, 1);
    for (int g : word) prod = prod * SuperPolynomial::coordinate(sig, g);
    CHECK(prod == SuperPolynomial::monomial(sig, mono, Rational(sign)));
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  CHECK(count == 6);
}

TEST_CASE("left derivatives") {
  const Signature sig(1, 2);
  CHECK(partial(1, P(sig, "t1*t2")) == P(sig, "t2"));
  CHECK(partial(2, P(sig, "t1*t2")) == P(sig, "-t1"));
  CHECK(partial(0, P(sig, "x1^2*t1")) == P(sig, "2*x1*t1"));
  CHECK(partial(2, P(sig, "x1")).is_zero());
  CHECK_THROWS_AS(partial(3, P(sig, "x1")), std::out_of_range);
}

TEST_CASE("left derivative matches the reordering oracle") {
  for (const auto& sig : {Signature(2, 2), Signature(1, 3), Signature(0, 3)}) {
    SampleGenerator gen(sig, 11);
    for (int n = 0; n < 30; ++n) {
      const SuperPolynomial f = gen.polynomial(n % 2, 4);
      for (int i = 0; i < sig.dim(); ++i) CHECK(partial(i, f) == oracle::left_derivative(sig, i, f));
    }
  }
}

TEST_CASE("parity classification") {
  const Signature sig(2, 2);
  CHECK(P(sig, "x1 + x2^2").parity() == Parity::even);
  CHECK(P(sig, "t1 + x1*t2").parity() == Parity::odd);
  CHECK(P(sig, "1 + t1").parity() == Parity::mixed);
  CHECK(SuperPolynomial(sig).parity() == Parity::even);
}

TEST_CASE("supercommutativity, associativity and derivative laws on samples") {
  for (const auto& sig : {Signature(1, 1), Signature(2, 2), Signature(1, 3)}) {
    SampleGenerator gen(sig, 3);
    for (int n = 0; n < 40; ++n) {
      const int pa = n % 2;
      const int pb = (n / 2) % 2;
      const auto a = gen.polynomial(pa, 3);
      const auto b = gen.polynomial(pb, 3);
      const auto c = gen.polynomial(0, 2);
      CHECK(a * b == Rational((pa && pb) ? -1 : 1) * (b * a));
      CHECK((a * b) * c == a * (b * c));
      for (int i = 0; i < sig.dim(); ++i) {
        const int pi = sig.parity(i);
        CHECK(partial(i, a * b) == partial(i, a) * b + Rational((pi && pa) ? -1 : 1) * (a * partial(i, b)));
        for (int j = 0; j < sig.dim(); ++j) {
          const int pj = sig.parity(j);
          CHECK(partial(i, partial(j, a)) == Rational((pi && pj) ? -1 : 1) * partial(j, partial(i, a)));
        }
      }
    }
  }
}

TEST_CASE("no zero coefficient is stored") {
  const Signature sig(1, 1);
  auto f = P(sig, "x1 + t1");
  f -= P(sig, "x1");
  CHECK(f.size() == 1);
  CHECK(f.coefficient(Monomial({1}, 0)) == 0);
}

TEST_CASE("polynomial text round trip") {
  for (const auto& sig : {Signature(2, 0), Signature(2, 2), Signature(0, 3)}) {
    SampleGenerator gen(sig, 5);
    for (int n = 0; n < 30; ++n) {
      const auto f = gen.polynomial(n % 2, 4) + gen.polynomial(0, 2);
      CHECK(P(sig, to_string(f).c_str()) == f);
    }
  }
}

}  // TEST_SUITE
