#include <doctest.h>

#include <random>

#include "superlie/error.hpp"
#include "superlie/polynomial.hpp"
#include "support.hpp"

using namespace superlie;
using testing::letters;
using testing::poly;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("+3").to_string() == "3");
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("a"));
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) < Rational(2, 3));
  // Promotion to big values and back.
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big * big;
  CHECK_FALSE(sq.is_integer() == false);
  CHECK(sq / big / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() ==
        "41152263004115226300411522630");
}

TEST_CASE("multiply") {
  auto x = letters({0, 0});
  CHECK(poly(x, "x1") * poly(x, "x2") == poly(x, "x1x2"));
  CHECK(poly(x, "x1 + x2") * poly(x, "x1") == poly(x, "x1x1 + x2x1"));
  CHECK((SuperPolynomial(x) * poly(x, "x2")).is_zero());
  auto y = letters({0, 1}, "y");
  CHECK_THROWS_AS(poly(x, "x1") * poly(y, "y1"), Error);
}

TEST_CASE("super_bracket") {
  auto odd = letters({1});
  CHECK(super_bracket(poly(odd, "x1"), poly(odd, "x1")) == poly(odd, "2 x1x1"));
  auto even = letters({0, 0});
  CHECK(super_bracket(poly(even, "x1"), poly(even, "x1")).is_zero());
  CHECK(super_bracket(poly(even, "x2"), poly(even, "x1")) == poly(even, "x2x1 - x1x2"));
  auto mixed = letters({0, 1});
  CHECK_THROWS_AS(super_bracket(poly(mixed, "x1 + x2"), poly(mixed, "x1")), Error);
}

TEST_CASE("expand_naword") {
  auto x = letters({0, 0});
  CHECK(expand_naword(NAWord::leaf(0), x) == poly(x, "x1"));
  CHECK(expand_naword(parse_naword("[x2 x1]", *x), x) == poly(x, "x2x1 - x1x2"));
  auto e = expand_naword(parse_naword("[[x2 x1] x1]", *x), x);
  CHECK(e == poly(x, "x2x1x1 - 2 x1x2x1 + x1x1x2"));
  CHECK(e.leading_word() == x->parse_word("x2x1x1"));
  CHECK(e.leading_coefficient() == Rational(1));
}

TEST_CASE("leading word and monic") {
  auto x = letters({0, 0});
  auto [w1, c1] = leading_word(poly(x, "x2x1 - x1x2"));
  CHECK(w1 == x->parse_word("x2x1"));
  CHECK(c1 == Rational(1));
  auto [w2, c2] = leading_word(poly(x, "3 x1 + x1x2"));
  CHECK(w2 == x->parse_word("x1x2"));
  CHECK(c2 == Rational(1));
  auto [w3, c3] = leading_word(poly(x, "2 x1x1"));
  CHECK(w3 == x->parse_word("x1x1"));
  CHECK(c3 == Rational(2));
  CHECK(make_monic(poly(x, "2 x1x1")) == poly(x, "x1x1"));
  CHECK(make_monic(poly(x, "-1/2 x2 + 3 x1x1")) == poly(x, "-1/6 x2 + x1x1"));
  try {
    leading_word(SuperPolynomial(x));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::zero_polynomial);
  }
  CHECK_THROWS_AS(make_monic(SuperPolynomial(x)), Error);
}

TEST_CASE("is_lie_element") {
  auto x = letters({0, 0});
  CHECK(is_lie_element(expand_naword(parse_naword("[[x2 x1] [x2 [x2 x1]]]", *x), x)));
  CHECK_FALSE(is_lie_element(poly(x, "x1x2")));
  CHECK(is_lie_element(SuperPolynomial(x)));
  auto odd = letters({1, 0});
  CHECK(is_lie_element(poly(odd, "x1x1")));
  CHECK_FALSE(is_lie_element(poly(x, "x1x1")));
}

TEST_CASE("polynomial text syntax") {
  auto x = std::make_shared<const Alphabet>(std::vector<GradedLetter>{
      {"e1", 0, 0}, {"e2", 1, 1}});
  auto p = parse_polynomial("[e2 [e2 e1]] - 1/2 e1e1e2", x);
  CHECK(format_polynomial(parse_polynomial(format_polynomial(p), x)) ==
        format_polynomial(p));
  CHECK(parse_polynomial("0", x).is_zero());
  CHECK(parse_polynomial("e1 - e1", x).is_zero());
  CHECK(parse_polynomial("2 e1 e2", x) == parse_polynomial("2 e1e2", x));
  CHECK(format_polynomial(parse_polynomial("-e1 + 3", x)) == "-e1 + 3");
  try {
    parse_polynomial("e1 + [e2 e3]", x);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_polynomial("e1 e2 2", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("e1 +", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[e1 e2", x), ParseError);
}

TEST_CASE("super antisymmetry and super Jacobi (property)") {
  std::mt19937_64 rng(99);
  auto x = letters({0, 1, 1});
  std::uniform_int_distribution<int> len(1, 3), par(0, 1);
  for (int i = 0; i < 150; ++i) {
    auto p = testing::random_homogeneous(rng, x, len(rng), par(rng), 3);
    auto q = testing::random_homogeneous(rng, x, len(rng), par(rng), 3);
    auto r = testing::random_homogeneous(rng, x, len(rng), par(rng), 2);
    int dp = *p.parity(), dq = *q.parity();
    Rational s = (dp & dq) ? Rational(-1) : Rational(1);
    CHECK(super_bracket(p, q) == -(s * super_bracket(q, p)));
    auto lhs = super_bracket(p, super_bracket(q, r));
    auto rhs = super_bracket(super_bracket(p, q), r) + s * super_bracket(q, super_bracket(p, r));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("super-LS monomial expansions form a basis (length <= 5)") {
  for (auto parities : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    auto x = letters(parities);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<SuperPolynomial> rows;
      for (const auto& u : testing::all_words(2, n)) {
        if (!is_super_lyndon_shirshov_word(u, *x)) continue;
        auto e = expand_naword(canonical_bracketing(u, *x), x);
        CHECK(e.leading_word() == u);
        CHECK(e == expand_canonical(u, x));
        rows.push_back(e);
      }
      CHECK(testing::rank_of(rows) == rows.size());
    }
  }
}
