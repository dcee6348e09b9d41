#include <doctest.h>

#include <algorithm>
#include <random>

#include "superlie/error.hpp"
#include "superlie/kacmoody.hpp"
#include "support.hpp"

using namespace superlie;

namespace {

CartanData sl3() { return CartanData::parse("rank 2\ntau\n2 -1\n-1 2\n"); }

// sl(2|1)-type datum with the odd node first.
CartanData sl21() { return CartanData::parse("rank 2\ntau 1\n0 1\n-1 2\n"); }

// SL(2,2)-type: odd middle node of an A3 diagram.
CartanData sl22() { return CartanData::parse("rank 3\ntau 2\n2 -1 0\n-1 0 1\n0 -1 2\n"); }

SuperPolynomial letter(const KMPresentation& km, Letter l) {
  return SuperPolynomial::monomial(km.alphabet, Word::single(l));
}

// Random E-supported polynomial of uniform length, parity and root weight:
// a combination of permutations of one random multiset of e letters.
SuperPolynomial random_e_poly(std::mt19937_64& rng, const KMPresentation& km,
                              std::size_t len) {
  std::vector<Letter> base;
  for (std::size_t k = 0; k < len; ++k) base.push_back(km.e(1 + int(rng() % km.rank())));
  std::vector<Term> terms;
  for (int t = 0; t < 4; ++t) {
    auto perm = base;
    std::shuffle(perm.begin(), perm.end(), rng);
    terms.push_back({Word(perm), Rational(int(rng() % 7) - 3)});
  }
  return SuperPolynomial::from_terms(km.alphabet, std::move(terms));
}

}  // namespace

TEST_CASE("Cartan data text format") {
  auto c = CartanData::parse("# comment\nrank 2\ntau 1\n0 1  # row 1\n-1 2\n");
  CHECK(c.rank == 2);
  CHECK(c.odd(1));
  CHECK_FALSE(c.odd(2));
  CHECK(c.at(1, 2) == 1);
  CHECK(CartanData::parse(c.to_text()).a == c.a);

  try {
    CartanData::parse("rank 2\ntau\n2 -1\n-1 x\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(CartanData::parse(""), ParseError);
  CHECK_THROWS_AS(CartanData::parse("rank 2\ntau 3\n2 -1\n-1 2\n"), ParseError);
  CHECK_THROWS_AS(CartanData::parse("rank 2\ntau\n2 -1\n"), ParseError);
  CHECK_THROWS_AS(CartanData::parse("rank 2\ntau\n2 -1 0\n-1 2\n"), ParseError);
}

TEST_CASE("validate_cartan") {
  CHECK(validate_cartan(sl3()).empty());
  CHECK(validate_cartan(sl21()).empty());

  auto even_zero = CartanData::parse("rank 2\ntau\n0 -1\n-1 2\n");
  auto v = validate_cartan(even_zero);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].condition == 1);

  auto positive = CartanData::parse("rank 2\ntau\n2 1\n-1 2\n");
  v = validate_cartan(positive);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].condition == 2);

  auto asym = CartanData::parse("rank 2\ntau\n2 0\n-1 2\n");
  v = validate_cartan(asym);
  REQUIRE(v.size() == 2);
  CHECK(v[0].condition == 3);

  auto odd_row = CartanData::parse("rank 2\ntau 1\n2 -1\n-2 2\n");
  v = validate_cartan(odd_row);
  REQUIRE(v.size() == 1);
  CHECK(v[0].condition == 4);
  CHECK(v[0].i == 1);
  CHECK(v[0].j == 2);

  CHECK_THROWS_AS(build_relations(odd_row), Error);
}

TEST_CASE("n_coefficient") {
  auto c = sl21();
  CHECK(n_coefficient(c, 1, 2) == -1);  // a_11 = 0, a_12 = 1
  CHECK(n_coefficient(c, 2, 1) == -1);
  CHECK(n_coefficient(sl3(), 1, 2) == -1);
  auto b = CartanData::parse("rank 2\ntau\n2 -2\n-1 2\n");
  CHECK(n_coefficient(b, 1, 2) == -2);
  CHECK_THROWS_AS(n_coefficient(c, 1, 1), Error);
  CHECK_THROWS_AS(n_coefficient(c, 0, 1), Error);
  CHECK_THROWS_AS(n_coefficient(c, 1, 3), Error);
}

TEST_CASE("eta_set") {
  CHECK(eta_set(sl22()) == std::vector<int>{2});
  CHECK(eta_set(sl3()).empty());
  CHECK(eta_set(sl21()).empty());  // the odd node is not interior
}

TEST_CASE("Kac-Moody alphabet and letter kinds") {
  auto c = sl21();
  auto x = km_alphabet(c);
  REQUIRE(x->size() == 6);
  CHECK(x->name(f_letter(2, 1)) == "f1");
  CHECK(x->name(h_letter(2, 2)) == "h2");
  CHECK(x->name(e_letter(2, 1)) == "e1");
  CHECK(x->parity(e_letter(2, 1)) == 1);
  CHECK(x->parity(f_letter(2, 1)) == 1);
  CHECK(x->parity(h_letter(2, 1)) == 0);
  CHECK(km_letter_kind(*x, e_letter(2, 2)) == std::pair{LetterFamily::e, 2});
  CHECK(km_letter_kind(*x, f_letter(2, 1)) == std::pair{LetterFamily::f, 1});
}

TEST_CASE("build_relations for sl(3)") {
  auto km = build_relations(sl3());
  // hh: 1, ef: 4, eh: 4, hf: 4
  CHECK(km.w.size() == 13);
  REQUIRE(km.s_plus.size() == 2);
  CHECK(km.s_minus.size() == 2);
  CHECK(km.all().size() == 17);
  auto x = km.alphabet;
  CHECK(km.s_plus[0].poly == parse_polynomial("[e2 [e2 e1]]", x).make_monic());
  CHECK(km.s_minus[0].poly == mirror_to_f(km.s_plus[0].poly));
  CHECK(km.s_plus[0].label == "serre(2,1)");
}

TEST_CASE("build_relations for SL(2,2) has the quartic relation") {
  auto km = build_relations(sl22());
  bool quartic = false;
  for (const auto& r : km.s_plus.relations()) quartic |= r.label == "quartic(2)";
  CHECK(quartic);
  // [e2 e2] is the odd square with a_22 = 0.
  auto sq = parse_polynomial("[e2 e2]", km.alphabet);
  CHECK_FALSE(sq.is_zero());
}

TEST_CASE("mirror_to_f and diff_substitution reject non-E input") {
  auto km = build_relations(sl3());
  auto x = km.alphabet;
  CHECK_THROWS_AS(mirror_to_f(parse_polynomial("h1", x)), Error);
  CHECK_THROWS_AS(diff_substitution(parse_polynomial("e1f1", x), 1), Error);
  CHECK_THROWS_AS(diff_substitution(parse_polynomial("e1", x), 3), Error);
  CHECK(diff_substitution(parse_polynomial("e2e1e2", x), 2) ==
        parse_polynomial("h2e1e2 + e2e1h2", x));
}

TEST_CASE("diff_substitution sign for an odd letter") {
  auto km = build_relations(sl21());
  auto x = km.alphabet;
  // e1 odd: the occurrence left of an odd suffix picks up a sign.
  CHECK(diff_substitution(parse_polynomial("e1e1", x), 1) ==
        parse_polynomial("e1h1 - h1e1", x));
  CHECK(diff_substitution(parse_polynomial("e1e2", x), 1) ==
        parse_polynomial("h1e2", x));
}

TEST_CASE("[p, f_j] equals the substituted derivation modulo W (property)") {
  std::mt19937_64 rng(314);
  for (const auto& c : {sl3(), sl21(), sl22()}) {
    auto km = build_relations(c);
    for (int t = 0; t < 40; ++t) {
      auto p = random_e_poly(rng, km, 1 + rng() % 4);
      if (p.is_zero()) continue;
      int j = 1 + int(rng() % c.rank);
      auto q = super_bracket(p, letter(km, km.f(j))) - diff_substitution(p, j);
      CHECK(normal_form_assoc(q, km.w).is_zero());
    }
  }
}

TEST_CASE("diff_substitution is a right superderivation (property)") {
  std::mt19937_64 rng(17);
  auto km = build_relations(sl21());
  for (int t = 0; t < 40; ++t) {
    auto u = random_e_poly(rng, km, 1 + rng() % 3);
    auto v = random_e_poly(rng, km, 1 + rng() % 3);
    if (u.is_zero() || v.is_zero()) continue;
    int j = 1 + int(rng() % 2);
    Parity pv = *v.parity(), pj = km.alphabet->parity(km.e(j));
    Rational sign = (pv & pj) ? Rational(-1) : Rational(1);
    CHECK(diff_substitution(u * v, j) ==
          u * diff_substitution(v, j) + sign * (diff_substitution(u, j) * v));
  }
}

TEST_CASE("root_weight") {
  auto x = km_alphabet(sl3());
  auto wt = root_weight(x->parse_word("e1e2h1f1e1"), *x);
  CHECK(wt == std::vector<int>{1, 1});
}

TEST_CASE("assemble_gsb and triangular_split for sl(3)") {
  auto g = assemble_gsb(sl3(), 6, 1);
  CHECK(g.fixpoint);
  CHECK(g.closed);
  auto basis = enumerate_reduced_super_ls_monomials(g.set, *g.set.alphabet(), 8);
  CHECK(basis.size() == 8);
  auto split = triangular_split(basis, *g.set.alphabet());
  CHECK(split.plus.size() == 3);
  CHECK(split.zero.size() == 2);
  CHECK(split.minus.size() == 3);

  auto x = g.set.alphabet();
  std::vector<NAWord> mixed{parse_naword("[e1 f1]", *x)};
  CHECK_THROWS_AS(triangular_split(mixed, *x), Error);
}

TEST_CASE("in_bounded_ideal") {
  auto km = build_relations(sl3());
  auto x = km.alphabet;
  auto s = km.s_plus;
  auto p = parse_polynomial("[e1 [e2 [e2 e1]]]", x);
  CHECK(in_bounded_ideal(p, s, 4));
  CHECK_FALSE(in_bounded_ideal(p, s, 3));
  CHECK_FALSE(in_bounded_ideal(parse_polynomial("[e2 e1]", x), s, 6));
  CHECK(in_bounded_ideal(SuperPolynomial(x), s, 1));
}
