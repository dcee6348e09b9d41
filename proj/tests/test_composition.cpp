#include <doctest.h>

#include <random>

#include "superlie/composition.hpp"
#include "superlie/error.hpp"
#include "support.hpp"

using namespace superlie;
using testing::letters;
using testing::poly;
using testing::w;

namespace {

RelationSet relations(const AlphabetPtr& x, std::initializer_list<const char*> text) {
  RelationSet s(x);
  for (auto t : text) s.add(poly(x, t));
  return s;
}

// Random sum of alpha * a * s * b over the relations.
SuperPolynomial random_ideal_element(std::mt19937_64& rng, const RelationSet& s,
                                     int terms) {
  const auto& x = s.alphabet();
  SuperPolynomial sum(x);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int k = 0; k < terms; ++k) {
    const auto& r = s[rng() % s.size()].poly;
    Word a = testing::random_word(rng, x->size(), rng() % 3);
    Word b = testing::random_word(rng, x->size(), rng() % 3);
    sum += r.sandwich(Rational(coeff(rng)), a, b);
  }
  return sum;
}

}  // namespace

TEST_CASE("find_overlaps") {
  auto x = letters({0, 0});
  auto p = poly(x, "x2x2x1");
  auto q = poly(x, "x2x1x1");
  auto o = find_overlaps(p, q, 0, 1);
  REQUIRE(o.size() == 1);
  CHECK(o[0].kind == OverlapKind::intersection);
  CHECK(o[0].w == w(x, "x2x2x1x1"));
  CHECK(o[0].a == w(x, "x1"));
  CHECK(o[0].b == w(x, "x2"));

  auto inc = find_overlaps(poly(x, "x2x1x2"), poly(x, "x1"), 0, 1);
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].kind == OverlapKind::inclusion);
  CHECK(inc[0].a == w(x, "x2"));
  CHECK(inc[0].b == w(x, "x2"));

  // x1x1 with itself: one proper intersection, no trivial inclusion.
  auto self = find_overlaps(poly(x, "x1x1"), poly(x, "x1x1"), 0, 0, true);
  REQUIRE(self.size() == 1);
  CHECK(self[0].w == w(x, "x1x1x1"));
}

TEST_CASE("assoc_composition") {
  auto x = letters({0, 0});
  auto p = poly(x, "x2x1 - x1");
  auto o = find_overlaps(p, p, 0, 0, true);
  CHECK(o.empty());
  auto q = poly(x, "x1x1 - x2");
  auto pq = find_overlaps(p, q, 0, 1);
  REQUIRE(pq.size() == 1);
  // (x2x1 - x1) x1 - x2 (x1x1 - x2) = -x1x1 + x2x2
  CHECK(assoc_composition(pq[0], p, q) == poly(x, "x2x2 - x1x1"));
}

TEST_CASE("commutative relations are closed in both modes") {
  auto x = letters({0, 0, 0});
  auto s = relations(x, {"[x2 x1]", "[x3 x1]", "[x3 x2]"});
  CHECK(is_closed(s, Mode::associative).closed());
  CHECK(is_closed(s, Mode::lie).closed());
  auto e = check_equivalence(s);
  CHECK(e.lie_closed);
  CHECK(e.agree());
}

TEST_CASE("a non-closed set reports its residue") {
  auto x = letters({0, 0});
  auto s = relations(x, {"x2x1 - x1", "x1x1 - x2"});
  auto r = is_closed(s, Mode::associative);
  CHECK_FALSE(r.closed());
  CHECK(r.compositions >= 1);
  auto c = complete(s, Mode::associative, 6);
  CHECK(c.fixpoint);
  CHECK(is_closed(c.set, Mode::associative).closed());
}

TEST_CASE("sl(3) Serre relations complete to three reduced monomials") {
  auto x = letters({0, 0}, "e");
  auto s = relations(x, {"[e2 [e2 e1]]", "[[e2 e1] e1]"});
  auto c = complete(s, Mode::lie, 6);
  CHECK(c.fixpoint);
  auto basis = enumerate_reduced_super_ls_monomials(c.set, *x, 8);
  CHECK(basis.size() == 3);
  auto m = c.set.minimal_leading_words();
  CHECK(m.size() == 2);
}

TEST_CASE("odd square completion") {
  // One odd letter with [y1 y1] = 0 is closed; [y1 y1 ... ] needs nothing.
  auto y = letters({1}, "y");
  auto s = relations(y, {"[y1 y1]"});
  CHECK(is_closed(s, Mode::lie).closed());
  CHECK(is_closed(s, Mode::associative).closed());
  auto basis = enumerate_reduced_super_ls_monomials(s, *y, 6);
  CHECK(basis.size() == 1);
}

TEST_CASE("ideal elements of a closed set reduce to zero (property)") {
  auto x = letters({0, 1});
  auto s = relations(x, {"[x2 [x2 x1]]", "[[x2 x1] x1]"});
  auto c = complete(s, Mode::lie, 7);
  REQUIRE(c.fixpoint);
  REQUIRE(is_closed(c.set, Mode::associative).closed());
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    auto p = random_ideal_element(rng, c.set, 1 + int(rng() % 4));
    CHECK(normal_form_assoc(p, c.set).is_zero());
  }
}

TEST_CASE("Lie and associative closure verdicts agree (property)") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> parities;
    std::size_t k = 2 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) parities.push_back(int(rng() % 2));
    auto x = letters(parities);
    RelationSet s(x);
    auto ls = enumerate_ls_words(*x, 4);
    for (int r = 0; r < 2; ++r) {
      const Word& u = ls[rng() % ls.size()];
      if (u.size() < 2) continue;
      auto p = expand_canonical(u, x);
      // Add a second monomial of the same length and parity.
      for (const auto& v : ls)
        if (v.size() == u.size() && v != u &&
            word_parity(v, *x) == word_parity(u, *x) && rng() % 2) {
          p += Rational(int(rng() % 5) - 2) * expand_canonical(v, x);
          break;
        }
      if (!p.is_zero()) s.add(p);
    }
    if (s.empty()) continue;
    CHECK(check_equivalence(s).agree());
  }
}

TEST_CASE("lie_composition needs a super-LS witness") {
  auto x = letters({0, 0});
  auto o = find_overlaps(poly(x, "x1x1x2"), poly(x, "x1x2"), 0, 1);
  // x1x1x2 is not super-LS as a leading word of a Lie element.
  REQUIRE_FALSE(o.empty());
  CHECK_THROWS_AS(lie_composition(o[0], poly(x, "x1x1x2"), poly(x, "x1x2")), Error);
}
