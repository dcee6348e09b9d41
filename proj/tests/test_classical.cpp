#include <doctest.h>

#include <random>

#include "superlie/classical.hpp"
#include "superlie/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace superlie;
using testing::oracle::pbw_series;

namespace {

FamilySpec fam(FamilyTag t, int m, int n) { return {t, m, n}; }

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

std::vector<Rational> scaled(std::vector<Rational> v, const Rational& c) {
  for (auto& a : v) a = c * a;
  return v;
}

std::vector<Rational> plus(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

}  // namespace

TEST_CASE("FamilySpec names and ranges") {
  CHECK(fam(FamilyTag::SL, 2, 1).name() == "SL(2,1)");
  CHECK(FamilySpec::from_name("b0", 5, 3).name() == "B0(3)");
  CHECK(FamilySpec::from_name("C", 0, 2).tag == FamilyTag::C);
  CHECK_THROWS_AS(FamilySpec::from_name("x", 1, 1), Error);
  CHECK_THROWS_AS(fam(FamilyTag::D, 1, 1).validate(), Error);
  CHECK_THROWS_AS(fam(FamilyTag::C, 0, 1).validate(), Error);
  CHECK_THROWS_AS(fam(FamilyTag::SL, 0, 1).validate(), Error);
  CHECK_NOTHROW(fam(FamilyTag::D, 2, 1).validate());
}

TEST_CASE("family Cartan data are valid") {
  for (auto f : {fam(FamilyTag::SL, 2, 1), fam(FamilyTag::SL, 1, 2), fam(FamilyTag::B, 1, 1),
                 fam(FamilyTag::B, 2, 1), fam(FamilyTag::B0, 0, 2), fam(FamilyTag::C, 0, 3),
                 fam(FamilyTag::D, 2, 1), fam(FamilyTag::D, 2, 2)}) {
    for (auto reading : {Reading::literal, Reading::corrected}) {
      auto c = family_cartan(f, reading);
      CHECK(c.rank == f.m + f.n - (f.tag == FamilyTag::SL ? 1 : 0));
      CHECK(validate_cartan(c).empty());
    }
  }
  auto sl = family_cartan(fam(FamilyTag::SL, 2, 2));
  CHECK(sl.tau == std::vector<int>{2});
  CHECK(sl.at(2, 2) == 0);
  CHECK(sl.at(2, 3) == 1);
  CHECK(sl.at(2, 1) == -1);
}

TEST_CASE("dimension formulas") {
  CHECK(dimension_formula(fam(FamilyTag::SL, 2, 1)) == 8);
  CHECK(dimension_formula(fam(FamilyTag::B, 1, 1)) == 12);
  CHECK(dimension_formula(fam(FamilyTag::B0, 0, 1)) == 5);
  CHECK(dimension_formula(fam(FamilyTag::C, 0, 2)) == 8);
  CHECK(dimension_formula(fam(FamilyTag::D, 2, 1)) == 17);
}

TEST_CASE("SL(2,1) reduced basis, closure-free count") {
  auto f = fam(FamilyTag::SL, 2, 1);
  CHECK(reduced_basis(f).size() == 8);
  CHECK(reduced_words_beyond_cap(f).empty());
  CHECK(basis_length_cap(f) == 6);
}

TEST_CASE("matrix arithmetic") {
  auto e12 = Matrix::unit(3, 1, 2), e21 = Matrix::unit(3, 2, 1);
  CHECK(e12 * e21 == Matrix::unit(3, 1, 1));
  CHECK((e12 * e12).is_zero());
  CHECK(Matrix::identity(2) - Matrix::unit(2, 1, 1) == Matrix::unit(2, 2, 2));
  CHECK(Rational(3) * e12 == e12 + e12 + e12);
}

TEST_CASE("SL(2,1) generator matrices") {
  auto rep = matrix_generators(fam(FamilyTag::SL, 2, 1));
  REQUIRE(rep.size == 3);
  REQUIRE(rep.z.size() == 2);
  CHECK(rep.z[1] == Matrix::unit(3, 2, 2) + Matrix::unit(3, 3, 3));
  for (std::size_t i = 0; i < rep.x.size(); ++i) {
    CHECK(rep.supertrace(rep.x[i]).is_zero());
    CHECK(rep.supertrace(rep.y[i]).is_zero());
    CHECK(rep.supertrace(rep.z[i]).is_zero());
    CHECK(rep.homogeneous(rep.x[i], rep.parity[i]));
  }
  auto report = verify_by_matrices(fam(FamilyTag::SL, 2, 1));
  CHECK(report.ok());
  CHECK(report.checked > 0);
}

TEST_CASE("C matrix check is gated") {
  auto report = verify_by_matrices(fam(FamilyTag::C, 0, 2));
  CHECK(report.skipped);
  CHECK_FALSE(report.ok());
}

TEST_CASE("matrix images of relations: a nonzero element is detected") {
  auto f = fam(FamilyTag::SL, 2, 1);
  auto rep = matrix_generators(f);
  auto x = km_alphabet(family_cartan(f));
  CHECK_FALSE(rep.evaluate(parse_polynomial("[e2 e1]", x)).is_zero());
  CHECK(rep.evaluate(parse_polynomial("[e2 [e2 e1]]", x)).is_zero());
}

TEST_CASE("SL(2,1) structure constants: super antisymmetry and super Jacobi") {
  auto t = structure_constants(fam(FamilyTag::SL, 2, 1));
  const std::size_t d = t.dim();
  REQUIRE(d == 8);
  auto sign = [&](std::size_t i, std::size_t j) {
    return (t.parity[i] & t.parity[j]) ? Rational(1) : Rational(-1);
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto a = t.bracket(unit_vector(d, i), unit_vector(d, j));
      auto b = t.bracket(unit_vector(d, j), unit_vector(d, i));
      // [a,b] = -(-1)^{|a||b|} [b,a]
      CHECK(a == scaled(b, sign(i, j)));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        auto lhs = t.bracket(ei, t.bracket(ej, ek));
        Rational s = (t.parity[i] & t.parity[j]) ? Rational(-1) : Rational(1);
        auto rhs = plus(t.bracket(t.bracket(ei, ej), ek), scaled(t.bracket(ej, t.bracket(ei, ek)), s));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("PBW counts follow the generating function") {
  for (auto f : {fam(FamilyTag::SL, 2, 1), fam(FamilyTag::B, 1, 1)}) {
    auto t = structure_constants(f);
    long even = 0, odd = 0;
    for (auto p : t.parity) (p ? odd : even)++;
    auto pbw = enumerate_pbw_basis(t, 4);
    auto expect = pbw_series(even, odd, 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(long(pbw.counts[k]) == expect[k]);
  }
  CHECK(pbw_series(1, 1, 3) == std::vector<long>{1, 2, 2, 2});
}

TEST_CASE("pbw_degree") {
  auto x = testing::letters({0, 1});
  CHECK(pbw_degree(Word(), *x) == 0);
  CHECK(pbw_degree(testing::w(x, "x2x1"), *x) == 1);
  CHECK(pbw_degree(testing::w(x, "x1x1"), *x) == 2);
  // x2x2 is the odd square: one factor; x2x2x2 is two.
  CHECK(pbw_degree(testing::w(x, "x2x2"), *x) == 1);
  CHECK(pbw_degree(testing::w(x, "x2x2x2"), *x) == 2);
}

TEST_CASE("R+ relations are Lie elements with super-LS leading words") {
  for (auto f : {fam(FamilyTag::SL, 2, 2), fam(FamilyTag::B0, 0, 2), fam(FamilyTag::C, 0, 3)}) {
    auto r = family_positive_relations(f);
    REQUIRE_FALSE(r.empty());
    std::size_t longest = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(is_super_lyndon_shirshov_word(r.leading_word(i), *r.alphabet()));
      CHECK(is_lie_element(r[i].poly));
      longest = std::max(longest, r.leading_word(i).size());
    }
    CHECK(family_degree_bound(f) == longest);
  }
}

TEST_CASE("SL(2,1) explicit relations: all but the odd-node III are essential") {
  // [e2 [e2 e1]] = 1/2 [[e2 e2] e1] lies in the ideal of IV(0,0) = [e2 e2],
  // so dropping III(2,2) changes nothing. Every other relation is needed.
  auto f = fam(FamilyTag::SL, 2, 1);
  auto plus = family_positive_relations(f);
  auto full = family_relations(f);
  const auto& x = full.alphabet();
  REQUIRE(plus.size() > 0);
  for (std::size_t drop = 0; drop < plus.size(); ++drop) {
    RelationSet s(x);
    for (const auto& r : full.relations())
      if (!(r.poly == plus[drop].poly) && !(r.poly == mirror_to_f(plus[drop].poly)))
        s.add(r.poly, r.lie, r.label);
    bool closed = is_closed(s, Mode::lie).closed();
    auto basis = enumerate_reduced_super_ls_monomials(s, *x, basis_length_cap(f));
    bool essential = !closed || basis.size() > dimension_formula(f);
    INFO("dropped " << plus[drop].label << " closed " << closed << " basis " << basis.size());
    CHECK(essential == (plus[drop].label != "III(2,2)"));
    if (!essential) CHECK(normal_form_lie(plus[drop].poly, s).is_zero());
  }
}
