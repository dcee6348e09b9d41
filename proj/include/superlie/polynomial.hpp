#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/alphabet.hpp"
#include "superlie/rational.hpp"
#include "superlie/words.hpp"

namespace superlie {

struct Term {
  Word word;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free associative algebra on an alphabet, with exact
/// rational coefficients. Terms are kept sorted by compare_deglex, largest
/// first, with no zero coefficients. A default-constructed value is the zero
/// polynomial and is compatible with every alphabet.
class SuperPolynomial {
 public:
  SuperPolynomial() = default;
  explicit SuperPolynomial(AlphabetPtr x) : alphabet_(std::move(x)) {}

  static SuperPolynomial monomial(AlphabetPtr x, Word w, Rational c = 1);
  /// Combines like terms and sorts.
  static SuperPolynomial from_terms(AlphabetPtr x, std::vector<Term> terms);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws zero_polynomial.
  const Word& leading_word() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Word& w) const;

  /// Scaled so that the leading coefficient is 1. Throws zero_polynomial.
  SuperPolynomial make_monic() const;

  /// Common parity of all support words; nullopt if mixed. Zero has parity 0.
  std::optional<Parity> parity() const;
  /// Common length of all support words; nullopt if mixed or zero.
  std::optional<std::size_t> uniform_length() const;
  std::size_t max_length() const;

  SuperPolynomial operator-() const;
  friend SuperPolynomial operator+(const SuperPolynomial& p,
                                   const SuperPolynomial& q);
  friend SuperPolynomial operator-(const SuperPolynomial& p,
                                   const SuperPolynomial& q);
  friend SuperPolynomial operator*(const SuperPolynomial& p,
                                   const SuperPolynomial& q);
  friend SuperPolynomial operator*(const Rational& c, const SuperPolynomial& p);
  SuperPolynomial& operator+=(const SuperPolynomial& q) {
    return *this = *this + q;
  }
  SuperPolynomial& operator-=(const SuperPolynomial& q) {
    return *this = *this - q;
  }

  /// c * a * this * b.
  SuperPolynomial sandwich(const Rational& c, const Word& a,
                           const Word& b) const;

  friend bool operator==(const SuperPolynomial& p, const SuperPolynomial& q) {
    return p.terms_ == q.terms_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Term> terms_;
};

SuperPolynomial multiply(const SuperPolynomial& p, const SuperPolynomial& q);

/// pq - (-1)^{deg p deg q} qp. Throws non_homogeneous / alphabet_mismatch.
SuperPolynomial super_bracket(const SuperPolynomial& p,
                              const SuperPolynomial& q);

SuperPolynomial expand_naword(const NAWord& t, const AlphabetPtr& x);

/// Expansion of the canonical bracketing [u], cached per word and parity
/// pattern. Throws not_super_ls.
SuperPolynomial expand_canonical(const Word& u, const AlphabetPtr& x);

/// Leading word and coefficient. Throws zero_polynomial.
std::pair<Word, Rational> leading_word(const SuperPolynomial& p);
SuperPolynomial make_monic(const SuperPolynomial& p);

/// True iff p is a combination of expansions of super-LS monomials. Only the
/// components of length <= max_check_len are examined.
bool is_lie_element(
    const SuperPolynomial& p,
    std::size_t max_check_len = std::numeric_limits<std::size_t>::max());

/// Polynomial text syntax, e.g. `[e2 [e2 e1]] - 1/2 e1e1e2`. A term is an
/// optional rational coefficient followed by factors (letter runs or bracket
/// expressions) multiplied in order; `0` is the zero polynomial. Throws
/// ParseError with line 1 and the 1-based column.
SuperPolynomial parse_polynomial(std::string_view text, const AlphabetPtr& x);
std::string format_polynomial(const SuperPolynomial& p);

}  // namespace superlie
