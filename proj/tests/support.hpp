#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superlie/alphabet.hpp"
#include "superlie/polynomial.hpp"

namespace testing {

using namespace superlie;

// Letters x1 < x2 < ... with the given parities.
inline AlphabetPtr letters(std::vector<int> parities, std::string stem = "x") {
  std::vector<GradedLetter> v;
  for (std::size_t i = 0; i < parities.size(); ++i)
    v.push_back({stem + std::to_string(i + 1), parities[i], int(i)});
  return std::make_shared<const Alphabet>(std::move(v));
}

inline Word w(const AlphabetPtr& x, const std::string& text) {
  return x->parse_word(text);
}

inline SuperPolynomial poly(const AlphabetPtr& x, const std::string& text) {
  return parse_polynomial(text, x);
}

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet_size,
                        std::size_t len) {
  std::uniform_int_distribution<int> d(0, int(alphabet_size) - 1);
  Word u;
  for (std::size_t i = 0; i < len; ++i) u.push_back(Letter(d(rng)));
  return u;
}

// All words of length exactly n over k letters.
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& u : out)
      for (std::size_t c = 0; c < k; ++c) next.push_back(u + Word::single(Letter(c)));
    out = std::move(next);
  }
  return out;
}

// Random polynomial whose words all have the given length and parity.
inline SuperPolynomial random_homogeneous(std::mt19937_64& rng,
                                          const AlphabetPtr& x, std::size_t len,
                                          Parity parity, int terms) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int tries = 0; int(t.size()) < terms && tries < 200; ++tries) {
    Word u = random_word(rng, x->size(), len);
    if (word_parity(u, *x) != parity) continue;
    int c = coeff(rng);
    if (c != 0) t.push_back({u, Rational(c)});
  }
  return SuperPolynomial::from_terms(x, std::move(t));
}

// Rank of a set of polynomials by exact Gaussian elimination on words.
inline std::size_t rank_of(std::vector<SuperPolynomial> rows) {
  std::size_t rank = 0;
  std::vector<SuperPolynomial> pivots;
  for (auto r : rows) {
    for (const auto& p : pivots) {
      Rational c = r.coefficient(p.leading_word());
      if (!c.is_zero()) r -= c * p;
    }
    if (r.is_zero()) continue;
    r = r.make_monic();
    for (auto& p : pivots) {
      Rational c = p.coefficient(r.leading_word());
      if (!c.is_zero()) p -= c * r;
    }
    pivots.push_back(r);
    ++rank;
  }
  return rank;
}

}  // namespace testing
