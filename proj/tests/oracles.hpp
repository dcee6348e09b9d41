#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance run.

#include <vector>

#include "superlie/alphabet.hpp"
#include "superlie/words.hpp"

namespace testing::oracle {

using namespace superlie;

// vw > wv for every split.
inline bool ls_oracle(const Word& u) {
  if (u.size() == 1) return true;
  for (std::size_t k = 1; k < u.size(); ++k) {
    Word v = u.subword(0, k), w = u.subword(k);
    if (compare_lex(v + w, w + v) <= 0) return false;
  }
  return true;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline long witt(int q, int n) {
  long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= q;
    sum += mobius(d) * pw;
  }
  return sum / n;
}

inline std::vector<NAWord> all_bracketings(const Word& u, std::size_t i, std::size_t j) {
  if (j == i + 1) return {NAWord::leaf(u[i])};
  std::vector<NAWord> out;
  for (std::size_t k = i + 1; k < j; ++k)
    for (const auto& l : all_bracketings(u, i, k))
      for (const auto& r : all_bracketings(u, k, j)) out.push_back(NAWord::bracket(l, r));
  return out;
}

// Independent transcription of the monomial conditions: children are
// monomials with left word > right word, and a bracketed left child (v1 v2)
// has v2 <= right word. Odd squares ([v][v]) are admitted at the top only.
inline bool monomial_oracle(const NAWord& t) {
  if (t.is_leaf()) return true;
  Word l = remove_brackets(t.left()), r = remove_brackets(t.right());
  if (!(compare_lex(l, r) > 0)) return false;
  if (!t.left().is_leaf() && compare_lex(remove_brackets(t.left().right()), r) > 0)
    return false;
  return monomial_oracle(t.left()) && monomial_oracle(t.right());
}

inline bool super_monomial_oracle(const NAWord& t, const Alphabet& x) {
  if (monomial_oracle(t)) return true;
  return !t.is_leaf() && t.left() == t.right() && monomial_oracle(t.left()) &&
         word_parity(remove_brackets(t.left()), x) == 1;
}

// Coefficients of (1+t)^odd / (1-t)^even through t^max.
inline std::vector<long> pbw_series(long even, long odd, std::size_t max) {
  std::vector<long> num(max + 1, 0), den(max + 1, 0), out(max + 1, 0);
  // binomial(odd, k)
  long b = 1;
  for (std::size_t k = 0; k <= max; ++k) {
    num[k] = long(k) <= odd ? b : 0;
    b = b * (odd - long(k)) / long(k + 1);
  }
  // binomial(even + k - 1, k)
  for (std::size_t k = 0; k <= max; ++k) {
    long c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (even + long(i) - 1) / long(i);
    den[k] = even == 0 ? (k == 0) : c;
  }
  for (std::size_t i = 0; i <= max; ++i)
    for (std::size_t j = 0; i + j <= max; ++j) out[i + j] += num[i] * den[j];
  return out;
}

}  // namespace testing::oracle
