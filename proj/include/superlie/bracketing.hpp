#pragma once

#include <cstddef>
#include <vector>

#include "superlie/polynomial.hpp"

namespace superlie {

/// A bracketing (a[v]b) of u = avb in which one subtree stands for [v].
///
/// Substituting the monic expansion of [v] at `path` and multiplying by
/// `scalar` (1 or 1/2) gives a monic element with leading word u.
struct RelativeBracketing {
  NAWord expression;
  std::vector<bool> path;  // root to the [v] subtree; false = left child
  Rational scalar;
};

/// Throws occurrence_mismatch if u != avb, not_super_ls if u or v is not a
/// super-LS word, bracketing_failed if no valid bracketing is found.
RelativeBracketing relative_bracketing(const Word& u, const Word& a,
                                       const Word& v, const Word& b,
                                       const AlphabetPtr& x);
RelativeBracketing relative_bracketing(const Word& u, std::size_t offset,
                                       std::size_t length,
                                       const AlphabetPtr& x);

/// Expansion of `t` with the subtree at `path` replaced by `q`.
SuperPolynomial expand_with_substitution(const NAWord& t,
                                         const std::vector<bool>& path,
                                         const SuperPolynomial& q,
                                         const AlphabetPtr& x);

/// [u]_p: the relative bracketing of u around the occurrence of p's leading
/// word at `offset`, with p substituted. Monic with leading word u.
SuperPolynomial substitute_bracketing(const Word& u, const SuperPolynomial& p,
                                      std::size_t offset);
/// Same, at the leftmost occurrence of p's leading word.
SuperPolynomial substitute_bracketing(const Word& u, const SuperPolynomial& p);

}  // namespace superlie
