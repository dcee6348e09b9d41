#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/alphabet.hpp"

namespace superlie {

/// Nonassociative word: an immutable binary tree with letters at the leaves.
/// Copies share structure.
class NAWord {
 public:
  static NAWord leaf(Letter x);
  static NAWord bracket(NAWord left, NAWord right);

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  Letter letter() const noexcept { return node_->letter; }
  NAWord left() const { return NAWord(node_->left); }
  NAWord right() const { return NAWord(node_->right); }
  std::size_t length() const noexcept { return node_->length; }

  friend bool operator==(const NAWord& a, const NAWord& b);

 private:
  struct Node {
    Letter letter = 0;
    std::shared_ptr<const Node> left, right;
    std::size_t length = 1;
  };
  explicit NAWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Leaf sequence of `t`.
Word remove_brackets(const NAWord& t);

/// A letter, or a word u with vw > wv (compare_lex) for every split u = vw.
/// Throws empty_word.
bool is_lyndon_shirshov_word(const Word& u, const Alphabet& x);

/// LS word, or vv with v an odd LS word. Throws empty_word.
bool is_super_lyndon_shirshov_word(const Word& u, const Alphabet& x);

/// Longest proper LS suffix of an LS word of length >= 2; returns its start.
std::size_t shirshov_split(const Word& u);

/// All LS words of length <= max_len, sorted by compare_deglex.
std::vector<Word> enumerate_ls_words(const Alphabet& x, std::size_t max_len);

/// The super-LS monomial [u]. Throws not_super_ls.
NAWord canonical_bracketing(const Word& u, const Alphabet& x);

bool is_super_ls_monomial(const NAWord& t, const Alphabet& x);

/// Factorization u = c1 c2 ... ck into LS words with c1 <= c2 <= ... <= ck.
std::vector<Word> ls_factorization(const Word& u);

/// Depth-first enumeration of prenecklaces. The callback receives every
/// prefix (letters, period); it returns false to prune the subtree. A
/// prefix is an LS word iff its period equals its length.
void for_each_prenecklace(std::size_t alphabet_size, std::size_t max_len,
                          const std::function<bool(const Word&, std::size_t)>& visit);

/// `[t1 t2]` syntax; `[t1 t2 ... tk]` is read as t1[t2 ... tk].
NAWord parse_naword(std::string_view text, const Alphabet& x);
/// Parses one leaf or bracket starting at `pos` (leading blanks skipped) and
/// advances `pos` past it. Errors report line 1 and a 1-based column.
NAWord parse_naword_at(std::string_view text, std::size_t& pos,
                       const Alphabet& x);
std::string format_naword(const NAWord& t, const Alphabet& x);

}  // namespace superlie
