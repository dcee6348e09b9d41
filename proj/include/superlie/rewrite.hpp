#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superlie/polynomial.hpp"

namespace superlie {

struct Relation {
  SuperPolynomial poly;  // monic
  bool lie = true;       // originates in the free Lie superalgebra
  std::string label;
};

/// Ordered set of monic relations with a subword index over leading words.
class RelationSet {
 public:
  explicit RelationSet(AlphabetPtr x);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  /// Appends p made monic. Exact duplicates are dropped (returns false).
  /// Throws zero_polynomial, alphabet_mismatch.
  bool add(const SuperPolynomial& p, bool lie = true, std::string label = {});
  /// Appends every relation of `other` in order.
  void add_all(const RelationSet& other);

  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  const Relation& operator[](std::size_t i) const { return relations_[i]; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Word& leading_word(std::size_t i) const {
    return relations_[i].poly.leading_word();
  }
  bool all_lie() const;

  struct Match {
    std::size_t relation;
    std::size_t offset;
  };
  /// Leftmost occurrence of a leading word in u; at that position the
  /// relation with the smallest index wins.
  std::optional<Match> find_reducible(const Word& u) const;
  bool is_reduced(const Word& u) const { return !find_reducible(u); }
  /// Whether some leading word is a suffix of u.
  bool has_suffix_match(const Word& u) const;

  /// Relations whose leading words contain no other leading word as a
  /// proper subword and are not repeated: the minimal obstructions.
  std::vector<Word> minimal_leading_words() const;

 private:
  struct Trie {
    std::size_t width = 0;
    std::vector<std::int32_t> child;     // node * width + letter, -1 if absent
    std::vector<std::int64_t> terminal;  // smallest relation index, -1 if none
    void init(std::size_t w);
    void insert(const Word& w, std::size_t index, bool reversed);
  };

  AlphabetPtr alphabet_;
  std::vector<Relation> relations_;
  Trie forward_, backward_;
};

bool is_s_reduced(const Word& u, const RelationSet& s);

/// One rewriting step a*s*b applied with coefficient alpha.
struct ReductionStep {
  Rational alpha;
  Word a;
  std::size_t relation;
  Word b;
};

/// Associative normal form: repeatedly rewrites the deglex-largest reducible
/// word at its leftmost occurrence. If `trace` is set, the steps are
/// appended so that p - result = sum alpha * a * s * b.
SuperPolynomial normal_form_assoc(const SuperPolynomial& p,
                                  const RelationSet& s,
                                  std::vector<ReductionStep>* trace = nullptr);

/// Lie normal form: subtracts alpha [u]_s while the leading word u is
/// reducible and moves irreducible leading monomials to the result. Throws
/// not_lie_element if a leading word is not super-LS.
SuperPolynomial normal_form_lie(const SuperPolynomial& p, const RelationSet& s);

/// Same as normal_form_lie, returning the coefficients of the result in the
/// basis of canonical bracketings of S-reduced super-LS words.
std::vector<std::pair<Word, Rational>> normal_form_lie_coordinates(
    const SuperPolynomial& p, const RelationSet& s);

/// S-reduced super-LS words of length <= max_len as canonical bracketings,
/// in deglex order.
std::vector<NAWord> enumerate_reduced_super_ls_monomials(
    const RelationSet& s, const Alphabet& x, std::size_t max_len);

/// S-reduced words of length <= max_len (including the empty word), in
/// deglex order.
std::vector<Word> enumerate_reduced_words(const RelationSet& s,
                                          const Alphabet& x,
                                          std::size_t max_len);

}  // namespace superlie
