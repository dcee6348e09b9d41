#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace superlie {

/// Position of a letter in its alphabet's rank order (0 is the smallest).
using Letter = std::uint8_t;

/// Element of Z/2.
using Parity = int;

/// Associative word: a finite sequence of letters of one alphabet.
///
/// Letters are stored as their rank positions, so comparing stored letters
/// compares them under the alphabet's total order.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word of(std::initializer_list<Letter> letters);
  static Word single(Letter x) { return Word(std::string(1, char(x))); }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return Letter(data_[i]); }
  Letter front() const noexcept { return Letter(data_.front()); }
  Letter back() const noexcept { return Letter(data_.back()); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(data_.substr(pos, len));
  }
  bool starts_with(const Word& p) const {
    return data_.compare(0, p.data_.size(), p.data_) == 0;
  }
  bool ends_with(const Word& s) const {
    return s.size() <= size() &&
           data_.compare(size() - s.size(), s.size(), s.data_) == 0;
  }
  /// Position of the first occurrence of `w` at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const {
    return data_.find(w.data_, from);
  }
  bool contains(const Word& w) const { return find(w) != std::string::npos; }

  Word& operator+=(const Word& o) {
    data_ += o.data_;
    return *this;
  }
  Word& push_back(Letter x) {
    data_.push_back(char(x));
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  std::vector<Letter> letters() const;
  /// Raw storage, one byte per letter; used as hash key.
  const std::string& bytes() const noexcept { return data_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::string data) : data_(std::move(data)) {}
  std::string data_;
};

struct GradedLetter {
  std::string name;
  Parity parity = 0;
  int rank = 0;
};

/// Z/2-graded, totally ordered generating set.
class Alphabet {
 public:
  /// Sorts by rank. Throws on duplicate names/ranks or parity outside {0,1}.
  explicit Alphabet(std::vector<GradedLetter> letters);

  /// Reads the `letter <name> <parity> <rank>` text format (blank lines and
  /// `#` comments allowed).
  static Alphabet parse(std::string_view text);
  std::string to_text() const;

  std::size_t size() const noexcept { return letters_.size(); }
  const GradedLetter& at(Letter x) const;
  Parity parity(Letter x) const { return at(x).parity; }
  const std::string& name(Letter x) const { return at(x).name; }
  std::optional<Letter> find(std::string_view name) const;
  /// Throws unknown_letter.
  Letter letter(std::string_view name) const;

  /// Throws unknown_letter if any stored letter is out of range.
  void check(const Word& w) const;

  /// Splits a space-free run of letter names by greedy longest match.
  Word parse_word(std::string_view text) const;
  /// Concatenated letter names; the empty word prints as "1".
  std::string format(const Word& w) const;

  const std::vector<GradedLetter>& letters() const noexcept { return letters_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::vector<GradedLetter> letters_;
  std::unordered_map<std::string, Letter> by_name_;
  std::size_t longest_name_ = 0;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Lexicographic order in which the empty word (and therefore any proper
/// prefix) is greater than every extension of it.
std::strong_ordering compare_lex(const Word& u, const Word& v);
std::strong_ordering compare_lex(const Word& u, const Word& v,
                                 const Alphabet& x);

/// Length first, then `compare_lex`.
std::strong_ordering compare_deglex(const Word& u, const Word& v);
std::strong_ordering compare_deglex(const Word& u, const Word& v,
                                    const Alphabet& x);

Parity word_parity(const Word& u, const Alphabet& x);

struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_deglex(a, b) < 0;
  }
};

struct DegLexGreater {
  bool operator()(const Word& a, const Word& b) const {
    return compare_deglex(a, b) > 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

}  // namespace superlie
