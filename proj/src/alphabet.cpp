#include "superlie/alphabet.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

#include "superlie/error.hpp"

namespace superlie {

Word::Word(std::vector<Letter> letters)
    : data_(letters.begin(), letters.end()) {}

Word Word::of(std::initializer_list<Letter> letters) {
  return Word(std::vector<Letter>(letters));
}

std::vector<Letter> Word::letters() const {
  return std::vector<Letter>(data_.begin(), data_.end());
}

Alphabet::Alphabet(std::vector<GradedLetter> letters)
    : letters_(std::move(letters)) {
  if (letters_.size() > 255)
    throw Error(ErrorKind::parameter_range, "alphabets are limited to 255 letters");
  std::sort(letters_.begin(), letters_.end(),
            [](const GradedLetter& a, const GradedLetter& b) {
              return a.rank < b.rank;
            });
  std::set<int> ranks;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.name.empty())
      throw Error(ErrorKind::parse_error, "letter with empty name");
    if (l.parity != 0 && l.parity != 1)
      throw Error(ErrorKind::parse_error,
                  "letter '" + l.name + "' has parity outside {0,1}");
    if (!ranks.insert(l.rank).second)
      throw Error(ErrorKind::parse_error,
                  "duplicate rank " + std::to_string(l.rank));
    if (!by_name_.emplace(l.name, Letter(i)).second)
      throw Error(ErrorKind::parse_error, "duplicate letter '" + l.name + "'");
    longest_name_ = std::max(longest_name_, l.name.size());
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<GradedLetter> letters;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "letter")
      throw ParseError("expected 'letter', got '" + keyword + "'", lineno, 1);
    GradedLetter l;
    if (!(fields >> l.name >> l.parity >> l.rank))
      throw ParseError("expected 'letter <name> <parity> <rank>'", lineno, 1);
    std::string extra;
    if (fields >> extra)
      throw ParseError("trailing field '" + extra + "'", lineno, 1);
    letters.push_back(std::move(l));
  }
  return Alphabet(std::move(letters));
}

std::string Alphabet::to_text() const {
  std::ostringstream out;
  for (const auto& l : letters_)
    out << "letter " << l.name << ' ' << l.parity << ' ' << l.rank << '\n';
  return out.str();
}

const GradedLetter& Alphabet::at(Letter x) const {
  if (x >= letters_.size())
    throw Error(ErrorKind::unknown_letter,
                "letter index " + std::to_string(int(x)) + " not in alphabet");
  return letters_[x];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorKind::unknown_letter,
              "unknown letter '" + std::string(name) + "'");
}

void Alphabet::check(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= letters_.size())
      throw Error(ErrorKind::unknown_letter,
                  "letter index " + std::to_string(int(w[i])) +
                      " not in alphabet");
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text == "1") return w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t take = std::min(longest_name_, text.size() - pos);
    bool matched = false;
    for (; take > 0; --take) {
      if (auto x = find(text.substr(pos, take))) {
        w.push_back(*x);
        pos += take;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw Error(ErrorKind::unknown_letter,
                  "no letter matches '" + std::string(text.substr(pos)) + "'");
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += name(w[i]);
  return s;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.letters_.size() != b.letters_.size()) return false;
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    const auto &x = a.letters_[i], &y = b.letters_[i];
    if (x.name != y.name || x.parity != y.parity || x.rank != y.rank)
      return false;
  }
  return true;
}

std::strong_ordering compare_lex(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  int c = n == 0 ? 0 : std::memcmp(u.bytes().data(), v.bytes().data(), n);
  if (c != 0) return c < 0 ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  // One word is a prefix of the other: the shorter one is greater.
  return v.size() <=> u.size();
}

std::strong_ordering compare_lex(const Word& u, const Word& v,
                                 const Alphabet& x) {
  x.check(u);
  x.check(v);
  return compare_lex(u, v);
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  int c = u.empty() ? 0 : std::memcmp(u.bytes().data(), v.bytes().data(), u.size());
  return c <=> 0;
}

std::strong_ordering compare_deglex(const Word& u, const Word& v,
                                    const Alphabet& x) {
  x.check(u);
  x.check(v);
  return compare_deglex(u, v);
}

Parity word_parity(const Word& u, const Alphabet& x) {
  Parity p = 0;
  for (std::size_t i = 0; i < u.size(); ++i) p ^= x.parity(u[i]);
  return p;
}

}  // namespace superlie
