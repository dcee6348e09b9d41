#include "superlie/words.hpp"

#include <algorithm>
#include <cctype>

#include "superlie/error.hpp"

namespace superlie {

NAWord NAWord::leaf(Letter x) {
  auto n = std::make_shared<Node>();
  n->letter = x;
  return NAWord(std::move(n));
}

NAWord NAWord::bracket(NAWord left, NAWord right) {
  auto n = std::make_shared<Node>();
  n->length = left.length() + right.length();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return NAWord(std::move(n));
}

bool operator==(const NAWord& a, const NAWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf())
    return a.is_leaf() && b.is_leaf() && a.letter() == b.letter();
  return a.length() == b.length() && a.left() == b.left() &&
         a.right() == b.right();
}

namespace {

void collect_leaves(const NAWord& t, Word& out) {
  if (t.is_leaf()) {
    out.push_back(t.letter());
    return;
  }
  collect_leaves(t.left(), out);
  collect_leaves(t.right(), out);
}

// u > every proper suffix, which is equivalent to vw > wv for all splits.
bool is_ls(const Word& u) {
  for (std::size_t k = 1; k < u.size(); ++k)
    if (compare_lex(u, u.subword(k)) <= 0) return false;
  return true;
}

bool is_odd_square(const Word& u, const Alphabet& x) {
  if (u.size() % 2 != 0) return false;
  std::size_t h = u.size() / 2;
  Word v = u.subword(0, h);
  return u.subword(h) == v && is_ls(v) && word_parity(v, x) == 1;
}

NAWord bracket_ls(const Word& u) {
  if (u.size() == 1) return NAWord::leaf(u[0]);
  std::size_t k = shirshov_split(u);
  return NAWord::bracket(bracket_ls(u.subword(0, k)), bracket_ls(u.subword(k)));
}

bool is_ls_monomial(const NAWord& t) {
  if (t.is_leaf()) return true;
  NAWord l = t.left(), r = t.right();
  if (!is_ls_monomial(l) || !is_ls_monomial(r)) return false;
  Word lw = remove_brackets(l), rw = remove_brackets(r);
  if (compare_lex(lw, rw) <= 0) return false;
  if (!l.is_leaf() && compare_lex(remove_brackets(l.right()), rw) > 0)
    return false;
  return true;
}

}  // namespace

Word remove_brackets(const NAWord& t) {
  Word w;
  collect_leaves(t, w);
  return w;
}

bool is_lyndon_shirshov_word(const Word& u, const Alphabet& x) {
  if (u.empty()) throw Error(ErrorKind::empty_word, "empty word is not LS");
  x.check(u);
  return is_ls(u);
}

bool is_super_lyndon_shirshov_word(const Word& u, const Alphabet& x) {
  if (u.empty()) throw Error(ErrorKind::empty_word, "empty word is not LS");
  x.check(u);
  return is_ls(u) || is_odd_square(u, x);
}

std::size_t shirshov_split(const Word& u) {
  for (std::size_t k = 1; k < u.size(); ++k)
    if (is_ls(u.subword(k))) return k;
  throw Error(ErrorKind::not_super_ls, "word has no Shirshov factorization");
}

void for_each_prenecklace(
    std::size_t alphabet_size, std::size_t max_len,
    const std::function<bool(const Word&, std::size_t)>& visit) {
  if (alphabet_size == 0 || max_len == 0) return;
  Word a;
  // In this order the next letter may not exceed a[t - p]; equality keeps
  // the period, a strictly smaller letter makes the whole prefix LS.
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    std::size_t t = a.size();
    if (t == max_len) return;
    Letter top = a[t - p];
    for (int c = top; c >= 0; --c) {
      a.push_back(Letter(c));
      std::size_t np = Letter(c) == top ? p : t + 1;
      if (visit(a, np)) rec(np);
      a = a.subword(0, t);
    }
  };
  for (int c = int(alphabet_size) - 1; c >= 0; --c) {
    a = Word::single(Letter(c));
    if (visit(a, 1)) rec(1);
  }
}

std::vector<Word> enumerate_ls_words(const Alphabet& x, std::size_t max_len) {
  std::vector<Word> out;
  for_each_prenecklace(x.size(), max_len, [&](const Word& w, std::size_t p) {
    if (p == w.size()) out.push_back(w);
    return true;
  });
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

NAWord canonical_bracketing(const Word& u, const Alphabet& x) {
  if (u.empty()) throw Error(ErrorKind::empty_word, "empty word is not LS");
  x.check(u);
  if (is_ls(u)) return bracket_ls(u);
  if (is_odd_square(u, x)) {
    NAWord v = bracket_ls(u.subword(0, u.size() / 2));
    return NAWord::bracket(v, v);
  }
  throw Error(ErrorKind::not_super_ls,
              "'" + x.format(u) + "' is not a super-LS word");
}

bool is_super_ls_monomial(const NAWord& t, const Alphabet& x) {
  if (is_ls_monomial(t)) return true;
  if (t.is_leaf()) return false;
  NAWord l = t.left();
  return l == t.right() && is_ls_monomial(l) &&
         word_parity(remove_brackets(l), x) == 1;
}

std::vector<Word> ls_factorization(const Word& u) {
  std::vector<Word> out;
  std::size_t n = u.size(), i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && u[k] >= u[j]) {
      k = u[k] > u[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(u.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

namespace {

bool name_char(char c) {
  return c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c));
}

void skip_blanks(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
}

}  // namespace

NAWord parse_naword_at(std::string_view text, std::size_t& pos,
                       const Alphabet& x) {
  skip_blanks(text, pos);
  if (pos >= text.size())
    throw ParseError("expected a letter or '['", 1, pos + 1);
  if (text[pos] == '[') {
    std::size_t open = pos++;
    std::vector<NAWord> items;
    for (;;) {
      skip_blanks(text, pos);
      if (pos >= text.size())
        throw ParseError("unclosed '['", 1, open + 1);
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      items.push_back(parse_naword_at(text, pos, x));
    }
    if (items.size() < 2)
      throw ParseError("bracket needs at least two entries", 1, open + 1);
    NAWord t = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;)
      t = NAWord::bracket(items[i], t);
    return t;
  }
  if (text[pos] == ']') throw ParseError("unexpected ']'", 1, pos + 1);
  std::size_t start = pos;
  while (pos < text.size() && name_char(text[pos])) ++pos;
  auto name = text.substr(start, pos - start);
  auto letter = x.find(name);
  if (!letter)
    throw ParseError("unknown letter '" + std::string(name) + "'", 1,
                     start + 1);
  return NAWord::leaf(*letter);
}

NAWord parse_naword(std::string_view text, const Alphabet& x) {
  std::size_t pos = 0;
  NAWord t = parse_naword_at(text, pos, x);
  skip_blanks(text, pos);
  if (pos != text.size())
    throw ParseError("trailing input after expression", 1, pos + 1);
  return t;
}

std::string format_naword(const NAWord& t, const Alphabet& x) {
  if (t.is_leaf()) return x.name(t.letter());
  return "[" + format_naword(t.left(), x) + " " + format_naword(t.right(), x) +
         "]";
}

}  // namespace superlie
