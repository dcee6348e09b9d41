#include "superlie/kacmoody.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "superlie/error.hpp"

namespace superlie {

bool CartanData::odd(int i) const {
  return std::binary_search(tau.begin(), tau.end(), i);
}

namespace {

struct LineReader {
  std::vector<std::pair<std::size_t, std::string>> lines;

  explicit LineReader(std::string_view text) {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string line(text.substr(pos, end - pos));
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        lines.emplace_back(number, line);
      pos = end + 1;
    }
  }
};

int parse_int(const std::string& token, std::size_t line, std::size_t column) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer, got '" + token + "'", line, column);
}

// Tokens of a line with their 1-based columns.
std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    out.emplace_back(s.substr(start, i - start), start + 1);
  }
  return out;
}

}  // namespace

CartanData CartanData::parse(std::string_view text) {
  LineReader reader(text);
  auto& lines = reader.lines;
  if (lines.empty()) throw ParseError("missing 'rank' line", 1, 1);
  CartanData c;
  auto head = tokens(lines[0].second);
  if (head.size() != 2 || head[0].first != "rank")
    throw ParseError("expected 'rank <r>'", lines[0].first, 1);
  c.rank = parse_int(head[1].first, lines[0].first, head[1].second);
  if (c.rank <= 0 || c.rank > 80)
    throw ParseError("rank must be in 1..80", lines[0].first, head[1].second);
  if (lines.size() < 2) throw ParseError("missing 'tau' line", lines[0].first + 1, 1);
  auto t = tokens(lines[1].second);
  if (t.empty() || t[0].first != "tau")
    throw ParseError("expected 'tau i1 i2 ...'", lines[1].first, 1);
  for (std::size_t k = 1; k < t.size(); ++k) {
    int i = parse_int(t[k].first, lines[1].first, t[k].second);
    if (i < 1 || i > c.rank)
      throw ParseError("odd index out of range", lines[1].first, t[k].second);
    c.tau.push_back(i);
  }
  std::sort(c.tau.begin(), c.tau.end());
  c.tau.erase(std::unique(c.tau.begin(), c.tau.end()), c.tau.end());
  if (lines.size() != std::size_t(c.rank) + 2) {
    std::size_t line = lines.size() < std::size_t(c.rank) + 2
                           ? lines.back().first + 1
                           : lines[c.rank + 2].first;
    throw ParseError("expected " + std::to_string(c.rank) + " matrix rows", line, 1);
  }
  for (int i = 0; i < c.rank; ++i) {
    const auto& [number, text_line] = lines[i + 2];
    auto row = tokens(text_line);
    if (row.size() != std::size_t(c.rank))
      throw ParseError("expected " + std::to_string(c.rank) + " entries", number, 1);
    std::vector<int> values;
    for (const auto& [tok, col] : row) values.push_back(parse_int(tok, number, col));
    c.a.push_back(std::move(values));
  }
  return c;
}

std::string CartanData::to_text() const {
  std::ostringstream out;
  out << "rank " << rank << "\ntau";
  for (int i : tau) out << ' ' << i;
  out << '\n';
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

std::vector<CartanViolation> validate_cartan(const CartanData& c) {
  std::vector<CartanViolation> out;
  if (c.rank <= 0 || c.a.size() != std::size_t(c.rank)) {
    out.push_back({0, 0, 0, "matrix must have rank rows"});
    return out;
  }
  for (const auto& row : c.a)
    if (row.size() != std::size_t(c.rank)) {
      out.push_back({0, 0, 0, "matrix must be square"});
      return out;
    }
  for (int i : c.tau)
    if (i < 1 || i > c.rank) out.push_back({0, i, 0, "odd index out of range"});
  if (!out.empty()) return out;
  auto where = [](int i, int j) {
    return " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= c.rank; ++i) {
    int d = c.at(i, i);
    if (d != 0 && d != 2)
      out.push_back({1, i, i, "diagonal entry must be 0 or 2" + where(i, i)});
    if (d == 0 && !c.odd(i))
      out.push_back({1, i, i, "zero diagonal entry for an even index" + where(i, i)});
    for (int j = 1; j <= c.rank; ++j) {
      if (i == j) continue;
      if (d != 0 && c.at(i, j) > 0)
        out.push_back({2, i, j, "positive off-diagonal entry" + where(i, j)});
      if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
        out.push_back({3, i, j, "zero pattern is not symmetric" + where(i, j)});
      if (d == 2 && c.odd(i) && c.at(i, j) % 2 != 0)
        out.push_back({4, i, j, "odd entry in an odd row with a_ii = 2" + where(i, j)});
    }
  }
  return out;
}

int n_coefficient(const CartanData& c, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > c.rank || j > c.rank)
    throw Error(ErrorKind::index_error, "n_ij needs distinct indices in range");
  if (c.at(i, i) == 0 && c.at(i, j) != 0) return -1;
  return c.at(i, j);
}

std::vector<int> eta_set(const CartanData& c) {
  std::vector<int> out;
  for (int k = 2; k < c.rank; ++k) {
    if (!c.odd(k) || c.odd(k - 1) || c.odd(k + 1)) continue;
    if (c.at(k, k) != 0 || c.at(k + 1, k - 1) != 0) continue;
    if (c.at(k, k + 1) + c.at(k, k - 1) != 0) continue;
    out.push_back(k);
  }
  return out;
}

AlphabetPtr km_alphabet(const CartanData& c) {
  const int r = c.rank;
  std::vector<GradedLetter> letters;
  for (int i = 1; i <= r; ++i) {
    Parity p = c.odd(i) ? 1 : 0;
    letters.push_back({"f" + std::to_string(i), p, f_letter(r, i)});
    letters.push_back({"h" + std::to_string(i), 0, h_letter(r, i)});
    letters.push_back({"e" + std::to_string(i), p, e_letter(r, i)});
  }
  return std::make_shared<const Alphabet>(std::move(letters));
}

std::pair<LetterFamily, int> km_letter_kind(const Alphabet& x, Letter l) {
  const int r = int(x.size() / 3);
  if (x.size() % 3 != 0 || l >= x.size())
    throw Error(ErrorKind::alphabet_mismatch, "not a Kac-Moody alphabet");
  if (l < r) return {LetterFamily::f, l + 1};
  if (l < 2 * r) return {LetterFamily::h, l - r + 1};
  return {LetterFamily::e, l - 2 * r + 1};
}

RelationSet KMPresentation::all() const {
  RelationSet s(alphabet);
  s.add_all(s_plus);
  s.add_all(w);
  s.add_all(s_minus);
  return s;
}

SuperPolynomial mirror_to_f(const SuperPolynomial& p) {
  if (p.is_zero()) return p;
  const AlphabetPtr& x = p.alphabet();
  const int r = int(x->size() / 3);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<Letter> letters;
    for (Letter l : t.word.letters()) {
      auto [family, i] = km_letter_kind(*x, l);
      if (family != LetterFamily::e)
        throw Error(ErrorKind::non_e_support, "mirror of a non-E polynomial");
      letters.push_back(f_letter(r, i));
    }
    terms.push_back({Word(std::move(letters)), t.coeff});
  }
  return SuperPolynomial::from_terms(x, std::move(terms));
}

KMPresentation build_relations(const CartanData& c) {
  auto violations = validate_cartan(c);
  if (!violations.empty())
    throw Error(ErrorKind::invalid_cartan, violations.front().message);
  const int r = c.rank;
  AlphabetPtr x = km_alphabet(c);
  KMPresentation km{c, x, RelationSet(x), RelationSet(x), RelationSet(x)};
  auto g = [&](Letter l) { return SuperPolynomial::monomial(x, Word::single(l)); };
  auto E = [&](int i) { return g(e_letter(r, i)); };
  auto H = [&](int i) { return g(h_letter(r, i)); };
  auto F = [&](int i) { return g(f_letter(r, i)); };
  auto idx = [](const char* tag, int i, int j) {
    return std::string(tag) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) km.w.add(super_bracket(H(i), H(j)), true, idx("hh", i, j));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      SuperPolynomial ef = super_bracket(E(i), F(j));
      if (i == j) ef -= H(i);
      km.w.add(ef, true, idx("ef", i, j));
      km.w.add(super_bracket(E(j), H(i)) + Rational(c.at(i, j)) * E(j), true,
               idx("eh", j, i));
      km.w.add(super_bracket(H(i), F(j)) + Rational(c.at(i, j)) * F(j), true,
               idx("hf", i, j));
    }

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) {
      // (ad e_i)^{1-n_ij} e_j
      SuperPolynomial p = E(j);
      for (int k = 0; k < 1 - n_coefficient(c, i, j); ++k) p = super_bracket(E(i), p);
      if (!p.is_zero()) km.s_plus.add(p, true, idx("serre", i, j));
      // e_i (ad e_j)^{1-n_ji} acting from the right
      SuperPolynomial q = E(i);
      for (int k = 0; k < 1 - n_coefficient(c, j, i); ++k) q = super_bracket(q, E(j));
      if (!q.is_zero()) km.s_plus.add(q, true, idx("serre", j, i));
    }
  for (int k : eta_set(c)) {
    SuperPolynomial p = super_bracket(super_bracket(E(k + 1), E(k)),
                                      super_bracket(E(k), E(k - 1)));
    if (!p.is_zero()) km.s_plus.add(p, true, "quartic(" + std::to_string(k) + ")");
  }
  for (const auto& rel : km.s_plus.relations())
    km.s_minus.add(mirror_to_f(rel.poly), true, "-" + rel.label);
  return km;
}

SuperPolynomial diff_substitution(const SuperPolynomial& p, int j) {
  if (p.is_zero()) return p;
  const AlphabetPtr& x = p.alphabet();
  const int r = int(x->size() / 3);
  if (j < 1 || j > r) throw Error(ErrorKind::index_error, "derivation index out of range");
  const Letter ej = e_letter(r, j), hj = h_letter(r, j);
  const bool odd_j = x->parity(ej) == 1;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const Word& w = t.word;
    Parity suffix = 0;
    for (std::size_t pos = w.size(); pos-- > 0;) {
      auto [family, i] = km_letter_kind(*x, w[pos]);
      if (family != LetterFamily::e)
        throw Error(ErrorKind::non_e_support,
                    "derivation of a non-E word '" + x->format(w) + "'");
      if (w[pos] == ej) {
        std::vector<Letter> letters = w.letters();
        letters[pos] = hj;
        Rational c = odd_j && suffix ? -t.coeff : t.coeff;
        terms.push_back({Word(std::move(letters)), c});
      }
      suffix ^= x->parity(w[pos]);
    }
  }
  return SuperPolynomial::from_terms(x, std::move(terms));
}

GsbResult assemble_gsb(const CartanData& c, std::size_t max_degree,
                       unsigned workers) {
  KMPresentation km = build_relations(c);
  auto plus = complete(km.s_plus, Mode::lie, max_degree, workers);
  auto minus = complete(km.s_minus, Mode::lie, max_degree, workers);
  GsbResult out{RelationSet(km.alphabet)};
  out.set.add_all(plus.set);
  out.set.add_all(km.w);
  out.set.add_all(minus.set);
  out.plus_size = plus.set.size();
  out.minus_size = minus.set.size();
  out.fixpoint = plus.fixpoint && minus.fixpoint;
  ClosureOptions options;
  options.max_witness = max_degree;
  options.max_failures = 1;
  options.workers = workers;
  out.closed = is_closed(out.set, Mode::lie, options).closed();
  return out;
}

TriangularSplit triangular_split(const std::vector<NAWord>& basis,
                                 const Alphabet& x) {
  TriangularSplit out;
  for (const auto& t : basis) {
    Word w = remove_brackets(t);
    auto first = km_letter_kind(x, w[0]).first;
    bool uniform = true;
    for (Letter l : w.letters()) uniform = uniform && km_letter_kind(x, l).first == first;
    if (!uniform || (first == LetterFamily::h && w.size() > 1))
      throw Error(ErrorKind::mixed_monomial,
                  "monomial '" + format_naword(t, x) + "' mixes letter families");
    switch (first) {
      case LetterFamily::e: out.plus.push_back(t); break;
      case LetterFamily::h: out.zero.push_back(t); break;
      case LetterFamily::f: out.minus.push_back(t); break;
    }
  }
  return out;
}

std::vector<int> root_weight(const Word& w, const Alphabet& x) {
  std::vector<int> out(x.size() / 3, 0);
  for (Letter l : w.letters()) {
    auto [family, i] = km_letter_kind(x, l);
    if (family == LetterFamily::e) ++out[i - 1];
    if (family == LetterFamily::f) --out[i - 1];
  }
  return out;
}

namespace {

// Row echelon form keyed by leading word; rows are monic.
class Echelon {
 public:
  SuperPolynomial reduce(SuperPolynomial v) const {
    while (!v.is_zero()) {
      auto it = rows_.find(v.leading_word());
      if (it == rows_.end()) break;
      v -= v.leading_coefficient() * it->second;
    }
    return v;
  }
  void insert(const SuperPolynomial& v) {
    SuperPolynomial r = reduce(v);
    if (!r.is_zero()) rows_.emplace(r.leading_word(), r.make_monic());
  }

 private:
  std::map<Word, SuperPolynomial, DegLexGreater> rows_;
};

// Words of length <= max_len over x whose root weight is `target`.
void words_of_weight(const Alphabet& x, std::size_t max_len,
                     const std::vector<int>& target, std::vector<Word>& out) {
  std::vector<int> cur(target.size(), 0);
  std::vector<Letter> stack;
  auto rec = [&](auto&& self) -> void {
    std::size_t left = max_len - stack.size();
    int distance = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) distance += std::abs(target[i] - cur[i]);
    if (std::size_t(distance) > left) return;
    if (distance == 0) out.push_back(Word(stack));
    if (left == 0) return;
    for (Letter l = 0; l < x.size(); ++l) {
      auto [family, i] = km_letter_kind(x, l);
      int delta = family == LetterFamily::e ? 1 : family == LetterFamily::f ? -1 : 0;
      cur[i - 1] += delta;
      stack.push_back(l);
      self(self);
      stack.pop_back();
      cur[i - 1] -= delta;
    }
  };
  rec(rec);
}

}  // namespace

bool in_bounded_ideal(const SuperPolynomial& q, const RelationSet& s,
                      std::size_t n) {
  if (q.is_zero()) return true;
  const Alphabet& x = *s.alphabet();
  const std::vector<int> goal = root_weight(q.leading_word(), x);
  Echelon echelon;
  for (const auto& rel : s.relations()) {
    const Word& lead = rel.poly.leading_word();
    if (lead.size() > n) continue;
    std::vector<int> need = goal;
    auto ws = root_weight(lead, x);
    for (std::size_t i = 0; i < need.size(); ++i) need[i] -= ws[i];
    std::vector<Word> fillers;
    words_of_weight(x, n - lead.size(), need, fillers);
    for (const Word& c : fillers)
      for (std::size_t k = 0; k <= c.size(); ++k)
        echelon.insert(rel.poly.sandwich(1, c.subword(0, k), c.subword(k)));
  }
  return echelon.reduce(q).is_zero();
}

}  // namespace superlie
