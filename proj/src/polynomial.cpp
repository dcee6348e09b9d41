#include "superlie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "superlie/error.hpp"

namespace superlie {

namespace {

AlphabetPtr common_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw Error(ErrorKind::alphabet_mismatch,
              "polynomials over different alphabets");
}

std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q,
                        const Rational& qscale) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    std::strong_ordering c = std::strong_ordering::less;
    if (i == p.size())
      c = std::strong_ordering::less;
    else if (j == q.size())
      c = std::strong_ordering::greater;
    else
      c = compare_deglex(p[i].word, q[j].word);
    if (c > 0) {
      out.push_back(p[i++]);
    } else if (c < 0) {
      out.push_back({q[j].word, q[j].coeff * qscale});
      ++j;
    } else {
      Rational s = p[i].coeff + q[j].coeff * qscale;
      if (!s.is_zero()) out.push_back({p[i].word, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SuperPolynomial SuperPolynomial::monomial(AlphabetPtr x, Word w, Rational c) {
  if (x) x->check(w);
  SuperPolynomial p(std::move(x));
  if (!c.is_zero()) p.terms_.push_back({std::move(w), std::move(c)});
  return p;
}

SuperPolynomial SuperPolynomial::from_terms(AlphabetPtr x,
                                            std::vector<Term> terms) {
  auto desc = [](const Term& a, const Term& b) {
    return compare_deglex(a.word, b.word) > 0;
  };
  if (!std::is_sorted(terms.begin(), terms.end(), desc))
    std::sort(terms.begin(), terms.end(), desc);
  SuperPolynomial p(std::move(x));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().word == t.word) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Word& SuperPolynomial::leading_word() const {
  if (terms_.empty())
    throw Error(ErrorKind::zero_polynomial, "zero polynomial has no leading word");
  return terms_.front().word;
}

const Rational& SuperPolynomial::leading_coefficient() const {
  if (terms_.empty())
    throw Error(ErrorKind::zero_polynomial,
                "zero polynomial has no leading coefficient");
  return terms_.front().coeff;
}

Rational SuperPolynomial::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) {
                               return compare_deglex(t.word, key) > 0;
                             });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return Rational(0);
}

SuperPolynomial SuperPolynomial::make_monic() const {
  Rational c = leading_coefficient();
  if (c.is_one()) return *this;
  return c.inverse() * *this;
}

std::optional<Parity> SuperPolynomial::parity() const {
  if (terms_.empty()) return 0;
  if (!alphabet_)
    throw Error(ErrorKind::alphabet_mismatch, "polynomial has no alphabet");
  Parity p = word_parity(terms_.front().word, *alphabet_);
  for (const auto& t : terms_)
    if (word_parity(t.word, *alphabet_) != p) return std::nullopt;
  return p;
}

std::optional<std::size_t> SuperPolynomial::uniform_length() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t n = terms_.front().word.size();
  if (terms_.back().word.size() != n) return std::nullopt;
  return n;
}

std::size_t SuperPolynomial::max_length() const {
  return terms_.empty() ? 0 : terms_.front().word.size();
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

SuperPolynomial operator+(const SuperPolynomial& p, const SuperPolynomial& q) {
  SuperPolynomial r(common_alphabet(p.alphabet_, q.alphabet_));
  r.terms_ = merge(p.terms_, q.terms_, Rational(1));
  return r;
}

SuperPolynomial operator-(const SuperPolynomial& p, const SuperPolynomial& q) {
  SuperPolynomial r(common_alphabet(p.alphabet_, q.alphabet_));
  r.terms_ = merge(p.terms_, q.terms_, Rational(-1));
  return r;
}

SuperPolynomial operator*(const SuperPolynomial& p, const SuperPolynomial& q) {
  auto x = common_alphabet(p.alphabet_, q.alphabet_);
  std::vector<Term> terms;
  terms.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_) terms.push_back({s.word + t.word, s.coeff * t.coeff});
  return SuperPolynomial::from_terms(std::move(x), std::move(terms));
}

SuperPolynomial operator*(const Rational& c, const SuperPolynomial& p) {
  SuperPolynomial r(p.alphabet_);
  if (c.is_zero()) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

SuperPolynomial SuperPolynomial::sandwich(const Rational& c, const Word& a,
                                          const Word& b) const {
  // Concatenating fixed words on both sides preserves the deglex order.
  SuperPolynomial r(alphabet_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({a + t.word + b, t.coeff * c});
  return r;
}

SuperPolynomial multiply(const SuperPolynomial& p, const SuperPolynomial& q) {
  return p * q;
}

SuperPolynomial super_bracket(const SuperPolynomial& p,
                              const SuperPolynomial& q) {
  common_alphabet(p.alphabet(), q.alphabet());
  auto dp = p.parity(), dq = q.parity();
  if (!dp || !dq)
    throw Error(ErrorKind::non_homogeneous,
                "superbracket of a non-homogeneous element");
  Rational sign = (*dp & *dq) ? Rational(-1) : Rational(1);
  return p * q - sign * (q * p);
}

SuperPolynomial expand_naword(const NAWord& t, const AlphabetPtr& x) {
  if (t.is_leaf()) return SuperPolynomial::monomial(x, Word::single(t.letter()));
  return super_bracket(expand_naword(t.left(), x), expand_naword(t.right(), x));
}

namespace {

struct ExpansionCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::vector<Term>> table;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

// Expansions only depend on the letter sequence and the letter parities.
std::string cache_key(const Word& u, const Alphabet& x) {
  std::string key = u.bytes();
  key.push_back('|');
  for (std::size_t i = 0; i < u.size(); ++i) key.push_back(char('0' + x.parity(u[i])));
  return key;
}

}  // namespace

SuperPolynomial expand_canonical(const Word& u, const AlphabetPtr& x) {
  auto& cache = expansion_cache();
  std::string key = cache_key(u, *x);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return SuperPolynomial::from_terms(x, it->second);
  }
  SuperPolynomial result;
  if (u.size() == 1) {
    result = SuperPolynomial::monomial(x, u);
  } else {
    NAWord t = canonical_bracketing(u, *x);
    Word l = remove_brackets(t.left());
    Word r = remove_brackets(t.right());
    result = super_bracket(expand_canonical(l, x),
                           expand_canonical(r, x));
  }
  std::unique_lock lock(cache.mutex);
  cache.table.emplace(std::move(key), result.terms());
  return result;
}

std::pair<Word, Rational> leading_word(const SuperPolynomial& p) {
  return {p.leading_word(), p.leading_coefficient()};
}

SuperPolynomial make_monic(const SuperPolynomial& p) { return p.make_monic(); }

bool is_lie_element(const SuperPolynomial& p, std::size_t max_check_len) {
  if (p.is_zero()) return true;
  const AlphabetPtr& x = p.alphabet();
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (t.word.size() <= max_check_len) kept.push_back(t);
  SuperPolynomial f = SuperPolynomial::from_terms(x, std::move(kept));
  while (!f.is_zero()) {
    const Word u = f.leading_word();
    if (!is_super_lyndon_shirshov_word(u, *x)) return false;
    SuperPolynomial e = expand_canonical(u, x);
    f -= (f.leading_coefficient() / e.leading_coefficient()) * e;
  }
  return true;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const AlphabetPtr& x) : s_(text), x_(x) {}

  SuperPolynomial parse() {
    SuperPolynomial result(x_);
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial", pos_);
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign(1);
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = Rational(-1);
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'", pos_);
      }
      result += sign * term();
      first = false;
      skip();
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, 1, at + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  static bool run_char(char c) {
    return c != '[' && c != ']' && c != '+' && c != '-' &&
           !std::isspace(static_cast<unsigned char>(c));
  }

  SuperPolynomial term() {
    std::size_t start = pos_;
    Rational coeff(1);
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      try {
        coeff = Rational::parse(s_.substr(b, pos_ - b));
      } catch (const std::exception&) {
        fail("malformed coefficient '" + std::string(s_.substr(b, pos_ - b)) + "'", b);
      }
      any = true;
      skip();
    }
    SuperPolynomial value = SuperPolynomial::monomial(x_, Word());
    while (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') {
      if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("coefficient must precede the factors of a term", pos_);
      if (s_[pos_] == ']') fail("unexpected ']'", pos_);
      if (s_[pos_] == '[') {
        std::size_t b = pos_;
        try {
          value = value * expand_naword(parse_naword_at(s_, pos_, *x_), x_);
        } catch (const ParseError& e) {
          throw ParseError(strip(e.what()), 1, e.column());
        } catch (const Error& e) {
          fail(e.what(), b);
        }
      } else {
        std::size_t b = pos_;
        while (pos_ < s_.size() && run_char(s_[pos_])) ++pos_;
        Word w;
        try {
          w = x_->parse_word(s_.substr(b, pos_ - b));
        } catch (const Error& e) {
          fail(e.what(), b);
        }
        value = value * SuperPolynomial::monomial(x_, w);
      }
      any = true;
      skip();
    }
    if (!any) fail("expected a term", start);
    return coeff * value;
  }

  static std::string strip(const std::string& what) {
    // Drop the "line L, column C: " prefix of a nested error.
    auto colon = what.find(": ");
    return colon == std::string::npos ? what : what.substr(colon + 2);
  }

  std::string_view s_;
  AlphabetPtr x_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPolynomial parse_polynomial(std::string_view text, const AlphabetPtr& x) {
  return PolyParser(text, x).parse();
}

std::string format_polynomial(const SuperPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (t.word.empty()) {
      out += c.to_string();
      continue;
    }
    if (!c.is_one()) out += c.to_string() + " ";
    out += p.alphabet()->format(t.word);
  }
  return out;
}

}  // namespace superlie
