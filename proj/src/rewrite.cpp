#include "superlie/rewrite.hpp"

#include <algorithm>
#include <map>

#include "superlie/bracketing.hpp"
#include "superlie/error.hpp"

namespace superlie {

void RelationSet::Trie::init(std::size_t w) {
  width = w;
  child.assign(w, -1);
  terminal.assign(1, -1);
}

void RelationSet::Trie::insert(const Word& w, std::size_t index, bool reversed) {
  std::size_t node = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Letter c = reversed ? w[w.size() - 1 - k] : w[k];
    std::int32_t next = child[node * width + c];
    if (next < 0) {
      next = std::int32_t(terminal.size());
      child[node * width + c] = next;
      child.resize(child.size() + width, -1);
      terminal.push_back(-1);
    }
    node = std::size_t(next);
  }
  if (terminal[node] < 0 || std::int64_t(index) < terminal[node])
    terminal[node] = std::int64_t(index);
}

RelationSet::RelationSet(AlphabetPtr x) : alphabet_(std::move(x)) {
  if (!alphabet_)
    throw Error(ErrorKind::alphabet_mismatch, "relation set needs an alphabet");
  forward_.init(alphabet_->size());
  backward_.init(alphabet_->size());
}

bool RelationSet::add(const SuperPolynomial& p, bool lie, std::string label) {
  if (p.alphabet() && p.alphabet() != alphabet_ && !(*p.alphabet() == *alphabet_))
    throw Error(ErrorKind::alphabet_mismatch,
                "relation over a different alphabet");
  SuperPolynomial m = p.make_monic();
  const Word lead = m.leading_word();
  for (const auto& r : relations_)
    if (r.poly.leading_word() == lead && r.poly == m) return false;
  // Rebind to this set's alphabet so later arithmetic never mixes pointers.
  m = SuperPolynomial::from_terms(alphabet_, m.terms());
  relations_.push_back({std::move(m), lie, std::move(label)});
  forward_.insert(lead, relations_.size() - 1, false);
  backward_.insert(lead, relations_.size() - 1, true);
  return true;
}

void RelationSet::add_all(const RelationSet& other) {
  for (const auto& r : other.relations_) add(r.poly, r.lie, r.label);
}

bool RelationSet::all_lie() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.lie; });
}

std::optional<RelationSet::Match> RelationSet::find_reducible(const Word& u) const {
  const std::size_t w = forward_.width;
  for (std::size_t start = 0; start < u.size(); ++start) {
    std::int64_t best = -1;
    std::size_t node = 0;
    for (std::size_t k = start; k < u.size(); ++k) {
      std::int32_t next = forward_.child[node * w + u[k]];
      if (next < 0) break;
      node = std::size_t(next);
      std::int64_t t = forward_.terminal[node];
      if (t >= 0 && (best < 0 || t < best)) best = t;
    }
    if (best >= 0) return Match{std::size_t(best), start};
  }
  return std::nullopt;
}

bool RelationSet::has_suffix_match(const Word& u) const {
  const std::size_t w = backward_.width;
  std::size_t node = 0;
  for (std::size_t k = u.size(); k-- > 0;) {
    std::int32_t next = backward_.child[node * w + u[k]];
    if (next < 0) return false;
    node = std::size_t(next);
    if (backward_.terminal[node] >= 0) return true;
  }
  return false;
}

std::vector<Word> RelationSet::minimal_leading_words() const {
  std::vector<Word> leads;
  for (const auto& r : relations_) leads.push_back(r.poly.leading_word());
  std::sort(leads.begin(), leads.end(), DegLexLess{});
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Word> out;
  for (const auto& w : leads) {
    bool minimal = true;
    for (const auto& o : out)
      if (w.contains(o)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(w);
  }
  return out;
}

bool is_s_reduced(const Word& u, const RelationSet& s) { return s.is_reduced(u); }

namespace {

using Workspace = std::map<Word, Rational, DegLexGreater>;

void load(Workspace& ws, const SuperPolynomial& p) {
  for (const auto& t : p.terms()) ws.emplace_hint(ws.end(), t.word, t.coeff);
}

void subtract(Workspace& ws, const Rational& c, const SuperPolynomial& q,
              const Word& a, const Word& b) {
  for (const auto& t : q.terms()) {
    Word key = a.empty() && b.empty() ? t.word : a + t.word + b;
    auto [it, inserted] = ws.try_emplace(std::move(key), Rational(0));
    it->second -= c * t.coeff;
    if (it->second.is_zero()) ws.erase(it);
  }
}

}  // namespace

SuperPolynomial normal_form_assoc(const SuperPolynomial& p,
                                  const RelationSet& s,
                                  std::vector<ReductionStep>* trace) {
  Workspace ws;
  load(ws, p);
  std::vector<Term> out;
  while (!ws.empty()) {
    auto top = ws.begin();
    auto m = s.find_reducible(top->first);
    if (!m) {
      out.push_back({top->first, top->second});
      ws.erase(top);
      continue;
    }
    const Word u = top->first;
    const Rational alpha = top->second;
    const auto& rel = s[m->relation].poly;
    Word a = u.subword(0, m->offset);
    Word b = u.subword(m->offset + rel.leading_word().size());
    if (trace) trace->push_back({alpha, a, m->relation, b});
    subtract(ws, alpha, rel, a, b);
  }
  SuperPolynomial r(p.alphabet() ? p.alphabet() : s.alphabet());
  return SuperPolynomial::from_terms(r.alphabet(), std::move(out));
}

std::vector<std::pair<Word, Rational>> normal_form_lie_coordinates(
    const SuperPolynomial& p, const RelationSet& s) {
  const AlphabetPtr& x = s.alphabet();
  Workspace ws;
  load(ws, p);
  std::vector<std::pair<Word, Rational>> coords;
  const Word none;
  while (!ws.empty()) {
    const Word u = ws.begin()->first;
    const Rational alpha = ws.begin()->second;
    if (!is_super_lyndon_shirshov_word(u, *x))
      throw Error(ErrorKind::not_lie_element,
                  "leading word '" + x->format(u) + "' is not super-LS");
    if (auto m = s.find_reducible(u)) {
      const Relation& rel = s[m->relation];
      if (!rel.lie)
        throw Error(ErrorKind::not_lie_element,
                    "Lie reduction by a non-Lie relation");
      subtract(ws, alpha, substitute_bracketing(u, rel.poly, m->offset), none,
               none);
    } else {
      SuperPolynomial e = expand_canonical(u, x);
      Rational c = alpha / e.leading_coefficient();
      subtract(ws, c, e, none, none);
      coords.emplace_back(u, c);
    }
  }
  return coords;
}

SuperPolynomial normal_form_lie(const SuperPolynomial& p, const RelationSet& s) {
  const AlphabetPtr& x = s.alphabet();
  SuperPolynomial r(x);
  for (const auto& [u, c] : normal_form_lie_coordinates(p, s))
    r += c * expand_canonical(u, x);
  return r;
}

std::vector<NAWord> enumerate_reduced_super_ls_monomials(const RelationSet& s,
                                                         const Alphabet& x,
                                                         std::size_t max_len) {
  if (!(x == *s.alphabet()))
    throw Error(ErrorKind::alphabet_mismatch, "alphabet differs from relation set");
  std::vector<Word> words;
  for_each_prenecklace(x.size(), max_len, [&](const Word& w, std::size_t p) {
    // Reducedness is inherited by subwords, so a reducible prefix prunes.
    if (s.has_suffix_match(w)) return false;
    if (p == w.size()) {
      words.push_back(w);
    } else if (w.size() == 2 * p && word_parity(w.subword(0, p), x) == 1) {
      words.push_back(w);
    }
    return true;
  });
  std::sort(words.begin(), words.end(), DegLexLess{});
  std::vector<NAWord> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(canonical_bracketing(w, x));
  return out;
}

std::vector<Word> enumerate_reduced_words(const RelationSet& s,
                                          const Alphabet& x,
                                          std::size_t max_len) {
  if (!(x == *s.alphabet()))
    throw Error(ErrorKind::alphabet_mismatch, "alphabet differs from relation set");
  std::vector<std::vector<Word>> by_length(max_len + 1);
  by_length[0].push_back(Word());
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : by_length[len - 1]) {
      for (std::size_t c = 0; c < x.size(); ++c) {
        Word next = w;
        next.push_back(Letter(c));
        if (!s.has_suffix_match(next)) by_length[len].push_back(std::move(next));
      }
    }
    std::sort(by_length[len].begin(), by_length[len].end(), DegLexLess{});
  }
  std::vector<Word> out;
  for (auto& level : by_length)
    for (auto& w : level) out.push_back(std::move(w));
  return out;
}

}  // namespace superlie
