#include "superlie/bracketing.hpp"

#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "superlie/error.hpp"

namespace superlie {

namespace {

constexpr int kImpossible = std::numeric_limits<int>::max();

// Bracketings of a token sequence, chosen by dynamic programming over
// intervals. If the leading words x, y of two adjacent intervals satisfy
// xy > yx then [X, Y] leads with xy and coefficient c(X)c(Y); if xy = yx the
// coefficient doubles for two odd factors and vanishes otherwise.
class TokenBracketer {
 public:
  TokenBracketer(std::vector<Word> tokens, std::size_t block,
                 const Alphabet& x)
      : tokens_(std::move(tokens)), block_(block), x_(x) {
    n_ = tokens_.size();
    coeff_.assign(n_ * (n_ + 1), kImpossible);
    split_.assign(n_ * (n_ + 1), 0);
  }

  // Minimal achievable leading coefficient for the whole sequence.
  int solve() {
    std::vector<Word> span(n_ * (n_ + 1));
    for (std::size_t i = 0; i < n_; ++i) {
      span[at(i, i + 1)] = tokens_[i];
      coeff_[at(i, i + 1)] = 1;
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        std::size_t j = i + len;
        span[at(i, j)] = span[at(i, i + 1)] + span[at(i + 1, j)];
        for (std::size_t k = i + 1; k < j; ++k) {
          int cl = coeff_[at(i, k)], cr = coeff_[at(k, j)];
          if (cl == kImpossible || cr == kImpossible) continue;
          const Word& l = span[at(i, k)];
          const Word& r = span[at(k, j)];
          auto c = compare_lex(l + r, r + l);
          int value;
          if (c > 0) {
            value = cl * cr;
          } else if (c == 0 && word_parity(l, x_) == 1 &&
                     word_parity(r, x_) == 1) {
            value = 2 * cl * cr;
          } else {
            continue;
          }
          if (value < coeff_[at(i, j)]) {
            coeff_[at(i, j)] = value;
            split_[at(i, j)] = k;
          }
        }
      }
    }
    return coeff_[at(0, n_)];
  }

  NAWord tree(const NAWord& block_tree, std::vector<bool>& path) const {
    return build(0, n_, block_tree, path);
  }

 private:
  std::size_t at(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }

  NAWord build(std::size_t i, std::size_t j, const NAWord& block_tree,
               std::vector<bool>& path) const {
    if (j == i + 1) {
      if (i == block_) return block_tree;
      return NAWord::leaf(tokens_[i][0]);
    }
    std::size_t k = split_[at(i, j)];
    bool left = block_ >= i && block_ < k;
    bool right = block_ >= k && block_ < j;
    if (left) path.push_back(false);
    if (right) path.push_back(true);
    std::vector<bool> scratch;
    NAWord l = build(i, k, block_tree, left ? path : scratch);
    NAWord r = build(k, j, block_tree, right ? path : scratch);
    return NAWord::bracket(std::move(l), std::move(r));
  }

  std::vector<Word> tokens_;
  std::size_t block_;
  const Alphabet& x_;
  std::size_t n_;
  std::vector<int> coeff_;
  std::vector<std::size_t> split_;
};

struct BracketingCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, RelativeBracketing> table;
};

BracketingCache& bracketing_cache() {
  static BracketingCache cache;
  return cache;
}

std::string cache_key(const Word& u, std::size_t offset, std::size_t length,
                      const Alphabet& x) {
  std::string key = u.bytes();
  key.push_back('|');
  for (std::size_t i = 0; i < u.size(); ++i) key.push_back(char('0' + x.parity(u[i])));
  key += '|' + std::to_string(offset) + ',' + std::to_string(length);
  return key;
}

RelativeBracketing compute(const Word& u, std::size_t offset,
                           std::size_t length, const AlphabetPtr& x) {
  Word v = u.subword(offset, length);
  NAWord block = canonical_bracketing(v, *x);
  std::vector<Word> tokens;
  for (std::size_t i = 0; i < offset; ++i) tokens.push_back(Word::single(u[i]));
  std::size_t block_index = tokens.size();
  tokens.push_back(v);
  for (std::size_t i = offset + length; i < u.size(); ++i)
    tokens.push_back(Word::single(u[i]));

  TokenBracketer dp(std::move(tokens), block_index, *x);
  int c = dp.solve();
  if (c != 1 && c != 2)
    throw Error(ErrorKind::bracketing_failed,
                "no relative bracketing of '" + x->format(u) + "' around '" +
                    x->format(v) + "'");
  RelativeBracketing rb{block, {}, Rational(1, c)};
  rb.expression = dp.tree(block, rb.path);

  // Post-condition: monic with leading word u.
  SuperPolynomial check =
      rb.scalar * expand_with_substitution(rb.expression, rb.path,
                                           expand_canonical(v, x).make_monic(), x);
  if (check.is_zero() || check.leading_word() != u ||
      !check.leading_coefficient().is_one())
    throw Error(ErrorKind::bracketing_failed,
                "relative bracketing of '" + x->format(u) +
                    "' failed its leading-word check");
  return rb;
}

}  // namespace

RelativeBracketing relative_bracketing(const Word& u, std::size_t offset,
                                       std::size_t length,
                                       const AlphabetPtr& x) {
  if (length == 0 || offset + length > u.size())
    throw Error(ErrorKind::occurrence_mismatch, "occurrence outside the word");
  if (!is_super_lyndon_shirshov_word(u, *x))
    throw Error(ErrorKind::not_super_ls,
                "'" + x->format(u) + "' is not a super-LS word");
  if (!is_super_lyndon_shirshov_word(u.subword(offset, length), *x))
    throw Error(ErrorKind::not_super_ls,
                "'" + x->format(u.subword(offset, length)) +
                    "' is not a super-LS word");
  auto& cache = bracketing_cache();
  std::string key = cache_key(u, offset, length, *x);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  RelativeBracketing rb = compute(u, offset, length, x);
  std::unique_lock lock(cache.mutex);
  cache.table.emplace(std::move(key), rb);
  return rb;
}

RelativeBracketing relative_bracketing(const Word& u, const Word& a,
                                       const Word& v, const Word& b,
                                       const AlphabetPtr& x) {
  if (a + v + b != u)
    throw Error(ErrorKind::occurrence_mismatch,
                "'" + x->format(u) + "' is not the concatenation avb");
  return relative_bracketing(u, a.size(), v.size(), x);
}

SuperPolynomial expand_with_substitution(const NAWord& t,
                                         const std::vector<bool>& path,
                                         const SuperPolynomial& q,
                                         const AlphabetPtr& x) {
  // Walk down the path, remembering the sibling subtrees.
  std::vector<std::pair<bool, NAWord>> siblings;
  NAWord cur = t;
  for (bool right : path) {
    if (right) {
      siblings.emplace_back(true, cur.left());
      cur = cur.right();
    } else {
      siblings.emplace_back(false, cur.right());
      cur = cur.left();
    }
  }
  SuperPolynomial acc = q;
  for (auto it = siblings.rbegin(); it != siblings.rend(); ++it) {
    SuperPolynomial other = expand_naword(it->second, x);
    acc = it->first ? super_bracket(other, acc) : super_bracket(acc, other);
  }
  return acc;
}

SuperPolynomial substitute_bracketing(const Word& u, const SuperPolynomial& p,
                                      std::size_t offset) {
  const AlphabetPtr& x = p.alphabet();
  const Word& v = p.leading_word();
  if (!p.leading_coefficient().is_one())
    throw Error(ErrorKind::occurrence_mismatch, "substituted element is not monic");
  if (offset + v.size() > u.size() || u.subword(offset, v.size()) != v)
    throw Error(ErrorKind::occurrence_mismatch,
                "leading word does not occur at the given offset");
  RelativeBracketing rb = relative_bracketing(u, offset, v.size(), x);
  SuperPolynomial r =
      rb.scalar * expand_with_substitution(rb.expression, rb.path, p, x);
  if (r.is_zero() || r.leading_word() != u || !r.leading_coefficient().is_one())
    throw Error(ErrorKind::bracketing_failed,
                "substitution into the bracketing of '" + x->format(u) +
                    "' is not monic with that leading word");
  return r;
}

SuperPolynomial substitute_bracketing(const Word& u, const SuperPolynomial& p) {
  std::size_t offset = u.find(p.leading_word());
  if (offset == std::string::npos)
    throw Error(ErrorKind::occurrence_mismatch,
                "leading word does not occur in the word");
  return substitute_bracketing(u, p, offset);
}

}  // namespace superlie
