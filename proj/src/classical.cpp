#include "superlie/classical.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <unordered_map>

#include "superlie/error.hpp"

namespace superlie {

std::string FamilySpec::name() const {
  auto pair = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  auto one = "(" + std::to_string(n) + ")";
  switch (tag) {
    case FamilyTag::SL: return "SL" + pair;
    case FamilyTag::B: return "B" + pair;
    case FamilyTag::B0: return "B0" + one;
    case FamilyTag::C: return "C" + one;
    case FamilyTag::D: return "D" + pair;
  }
  return "?";
}

void FamilySpec::validate() const {
  bool ok = false;
  switch (tag) {
    case FamilyTag::SL:
    case FamilyTag::B: ok = m > 0 && n > 0; break;
    case FamilyTag::B0: ok = n > 0; break;
    case FamilyTag::C: ok = n >= 2; break;
    case FamilyTag::D: ok = m >= 2 && n > 0; break;
  }
  // Keeps the alphabet (3 letters per index) within one byte.
  if (ok && m + n > 80) ok = false;
  if (!ok) throw Error(ErrorKind::parameter_range, name() + " is out of range");
}

FamilySpec FamilySpec::from_name(const std::string& tag, int m, int n) {
  std::string t;
  for (char c : tag) t.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  FamilySpec f{FamilyTag::SL, m, n};
  if (t == "sl") f.tag = FamilyTag::SL;
  else if (t == "b") f.tag = FamilyTag::B;
  else if (t == "b0") f.tag = FamilyTag::B0;
  else if (t == "c") f.tag = FamilyTag::C;
  else if (t == "d") f.tag = FamilyTag::D;
  else throw Error(ErrorKind::parameter_range, "unknown family '" + tag + "'");
  if (f.tag == FamilyTag::B0 || f.tag == FamilyTag::C) f.m = 0;
  f.validate();
  return f;
}

namespace {

int family_rank(const FamilySpec& f) {
  switch (f.tag) {
    case FamilyTag::SL: return f.m + f.n - 1;
    case FamilyTag::B:
    case FamilyTag::D: return f.m + f.n;
    case FamilyTag::B0:
    case FamilyTag::C: return f.n;
  }
  return 0;
}

}  // namespace

CartanData family_cartan(const FamilySpec& f, Reading reading) {
  f.validate();
  const int r = family_rank(f);
  const int m = f.m, n = f.n, N = r;
  CartanData c;
  c.rank = r;
  c.a.assign(r, std::vector<int>(r, 0));
  auto set = [&](int i, int j, int v) { c.a[i - 1][j - 1] = v; };
  for (int i = 1; i <= r; ++i) {
    set(i, i, 2);
    if (i > 1) set(i, i - 1, -1);
    if (i < r) set(i, i + 1, -1);
  }
  switch (f.tag) {
    case FamilyTag::SL:
      c.tau = {m};
      set(m, m, 0);
      if (m + 1 <= r) set(m, m + 1, 1);
      break;
    case FamilyTag::B:
      c.tau = {n};
      set(n, n, 0);
      set(n, n + 1, 1);
      set(N, N - 1, -2);
      break;
    case FamilyTag::B0:
      c.tau = {n};
      if (n > 1) set(n, n - 1, -2);
      break;
    case FamilyTag::C:
      c.tau = {1};
      set(1, 1, 0);
      set(n - 1, n, -2);
      // For n = 2 the entry a_12 is also named by a_{n-1,n}; a_12 = 1 wins.
      set(1, 2, 1);
      break;
    case FamilyTag::D:
      c.tau = {n};
      set(n, n, 0);
      set(n, n + 1, 1);
      set(N - 1, N, 0);
      set(N, N - 1, 0);
      set(N - 2, N, reading == Reading::corrected && m == 2 ? 1 : -1);
      set(N, N - 2, -1);
      break;
  }
  return c;
}

namespace {

using P = SuperPolynomial;

// e_ij = [e_i e_{i-1} ... e_j] (right-normed). With `neglect`, e_{N,N-1} is
// undefined and e_{N,j} = [e_N e_{N-2,j}] for j <= N-2.
class EBuilder {
 public:
  EBuilder(AlphabetPtr x, int r, bool neglect) : x_(std::move(x)), r_(r), neglect_(neglect) {}

  P e(int i) const { return P::monomial(x_, Word::single(e_letter(r_, i))); }

  P e(int i, int j) {
    if (i < j || j < 1 || i > r_)
      throw Error(ErrorKind::index_error, "e_ij needs r >= i >= j >= 1");
    if (i == j) return e(i);
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    P v;
    if (neglect_ && i == r_) {
      if (j == r_ - 1) throw Error(ErrorKind::index_error, "e_{N,N-1} is not used");
      v = super_bracket(e(r_), e(r_ - 2, j));
    } else {
      v = super_bracket(e(i), e(i - 1, j));
    }
    memo_.emplace(key, v);
    return v;
  }

  static P br(const P& a, const P& b) { return super_bracket(a, b); }
  // [x1 x2 x3] = x1[x2 x3]
  static P rn(const P& a, const P& b, const P& c) { return br(a, br(b, c)); }
  // {x1 x2 x3} = [x1 x2] x3
  static P ln(const P& a, const P& b, const P& c) { return br(br(a, b), c); }
  // (ab)(cd)
  static P quad(const P& a, const P& b, const P& c, const P& d) {
    return br(br(a, b), br(c, d));
  }

 private:
  AlphabetPtr x_;
  int r_;
  bool neglect_;
  std::map<std::pair<int, int>, P> memo_;
};

struct PlusBuilder {
  RelationSet set;
  std::size_t skipped_zero = 0;

  void add(const P& p, const std::string& label) {
    if (p.is_zero()) {
      ++skipped_zero;
      return;
    }
    set.add(p, true, label);
  }
};

std::string lbl(const char* tag, std::initializer_list<int> idx) {
  std::string s = tag;
  s += '(';
  bool first = true;
  for (int i : idx) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + ')';
}

void add_sl(PlusBuilder& out, EBuilder& e, int m, int n, int r) {
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j + 1 < i; ++j) out.add(e.br(e.e(i), e.e(j)), lbl("I", {i, j}));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) out.add(e.br(e.e(i, j), e.e(i - 1)), lbl("II", {i, j}));
  for (int i = 2; i <= r; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.br(e.e(i, j), e.e(i, j - 1)), lbl("III", {i, j}));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < m; ++l) {
      P v = e.e(m + k, m - l);
      out.add(e.br(v, v), lbl("IV", {k, l}));
    }
}

void add_b(PlusBuilder& out, EBuilder& e, int m, int n, Reading reading) {
  const int N = m + n;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j + 1 < i; ++j) out.add(e.br(e.e(i), e.e(j)), lbl("I", {i, j}));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < i; ++j) out.add(e.br(e.e(i, j), e.e(i - 1)), lbl("II", {i, j}));
  for (int i = 2; i < N; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.br(e.e(i, j), e.e(i, j - 1)), lbl("III", {i, j}));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < n; ++l) {
      P v = e.e(n + k, n - l);
      out.add(e.br(v, v), lbl("IV", {k, l}));
    }
  for (int i = 2; i <= N; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.rn(e.e(N, i), e.e(N, j), e.e(N, j - 1)), lbl("V", {i, j}));
  for (int i = 2; i <= N; ++i)
    for (int j = 1; j < i; ++j)
      out.add(e.ln(e.e(N, i), e.e(N, j), e.e(N, i - 1)), lbl("VI", {i, j}));
  for (int i = n + 1; i <= N; ++i)
    for (int j = 1; j <= n; ++j)
      out.add(e.quad(e.e(N, i), e.e(N, j), e.e(N, i), e.e(N, j)), lbl("VII", {i, j}));
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      out.add(e.quad(e.e(N, i), e.e(N, j), e.e(N, i), e.e(N, j - 1)),
              lbl("VIII", {i, j}));
  if (reading == Reading::corrected)
    for (int i = n + 2; i <= N; ++i)
      for (int j = n + 1; j < i; ++j)
        out.add(e.quad(e.e(N, i), e.e(N, j), e.e(N, i), e.e(N, j - 1)),
                lbl("VIII*", {i, j}));
}

void add_b0(PlusBuilder& out, EBuilder& e, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j + 1 < i; ++j) out.add(e.br(e.e(i), e.e(j)), lbl("I", {i, j}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.add(e.br(e.e(i, j), e.e(i - 1)), lbl("II", {i, j}));
  for (int i = 2; i < n; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.br(e.e(i, j), e.e(i, j - 1)), lbl("III", {i, j}));
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.rn(e.e(n, i), e.e(n, j), e.e(n, j - 1)), lbl("IV", {i, j}));
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      out.add(e.ln(e.e(n, i), e.e(n, j), e.e(n, i - 1)), lbl("V", {i, j}));
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      out.add(e.quad(e.e(n, i), e.e(n, j), e.e(n, i), e.e(n, j - 1)), lbl("VI", {i, j}));
}

void add_c(PlusBuilder& out, EBuilder& e, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j + 1 < i; ++j) out.add(e.br(e.e(i), e.e(j)), lbl("I", {i, j}));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < i; ++j) out.add(e.br(e.e(i, j), e.e(i - 1)), lbl("II", {i, j}));
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= i; ++j)
      out.add(e.br(e.e(i, j), e.e(i, j - 1)), lbl("III", {i, j}));
  for (int i = 1; i <= n; ++i) {
    P v = e.e(i, 1);
    out.add(e.br(v, v), lbl("IV", {i}));
  }
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= j; ++i)
      out.add(e.ln(e.e(n, i), e.e(n - 1, j), e.e(n - 1)), lbl("V", {i, j}));
  for (int j = 2; j < n; ++j)
    for (int i = 2; i <= j; ++i)
      out.add(e.ln(e.e(n, i), e.e(n - 1, j), e.e(n, i - 1)), lbl("VI", {i, j}));
  for (int i = 2; i <= n; ++i)
    out.add(e.rn(e.e(n, i), e.e(n, i), e.e(n - 1)), lbl("VII", {i}));
  for (int j = 2; j < n; ++j)
    out.add(e.quad(e.e(n, 1), e.e(n - 1, j), e.e(n, 1), e.e(n - 1, j)), lbl("VIII", {j}));
  for (int j = 3; j < n; ++j)
    for (int i = 2; i < j; ++i)
      out.add(e.quad(e.e(n, i), e.e(n - 1, j), e.e(n, i), e.e(n - 1, j - 1)),
              lbl("IX", {i, j}));
}

void add_d(PlusBuilder& out, EBuilder& e, int m, int n, Reading reading) {
  const int N = m + n;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j + 1 < i; ++j)
      if (!(i == N && j == N - 2)) out.add(e.br(e.e(i), e.e(j)), lbl("I", {i, j}));
  out.add(e.br(e.e(N), e.e(N - 1)), lbl("I", {N, N - 1}));
  for (int i = 2; i < N; ++i)
    for (int j = 1; j < i; ++j) out.add(e.br(e.e(i, j), e.e(i - 1)), lbl("II", {i, j}));
  for (int j = 1; j <= N - 2; ++j)
    out.add(e.br(e.e(N, j), e.e(N - 2)), lbl("II", {N, j}));
  for (int i = 2; i <= N; ++i)
    for (int j = 2; j <= i; ++j) {
      if (i == N && j > N - 2) continue;
      out.add(e.br(e.e(i, j), e.e(i, j - 1)), lbl("III", {i, j}));
    }
  out.add(e.rn(e.e(N), e.e(N), e.e(N - 2)), lbl("III", {N, N}));
  for (int i = n + 1; i <= N - 2; ++i)
    out.add(e.br(e.e(N, i), e.e(N - 1, i)), lbl("IV", {i}));
  for (int i = 2; i <= n; ++i)
    out.add(e.br(e.e(N, i), e.e(N - 1, i - 1)) - e.br(e.e(N, i - 1), e.e(N - 1, i)),
            lbl("IV", {i, i - 1}));
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l < n; ++l) {
      P v = e.e(n + k, n - l);
      out.add(e.br(v, v), lbl("V", {k, l}));
    }
  for (int j = 2; j < N; ++j)
    for (int i = 1; i < j; ++i)
      out.add(e.ln(e.e(N, i), e.e(N - 1, j), e.e(N - 1)), lbl("VI", {i, j}));
  for (int i = 1; i <= n; ++i)
    out.add(e.ln(e.e(N, i), e.e(N - 1, i), e.e(N - 1)), lbl("VI", {i, i}));
  for (int i = 1; i <= N - 2; ++i)
    out.add(e.ln(e.e(N, i), e.e(N, i), e.e(N - 1)), lbl("VII", {i}));
  for (int j = 3; j < N; ++j)
    for (int i = 2; i < j; ++i)
      out.add(e.ln(e.e(N, i), e.e(N - 1, j), e.e(N, i - 1)), lbl("VIII", {i, j}));
  for (int i = 2; i <= n; ++i)
    out.add(e.ln(e.e(N, i), e.e(N - 1, i), e.e(N, i - 1)), lbl("VIII", {i, i}));
  for (int i = n + 1; i <= N; ++i)
    for (int j = i + 2; j < N; ++j)
      out.add(e.quad(e.e(N, i), e.e(N - 1, j), e.e(N, i), e.e(N - 1, j - 1)),
              lbl("IX", {i, j}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j < N; ++j)
      out.add(e.quad(e.e(N, i), e.e(N - 1, j), e.e(N, i), e.e(N - 1, j)),
              lbl("IX", {i, j}));
  // The square above vanishes when both factors are odd (j <= n).
  if (reading == Reading::corrected)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.add(e.quad(e.e(N, i), e.e(N - 1, j), e.e(N, i), e.e(N - 1, j - 1)),
                lbl("IX*", {i, j}));
}

}  // namespace

RelationSet family_positive_relations(const FamilySpec& f, Reading reading) {
  CartanData c = family_cartan(f, reading);
  AlphabetPtr x = km_alphabet(c);
  PlusBuilder out{RelationSet(x)};
  EBuilder e(x, c.rank, f.tag == FamilyTag::D);
  switch (f.tag) {
    case FamilyTag::SL: add_sl(out, e, f.m, f.n, c.rank); break;
    case FamilyTag::B: add_b(out, e, f.m, f.n, reading); break;
    case FamilyTag::B0: add_b0(out, e, f.n); break;
    case FamilyTag::C: add_c(out, e, f.n); break;
    case FamilyTag::D: add_d(out, e, f.m, f.n, reading); break;
  }
  return std::move(out.set);
}

RelationSet family_relations(const FamilySpec& f, Reading reading) {
  KMPresentation km = build_relations(family_cartan(f, reading));
  RelationSet plus = family_positive_relations(f, reading);
  RelationSet out(km.alphabet);
  out.add_all(plus);
  out.add_all(km.w);
  for (const auto& r : plus.relations()) out.add(mirror_to_f(r.poly), true, "-" + r.label);
  return out;
}

std::size_t family_degree_bound(const FamilySpec& f, Reading reading) {
  std::size_t bound = 1;
  RelationSet plus = family_positive_relations(f, reading);
  for (std::size_t i = 0; i < plus.size(); ++i)
    bound = std::max(bound, plus.leading_word(i).size());
  return bound;
}

std::size_t basis_length_cap(const FamilySpec& f) { return std::size_t(2 * (f.m + f.n)); }

std::vector<NAWord> reduced_basis(const FamilySpec& f, Reading reading) {
  RelationSet s = family_relations(f, reading);
  return enumerate_reduced_super_ls_monomials(s, *s.alphabet(), basis_length_cap(f));
}

std::vector<Word> reduced_words_beyond_cap(const FamilySpec& f, Reading reading) {
  RelationSet s = family_relations(f, reading);
  const std::size_t cap = basis_length_cap(f);
  std::vector<Word> out;
  for (const auto& t : enumerate_reduced_super_ls_monomials(s, *s.alphabet(), 2 * cap)) {
    Word w = remove_brackets(t);
    if (w.size() > cap) out.push_back(std::move(w));
  }
  return out;
}

std::size_t dimension_formula(const FamilySpec& f) {
  f.validate();
  const long m = f.m, n = f.n, s = m + n;
  switch (f.tag) {
    case FamilyTag::SL: return std::size_t(s * s - 1);
    case FamilyTag::B: return std::size_t(2 * s * s + m + 3 * n);
    case FamilyTag::B0: return std::size_t(2 * n * n + 3 * n);
    case FamilyTag::C: return std::size_t(2 * n * n + n - 2);
    case FamilyTag::D: return std::size_t(2 * s * s - m + n);
  }
  return 0;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix e(n);
  e(i, j) = 1;
  return e;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix e(n);
  for (std::size_t i = 1; i <= n; ++i) e(i, i) = 1;
  return e;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v.is_zero(); });
}

Matrix operator+(const Matrix& p, const Matrix& q) {
  Matrix r = p;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += q.a_[k];
  return r;
}

Matrix operator-(const Matrix& p, const Matrix& q) {
  Matrix r = p;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= q.a_[k];
  return r;
}

Matrix operator*(const Matrix& p, const Matrix& q) {
  const std::size_t n = p.n_;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& a = p.a_[i * n + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!q.a_[k * n + j].is_zero()) r.a_[i * n + j] += a * q.a_[k * n + j];
    }
  return r;
}

Matrix operator*(const Rational& c, const Matrix& p) {
  Matrix r = p;
  for (auto& v : r.a_) v *= c;
  return r;
}

Matrix MatrixRep::bracket(const Matrix& p, Parity a, const Matrix& q, Parity b) const {
  return a && b ? p * q + q * p : p * q - q * p;
}

Rational MatrixRep::supertrace(const Matrix& p) const {
  Rational s = 0;
  for (std::size_t i = 1; i <= size; ++i)
    s += row_parity[i - 1] ? -p(i, i) : p(i, i);
  return s;
}

bool MatrixRep::homogeneous(const Matrix& p, Parity parity) const {
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = 1; j <= size; ++j)
      if (!p(i, j).is_zero() && (row_parity[i - 1] ^ row_parity[j - 1]) != parity)
        return false;
  return true;
}

Matrix MatrixRep::evaluate(const SuperPolynomial& p) const {
  Matrix out(size);
  if (p.is_zero()) return out;
  const Alphabet& x = *p.alphabet();
  std::vector<const Matrix*> image(x.size());
  for (Letter l = 0; l < x.size(); ++l) {
    auto [family, i] = km_letter_kind(x, l);
    image[l] = family == LetterFamily::e   ? &this->x[i - 1]
               : family == LetterFamily::h ? &z[i - 1]
                                           : &y[i - 1];
  }
  for (const auto& t : p.terms()) {
    Matrix prod = *image[t.word[0]];
    for (std::size_t k = 1; k < t.word.size(); ++k) prod = prod * *image[t.word[k]];
    out = out + t.coeff * prod;
  }
  return out;
}

MatrixRep matrix_generators(const FamilySpec& f, Reading reading) {
  CartanData c = family_cartan(f, reading);
  const int r = c.rank, m = f.m, n = f.n;
  MatrixRep rep;
  std::size_t even = 0;
  switch (f.tag) {
    case FamilyTag::SL: rep.size = m + n; even = m; break;
    case FamilyTag::B: rep.size = 2 * m + 2 * n + 1; even = 2 * m + 1; break;
    case FamilyTag::B0: rep.size = 2 * n + 1; even = 1; break;
    case FamilyTag::C: rep.size = 2 * n + 1; even = 2; break;
    case FamilyTag::D: rep.size = 2 * m + 2 * n; even = 2 * m; break;
  }
  const std::size_t S = rep.size;
  for (std::size_t i = 1; i <= S; ++i) rep.row_parity.push_back(i > even ? 1 : 0);
  rep.x.assign(r, Matrix(S));
  rep.y.assign(r, Matrix(S));
  auto E = [&](std::size_t i, std::size_t j) { return Matrix::unit(S, i, j); };
  auto X = [&](int i) -> Matrix& { return rep.x[i - 1]; };
  auto Y = [&](int i) -> Matrix& { return rep.y[i - 1]; };
  switch (f.tag) {
    case FamilyTag::SL:
      for (int i = 1; i <= r; ++i) {
        X(i) = E(i, i + 1);
        Y(i) = E(i + 1, i);
      }
      break;
    case FamilyTag::B:
      for (int i = 1; i < n; ++i) {
        X(i) = E(2 * m + i + 1, 2 * m + i + 2) - E(2 * m + n + i + 2, 2 * m + n + i + 1);
        Y(i) = E(2 * m + i + 2, 2 * m + i + 1) - E(2 * m + n + i + 1, 2 * m + n + i + 2);
      }
      X(n) = E(2 * m + n + 1, 1) + E(m + 1, 2 * m + 2 * n + 1);
      Y(n) = E(1, 2 * m + n + 1) - E(2 * m + 2 * n + 1, m + 1);
      for (int i = 1; i < m; ++i) {
        X(n + i) = E(i, i + 1) - E(m + i + 1, m + i);
        Y(n + i) = E(i + 1, i) - E(m + i, m + i + 1);
      }
      X(m + n) = E(m, 2 * m + 1) - E(2 * m + 1, 2 * m);
      Y(m + n) = Rational(2) * (E(2 * m + 1, m) - E(2 * m, 2 * m + 1));
      break;
    case FamilyTag::B0:
      for (int i = 1; i < n; ++i) {
        X(i) = E(i + 1, i + 2) - E(n + i + 2, n + i + 1);
        Y(i) = E(i + 2, i + 1) - E(n + i + 1, n + i + 2);
      }
      X(n) = E(1, 2 * n + 1) + E(n + 1, 1);
      // The second index of the first term is read as n+1.
      Y(n) = Rational(2) * (E(1, n + 1) - E(2 * n + 1, 1));
      break;
    case FamilyTag::C:
      X(1) = E(1, 3) - E(n + 2, 2);
      Y(1) = E(3, 1) + E(2, n + 2);
      for (int i = 2; i < n; ++i) {
        X(i) = E(i + 1, i + 2) - E(n + i + 1, n + i);
        Y(i) = E(i + 2, i + 1) - E(n + i, n + i + 1);
      }
      X(n) = E(n + 1, 2 * n);
      Y(n) = E(2 * n, n + 1);
      break;
    case FamilyTag::D:
      for (int i = 1; i < n; ++i) {
        X(i) = E(2 * m + i, 2 * m + i + 1) - E(2 * m + n + i + 1, 2 * m + n + i);
        Y(i) = E(2 * m + i + 1, 2 * m + i) - E(2 * m + n + i, 2 * m + n + i + 1);
      }
      X(n) = E(2 * m + n, 1) + E(m + 1, 2 * m + 2 * n);
      Y(n) = E(1, 2 * m + n) - E(2 * m + 2 * n, m + 1);
      for (int i = 1; i < m; ++i) {
        X(n + i) = E(i, i + 1) - E(m + i + 1, m + i);
        Y(n + i) = E(i + 1, i) - E(m + i, m + i + 1);
      }
      X(m + n) = E(m, 2 * m - 1) - E(m - 1, 2 * m);
      Y(m + n) = E(2 * m - 1, m) - E(2 * m, m - 1);
      break;
  }
  for (int i = 1; i <= r; ++i) {
    Parity p = c.odd(i) ? 1 : 0;
    rep.parity.push_back(p);
    rep.z.push_back(rep.bracket(X(i), p, Y(i), p));
  }
  return rep;
}

MatrixReport verify_by_matrices(const FamilySpec& f, bool force, Reading reading) {
  MatrixReport report;
  if (f.tag == FamilyTag::C && !force) {
    f.validate();
    report.skipped = true;
    return report;
  }
  MatrixRep rep = matrix_generators(f, reading);
  for (std::size_t i = 0; i < rep.x.size(); ++i) {
    std::string idx = std::to_string(i + 1);
    if (!rep.homogeneous(rep.x[i], rep.parity[i]))
      report.failures.push_back("x" + idx + " is not homogeneous");
    if (!rep.homogeneous(rep.y[i], rep.parity[i]))
      report.failures.push_back("y" + idx + " is not homogeneous");
  }
  // W occurs in both sets; each distinct relation is checked once.
  std::vector<SuperPolynomial> seen;
  auto check = [&](const RelationSet& s) {
    for (const auto& rel : s.relations()) {
      if (std::find(seen.begin(), seen.end(), rel.poly) != seen.end()) continue;
      seen.push_back(rel.poly);
      ++report.checked;
      if (!rep.evaluate(rel.poly).is_zero())
        report.failures.push_back(rel.label + ": " + format_polynomial(rel.poly));
    }
  };
  check(family_relations(f, reading));
  check(build_relations(family_cartan(f, reading)).all());
  return report;
}

std::size_t StructureTable::index_of(const Word& w) const {
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == w) return i;
  throw Error(ErrorKind::index_error, "word is not a basis word");
}

std::vector<Rational> StructureTable::bracket(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& [k, c] : table[i][j]) out[k] += u[i] * v[j] * c;
    }
  }
  return out;
}

StructureTable structure_constants(const std::vector<NAWord>& basis,
                                   const RelationSet& s) {
  StructureTable t;
  t.alphabet = s.alphabet();
  t.basis = basis;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<SuperPolynomial> images;
  for (const auto& b : basis) {
    Word w = remove_brackets(b);
    index.emplace(w.bytes(), t.words.size());
    t.words.push_back(w);
    t.parity.push_back(word_parity(w, *t.alphabet));
    images.push_back(expand_naword(b, t.alphabet));
  }
  const std::size_t d = basis.size();
  t.table.assign(d, std::vector<std::vector<std::pair<std::size_t, Rational>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      SuperPolynomial p = super_bracket(images[i], images[j]);
      for (const auto& [w, c] : normal_form_lie_coordinates(p, s)) {
        auto it = index.find(w.bytes());
        if (it == index.end())
          throw Error(ErrorKind::index_error,
                      "bracket leaves the basis at '" + t.alphabet->format(w) + "'");
        t.table[i][j].emplace_back(it->second, c);
      }
      std::sort(t.table[i][j].begin(), t.table[i][j].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  return t;
}

StructureTable structure_constants(const FamilySpec& f, Reading reading) {
  return structure_constants(reduced_basis(f, reading), family_relations(f, reading));
}

PbwBasis enumerate_pbw_basis(const std::vector<Parity>& parity, std::size_t max_degree) {
  PbwBasis out;
  out.counts.assign(max_degree + 1, 0);
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.words.push_back(cur);
    ++out.counts[cur.size()];
    if (cur.size() == max_degree) return;
    for (std::size_t i = from; i < parity.size(); ++i) {
      cur.push_back(i);
      rec(parity[i] ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

PbwBasis enumerate_pbw_basis(const StructureTable& table, std::size_t max_degree) {
  return enumerate_pbw_basis(table.parity, max_degree);
}

std::size_t pbw_degree(const Word& u, const Alphabet& x) {
  if (u.empty()) return 0;
  auto factors = ls_factorization(u);
  std::size_t degree = 0;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t k = i;
    while (k < factors.size() && factors[k] == factors[i]) ++k;
    std::size_t run = k - i;
    degree += word_parity(factors[i], x) ? run / 2 + run % 2 : run;
    i = k;
  }
  return degree;
}

std::vector<std::size_t> reduced_word_degree_counts(const RelationSet& s,
                                                    std::size_t max_word_len,
                                                    std::size_t max_degree) {
  std::vector<std::size_t> counts(max_degree + 1, 0);
  for (const auto& w : enumerate_reduced_words(s, *s.alphabet(), max_word_len)) {
    std::size_t d = pbw_degree(w, *s.alphabet());
    if (d <= max_degree) ++counts[d];
  }
  return counts;
}

}  // namespace superlie
