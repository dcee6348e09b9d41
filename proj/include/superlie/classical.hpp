#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superlie/kacmoody.hpp"

namespace superlie {

enum class FamilyTag { SL, B, B0, C, D };

/// A classical family instance: SL(m,n), B(m,n), B0(n), C(n) or D(m,n).
/// Families with one parameter ignore m.
struct FamilySpec {
  FamilyTag tag;
  int m = 0;
  int n = 0;

  /// e.g. "SL(2,1)", "B0(3)".
  std::string name() const;
  /// Throws parameter_range unless SL, B: m, n > 0; B0: n > 0; C: n >= 2;
  /// D: m >= 2, n > 0.
  void validate() const;
  /// Tag from "sl", "b", "b0", "c" or "d" (case-insensitive). Throws
  /// parameter_range.
  static FamilySpec from_name(const std::string& tag, int m, int n);
};

/// `literal` follows the displayed Cartan matrices and relation lists.
/// `corrected` differs in two places:
///   D with m = 2: a_{n,m+n} = 1, the sign the generator matrices require;
///   B with m >= 2: the quartic relation VIII also for m+n >= i > j > n;
///   D: where the listed square of e_{m+n,i} e_{m+n-1,j} vanishes (both
///   factors odd), the quartic with e_{m+n-1,j-1} in the second pair.
enum class Reading { literal, corrected };

CartanData family_cartan(const FamilySpec& f, Reading reading = Reading::literal);

/// The explicit E-relations R+ of the family.
RelationSet family_positive_relations(const FamilySpec& f,
                                      Reading reading = Reading::literal);
/// R+ followed by W and the mirrored R-.
RelationSet family_relations(const FamilySpec& f, Reading reading = Reading::literal);

/// Length of the longest leading word in R+.
std::size_t family_degree_bound(const FamilySpec& f, Reading reading = Reading::literal);

/// Length cap 2(m+n) used for basis enumeration.
std::size_t basis_length_cap(const FamilySpec& f);

/// S-reduced super-LS monomials for family_relations, up to basis_length_cap.
std::vector<NAWord> reduced_basis(const FamilySpec& f, Reading reading = Reading::literal);

/// S-reduced super-LS words with lengths in (basis_length_cap, 2 cap]; empty
/// when the reduced set is finite within the cap.
std::vector<Word> reduced_words_beyond_cap(const FamilySpec& f,
                                           Reading reading = Reading::literal);

std::size_t dimension_formula(const FamilySpec& f);

/// Dense square matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij, 1-based
  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[(i - 1) * n_ + j - 1]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[(i - 1) * n_ + j - 1];
  }
  bool is_zero() const;

  friend Matrix operator+(const Matrix& p, const Matrix& q);
  friend Matrix operator-(const Matrix& p, const Matrix& q);
  friend Matrix operator*(const Matrix& p, const Matrix& q);
  friend Matrix operator*(const Rational& c, const Matrix& p);
  friend bool operator==(const Matrix& p, const Matrix& q) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Generator matrices x_i, y_i and z_i = [x_i, y_i] with the row parities
/// of the superspace.
struct MatrixRep {
  std::size_t size = 0;
  std::vector<Parity> row_parity;  // 1-based rows stored at [row - 1]
  std::vector<Parity> parity;      // of generator i at [i - 1]
  std::vector<Matrix> x, y, z;

  /// XY - (-1)^{ab} YX.
  Matrix bracket(const Matrix& p, Parity a, const Matrix& q, Parity b) const;
  /// tr of the even block minus tr of the odd block.
  Rational supertrace(const Matrix& p) const;
  /// Whether every nonzero entry of p has row/column parity sum `parity`.
  bool homogeneous(const Matrix& p, Parity parity) const;
  /// Image of a polynomial over the Kac-Moody alphabet: e_i -> x_i,
  /// h_i -> z_i, f_i -> y_i.
  Matrix evaluate(const SuperPolynomial& p) const;
};

/// The generators of the family's matrix superalgebra. Pairs containing
/// sqrt 2 are rescaled to x/sqrt2, sqrt2 y.
MatrixRep matrix_generators(const FamilySpec& f, Reading reading = Reading::literal);

struct MatrixReport {
  bool skipped = false;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return !skipped && failures.empty(); }
};

/// Maps family_relations and the Kac-Moody relations to matrices; every
/// image must vanish. C(n) is skipped unless `force` is set.
MatrixReport verify_by_matrices(const FamilySpec& f, bool force = false,
                                Reading reading = Reading::literal);

/// [b_i, b_j] = sum_k table[i][j][k] b_k over a reduced basis.
struct StructureTable {
  AlphabetPtr alphabet;
  std::vector<NAWord> basis;
  std::vector<Word> words;
  std::vector<Parity> parity;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> table;

  std::size_t dim() const { return basis.size(); }
  std::size_t index_of(const Word& w) const;
  /// Bracket of two coordinate vectors (dense, length dim()).
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;
};

/// Brackets of basis elements reduced by normal_form_lie modulo s.
StructureTable structure_constants(const std::vector<NAWord>& basis,
                                   const RelationSet& s);
StructureTable structure_constants(const FamilySpec& f,
                                   Reading reading = Reading::literal);

struct PbwBasis {
  /// Nondecreasing index sequences, strict at odd basis elements.
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> counts;  // per degree 0..max_degree
};

PbwBasis enumerate_pbw_basis(const std::vector<Parity>& parity,
                             std::size_t max_degree);
PbwBasis enumerate_pbw_basis(const StructureTable& table, std::size_t max_degree);

/// Number of factors of a reduced word in the enveloping algebra: LS
/// factors, with a run v^k of an odd v counted as floor(k/2) + (k mod 2).
std::size_t pbw_degree(const Word& u, const Alphabet& x);

/// Per-degree counts (0..max_degree) of S-reduced words whose PBW degree
/// is at most max_degree, enumerating words up to max_word_len.
std::vector<std::size_t> reduced_word_degree_counts(const RelationSet& s,
                                                    std::size_t max_word_len,
                                                    std::size_t max_degree);

}  // namespace superlie
