#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/composition.hpp"

namespace superlie {

/// Generalized Cartan matrix with odd index set; indices are 1-based.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> a;  // a[i-1][j-1]
  std::vector<int> tau;             // sorted odd indices

  int at(int i, int j) const { return a[i - 1][j - 1]; }
  bool odd(int i) const;

  /// Reads `rank r`, `tau i1 i2 ...` and r rows of r integers. Throws
  /// ParseError.
  static CartanData parse(std::string_view text);
  std::string to_text() const;
};

struct CartanViolation {
  int condition;  // 1..4, or 0 for shape errors
  int i = 0, j = 0;
  std::string message;
};

/// Every violated condition; empty means valid.
///   1: a_ii in {0, 2}, and a_ii = 0 only for odd i
///   2: a_ii != 0 implies a_ij <= 0
///   3: a_ij = 0 iff a_ji = 0
///   4: a_ii = 2 and i odd implies a_ij even
std::vector<CartanViolation> validate_cartan(const CartanData& c);

/// n_ij: -1 when a_ii = 0 and a_ij != 0, otherwise a_ij. Throws index_error
/// for i = j or indices out of range.
int n_coefficient(const CartanData& c, int i, int j);

/// Interior k with k odd, k-1 and k+1 even, a_kk = 0, a_{k+1,k-1} = 0 and
/// a_{k,k+1} + a_{k,k-1} = 0.
std::vector<int> eta_set(const CartanData& c);

/// Letters f_1 < ... < f_r < h_1 < ... < h_r < e_1 < ... < e_r.
AlphabetPtr km_alphabet(const CartanData& c);
inline Letter f_letter(int, int i) { return Letter(i - 1); }
inline Letter h_letter(int r, int i) { return Letter(r + i - 1); }
inline Letter e_letter(int r, int i) { return Letter(2 * r + i - 1); }

enum class LetterFamily { e, h, f };
/// Family and 1-based index of a letter of a Kac-Moody alphabet.
std::pair<LetterFamily, int> km_letter_kind(const Alphabet& x, Letter l);

struct KMPresentation {
  CartanData cartan;
  AlphabetPtr alphabet;
  RelationSet w;
  RelationSet s_plus;
  RelationSet s_minus;

  int rank() const { return cartan.rank; }
  Letter e(int i) const { return e_letter(cartan.rank, i); }
  Letter h(int i) const { return h_letter(cartan.rank, i); }
  Letter f(int i) const { return f_letter(cartan.rank, i); }
  /// S+ followed by W and S-.
  RelationSet all() const;
};

/// W, S+ and S- expanded into the free associative algebra and made monic.
/// Throws invalid_cartan.
KMPresentation build_relations(const CartanData& c);

/// Replaces every e_i by f_i in p (E-supported) and reorders.
SuperPolynomial mirror_to_f(const SuperPolynomial& p);

/// The right superderivation with e_i -> delta_ij h_j. Throws
/// non_e_support.
SuperPolynomial diff_substitution(const SuperPolynomial& p, int j);

struct GsbResult {
  RelationSet set;
  bool fixpoint = false;  // both completions reached a fixpoint
  bool closed = false;    // the union passed is_closed up to max_degree
  std::size_t plus_size = 0;
  std::size_t minus_size = 0;
};

/// Completes S+ and S- separately in Lie mode, joins them with W and checks
/// closure of the union for witnesses up to max_degree.
GsbResult assemble_gsb(const CartanData& c, std::size_t max_degree,
                       unsigned workers = 0);

struct TriangularSplit {
  std::vector<NAWord> plus;
  std::vector<NAWord> zero;
  std::vector<NAWord> minus;
};

/// Partitions reduced monomials into E-, H- and F-monomials. Throws
/// mixed_monomial for anything else.
TriangularSplit triangular_split(const std::vector<NAWord>& basis,
                                 const Alphabet& x);

/// Root weight of a word: e_i counts +1 at i, f_i counts -1, h is 0.
std::vector<int> root_weight(const Word& w, const Alphabet& x);

/// Whether q is a combination of a s b with s in S and l(a s̄ b) <= n.
/// Relations and q must be homogeneous for the root weight.
bool in_bounded_ideal(const SuperPolynomial& q, const RelationSet& s,
                      std::size_t n);

}  // namespace superlie
