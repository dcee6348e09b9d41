#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "superlie/rewrite.hpp"

namespace superlie {

enum class OverlapKind { intersection, inclusion };

/// Overlap of leading words p̄ (relation `left`) and q̄ (relation `right`).
///   intersection: p̄ a = b q̄ = w with l(p̄) > l(b), a and b nonempty
///   inclusion:    p̄ = a q̄ b = w
struct Overlap {
  OverlapKind kind;
  std::size_t left;
  std::size_t right;
  Word w;
  Word a;
  Word b;
};

enum class Mode { associative, lie };

/// All overlaps of p̄ with q̄. For a relation paired with itself pass
/// `same = true`, which drops the trivial inclusion of p̄ in itself.
std::vector<Overlap> find_overlaps(const SuperPolynomial& p,
                                   const SuperPolynomial& q,
                                   std::size_t left = 0, std::size_t right = 0,
                                   bool same = false);

/// Every overlap of every ordered pair of S, sorted by (w, left, right).
std::vector<Overlap> all_overlaps(const RelationSet& s);

/// pa - bq, or p - aqb. Throws malformed_overlap.
SuperPolynomial assoc_composition(const Overlap& o, const SuperPolynomial& p,
                                  const SuperPolynomial& q);
/// [w]_p - [w]_q, or p - [w]_q. Throws witness_not_super_ls.
SuperPolynomial lie_composition(const Overlap& o, const SuperPolynomial& p,
                                const SuperPolynomial& q);

SuperPolynomial composition(const Overlap& o, const RelationSet& s, Mode mode);
SuperPolynomial reduce(const SuperPolynomial& p, const RelationSet& s,
                       Mode mode);

struct Residue {
  Overlap overlap;
  SuperPolynomial value;
};

struct ClosureReport {
  std::vector<Residue> nonzero;
  std::size_t compositions = 0;
  std::size_t skipped_witnesses = 0;  // lie mode: w not super-LS
  bool closed() const { return nonzero.empty(); }
};

struct ClosureOptions {
  /// Only overlaps with l(w) <= max_witness are examined.
  std::size_t max_witness = std::numeric_limits<std::size_t>::max();
  /// Stop after this many nonzero residues.
  std::size_t max_failures = std::numeric_limits<std::size_t>::max();
  /// 0 = use the SUPERLIE_WORKERS environment variable, else hardware.
  unsigned workers = 0;
};

ClosureReport is_closed(const RelationSet& s, Mode mode,
                        const ClosureOptions& options = {});

struct CompletionResult {
  RelationSet set;
  bool fixpoint = false;       // no nonzero residue at any witness length
  std::size_t adjoined = 0;    // relations added to the input
  std::size_t rounds = 0;
};

/// Adjoins reduced, monic composition residues until none of witness
/// length <= max_degree remains. The flag also requires every overlap
/// beyond the cap to reduce to zero.
CompletionResult complete(const RelationSet& s, Mode mode,
                          std::size_t max_degree, unsigned workers = 0);

struct EquivalenceReport {
  bool lie_closed = false;
  bool assoc_closed = false;
  bool agree() const { return lie_closed == assoc_closed; }
};

/// Closure verdicts of S in both modes; for Lie relation sets they must
/// agree.
EquivalenceReport check_equivalence(const RelationSet& s, unsigned workers = 0);

/// Worker count from SUPERLIE_WORKERS, falling back to the hardware count.
unsigned default_workers();

}  // namespace superlie
