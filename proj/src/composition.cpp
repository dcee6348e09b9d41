#include "superlie/composition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "superlie/bracketing.hpp"
#include "superlie/error.hpp"

namespace superlie {

unsigned default_workers() {
  if (const char* env = std::getenv("SUPERLIE_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Runs body(i) for i in [0, n) on `workers` threads; stops early once
// `stop` returns true. Exceptions are rethrown on the calling thread.
template <typename Body, typename Stop>
void parallel_for(std::size_t n, unsigned workers, Body body, Stop stop) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n && !stop(); ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      if (stop()) return;
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(workers, n);
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool overlap_less(const Overlap& x, const Overlap& y) {
  auto c = compare_deglex(x.w, y.w);
  if (c != 0) return c < 0;
  if (x.left != y.left) return x.left < y.left;
  if (x.right != y.right) return x.right < y.right;
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.a.size() < y.a.size();
}

void check_below(const SuperPolynomial& c, const Word& w) {
  if (!c.is_zero() && compare_deglex(c.leading_word(), w) >= 0)
    throw Error(ErrorKind::malformed_overlap,
                "composition does not lie below its witness");
}

std::vector<Overlap> overlaps_of_pairs(const RelationSet& s,
                                       std::size_t first_new) {
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (std::max(i, j) < first_new) continue;
      auto o = find_overlaps(s[i].poly, s[j].poly, i, j, i == j);
      out.insert(out.end(), std::make_move_iterator(o.begin()),
                 std::make_move_iterator(o.end()));
    }
  return out;
}

}  // namespace

std::vector<Overlap> find_overlaps(const SuperPolynomial& p,
                                   const SuperPolynomial& q, std::size_t left,
                                   std::size_t right, bool same) {
  const Word& P = p.leading_word();
  const Word& Q = q.leading_word();
  std::vector<Overlap> out;
  std::size_t lim = std::min(P.size(), Q.size());
  for (std::size_t k = 1; k < lim; ++k) {
    if (P.subword(P.size() - k) == Q.subword(0, k)) {
      Word a = Q.subword(k);
      Word b = P.subword(0, P.size() - k);
      out.push_back({OverlapKind::intersection, left, right, P + a, a, b});
    }
  }
  if (Q.size() <= P.size()) {
    for (std::size_t pos = P.find(Q); pos != std::string::npos;
         pos = P.find(Q, pos + 1)) {
      if (same && Q.size() == P.size()) break;
      out.push_back({OverlapKind::inclusion, left, right, P, P.subword(0, pos),
                     P.subword(pos + Q.size())});
    }
  }
  return out;
}

std::vector<Overlap> all_overlaps(const RelationSet& s) {
  auto out = overlaps_of_pairs(s, 0);
  std::sort(out.begin(), out.end(), overlap_less);
  return out;
}

SuperPolynomial assoc_composition(const Overlap& o, const SuperPolynomial& p,
                                  const SuperPolynomial& q) {
  const Word& P = p.leading_word();
  const Word& Q = q.leading_word();
  SuperPolynomial c;
  if (o.kind == OverlapKind::intersection) {
    if (P + o.a != o.w || o.b + Q != o.w || o.b.size() >= P.size() ||
        o.a.empty() || o.b.empty())
      throw Error(ErrorKind::malformed_overlap, "inconsistent intersection");
    c = p.sandwich(1, Word(), o.a) - q.sandwich(1, o.b, Word());
  } else {
    if (P != o.w || o.a + Q + o.b != o.w)
      throw Error(ErrorKind::malformed_overlap, "inconsistent inclusion");
    c = p - q.sandwich(1, o.a, o.b);
  }
  check_below(c, o.w);
  return c;
}

SuperPolynomial lie_composition(const Overlap& o, const SuperPolynomial& p,
                                const SuperPolynomial& q) {
  const AlphabetPtr& x = p.alphabet();
  if (!is_super_lyndon_shirshov_word(o.w, *x))
    throw Error(ErrorKind::witness_not_super_ls,
                "witness '" + x->format(o.w) + "' is not super-LS");
  SuperPolynomial c;
  if (o.kind == OverlapKind::intersection) {
    if (p.leading_word() + o.a != o.w || o.b + q.leading_word() != o.w)
      throw Error(ErrorKind::malformed_overlap, "inconsistent intersection");
    c = substitute_bracketing(o.w, p, 0) -
        substitute_bracketing(o.w, q, o.b.size());
  } else {
    if (p.leading_word() != o.w || o.a + q.leading_word() + o.b != o.w)
      throw Error(ErrorKind::malformed_overlap, "inconsistent inclusion");
    c = p - substitute_bracketing(o.w, q, o.a.size());
  }
  check_below(c, o.w);
  return c;
}

SuperPolynomial composition(const Overlap& o, const RelationSet& s, Mode mode) {
  const auto& p = s[o.left].poly;
  const auto& q = s[o.right].poly;
  return mode == Mode::lie ? lie_composition(o, p, q)
                           : assoc_composition(o, p, q);
}

SuperPolynomial reduce(const SuperPolynomial& p, const RelationSet& s,
                       Mode mode) {
  return mode == Mode::lie ? normal_form_lie(p, s) : normal_form_assoc(p, s);
}

namespace {

// Residues of the given overlaps modulo s; zero entries for closed ones.
std::vector<SuperPolynomial> residues(const std::vector<Overlap>& overlaps,
                                      const RelationSet& s, Mode mode,
                                      unsigned workers,
                                      std::size_t max_failures) {
  std::vector<SuperPolynomial> out(overlaps.size());
  std::atomic<std::size_t> failures{0};
  parallel_for(
      overlaps.size(), workers,
      [&](std::size_t i) {
        out[i] = reduce(composition(overlaps[i], s, mode), s, mode);
        if (!out[i].is_zero()) failures.fetch_add(1);
      },
      [&] { return failures.load() >= max_failures; });
  return out;
}

std::vector<Overlap> usable(std::vector<Overlap> overlaps, const RelationSet& s,
                            Mode mode, std::size_t* skipped) {
  if (mode != Mode::lie) return overlaps;
  std::vector<Overlap> keep;
  for (auto& o : overlaps) {
    if (is_super_lyndon_shirshov_word(o.w, *s.alphabet()))
      keep.push_back(std::move(o));
    else if (skipped)
      ++*skipped;
  }
  return keep;
}

}  // namespace

ClosureReport is_closed(const RelationSet& s, Mode mode,
                        const ClosureOptions& options) {
  ClosureReport report;
  std::vector<Overlap> overlaps;
  for (auto& o : all_overlaps(s))
    if (o.w.size() <= options.max_witness) overlaps.push_back(std::move(o));
  overlaps = usable(std::move(overlaps), s, mode, &report.skipped_witnesses);
  unsigned workers = options.workers ? options.workers : default_workers();
  auto values = residues(overlaps, s, mode, workers, options.max_failures);
  report.compositions = overlaps.size();
  for (std::size_t i = 0; i < overlaps.size(); ++i)
    if (!values[i].is_zero() && report.nonzero.size() < options.max_failures)
      report.nonzero.push_back({overlaps[i], std::move(values[i])});
  return report;
}

CompletionResult complete(const RelationSet& s, Mode mode,
                          std::size_t max_degree, unsigned workers) {
  if (workers == 0) workers = default_workers();
  CompletionResult result{s};
  std::size_t done = 0;
  for (;;) {
    std::size_t n = result.set.size();
    std::vector<Overlap> pending;
    for (auto& o : overlaps_of_pairs(result.set, done))
      if (o.w.size() <= max_degree) pending.push_back(std::move(o));
    pending = usable(std::move(pending), result.set, mode, nullptr);
    std::sort(pending.begin(), pending.end(), overlap_less);
    if (pending.empty()) break;
    auto values = residues(pending, result.set, mode, workers,
                           std::numeric_limits<std::size_t>::max());
    done = n;
    ++result.rounds;
    std::size_t added = 0;
    for (auto& v : values) {
      if (v.is_zero()) continue;
      // Re-reduce against relations adjoined earlier in this round.
      SuperPolynomial r = reduce(v, result.set, mode);
      if (r.is_zero()) continue;
      if (result.set.add(r, mode == Mode::lie)) ++added;
    }
    result.adjoined += added;
    if (added == 0) break;
  }
  std::vector<Overlap> beyond;
  for (auto& o : all_overlaps(result.set))
    if (o.w.size() > max_degree) beyond.push_back(std::move(o));
  beyond = usable(std::move(beyond), result.set, mode, nullptr);
  auto values = residues(beyond, result.set, mode, workers, 1);
  result.fixpoint = std::all_of(values.begin(), values.end(),
                                [](const SuperPolynomial& v) { return v.is_zero(); });
  return result;
}

EquivalenceReport check_equivalence(const RelationSet& s, unsigned workers) {
  ClosureOptions options;
  options.max_failures = 1;
  options.workers = workers;
  EquivalenceReport r;
  r.lie_closed = is_closed(s, Mode::lie, options).closed();
  r.assoc_closed = is_closed(s, Mode::associative, options).closed();
  return r;
}

}  // namespace superlie
