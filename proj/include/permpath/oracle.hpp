#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permpath/bigint.hpp"
#include "permpath/formulas.hpp"
#include "permpath/lattice_path.hpp"
#include "permpath/permutation.hpp"

namespace permpath::oracle {

/// Size caps for exhaustive scans. Exceeding one raises ResourceLimit.
struct Limits {
  int max_perm_n = 11;    // full S_n scans
  int max_pruned_n = 14;  // prefix-pruned scans of few-occurrence classes
  int max_path_n = 14;    // semilength of Dyck paths, half the step count otherwise
};

/// Worker threads for parallel scans: PERMPATH_WORKERS if set and positive,
/// else the hardware concurrency. Results never depend on it.
int worker_count();

/// Conjunction of predicates on a word. Pattern conditions ask for an exact
/// number of occurrences.
class PermFilter {
 public:
  using Predicate = std::function<bool(std::span<const int>)>;

  PermFilter& pattern_count(const Pattern& t, std::size_t count);
  PermFilter& avoiding(const Pattern& t) { return pattern_count(t, 0); }
  PermFilter& first_eq(int k);
  PermFilter& first_ge(int k);
  PermFilter& last_le(int v);
  PermFilter& last_increasing(int i);
  /// n sits at position <= pos.
  PermFilter& pos_of_max_le(int pos);
  /// 1 sits at position >= pos.
  PermFilter& pos_of_one_ge(int pos);
  PermFilter& where(std::string label, Predicate pred);

  bool operator()(std::span<const int> word) const;
  bool empty() const { return patterns_.empty() && preds_.empty(); }
  std::string describe() const;

 private:
  struct PatternCond {
    Pattern pattern;
    std::size_t count;
  };
  std::vector<PatternCond> patterns_;
  std::vector<Predicate> preds_;
  std::vector<std::string> labels_;
};

/// Filter selecting exactly the members of a family.
PermFilter family_filter(Family f);

/// Lazy lexicographic stream over the members of S_n passing a filter.
class PermStream {
 public:
  PermStream(int n, PermFilter filter, const Limits& limits = {});
  std::optional<Permutation> next();

 private:
  std::vector<int> word_;
  PermFilter filter_;
  bool done_ = false;
};

/// All members of S_n passing the filter, lexicographic. Runs in parallel,
/// split by first letter.
std::vector<Permutation> enumerate_perms(int n, const PermFilter& filter, const Limits& limits = {});
std::uint64_t count_perms(int n, const PermFilter& filter, const Limits& limits = {});

/// Permutations on [n] with at most `max_occurrences` copies of t (exactly,
/// when `exact`), by prefix-pruned depth-first search, lexicographic. Reaches
/// sizes a full scan cannot.
std::vector<Permutation> enumerate_few_occurrences(int n, const Pattern& t, std::size_t max_occurrences,
                                                   bool exact, const Limits& limits = {});
/// Same scan, streamed to `visit`; `first_letter` > 0 fixes the first entry.
void visit_few_occurrences(int n, const Pattern& t, std::size_t max_occurrences, bool exact,
                           const std::function<void(std::span<const int>)>& visit, const Limits& limits = {},
                           int first_letter = 0);

/// Predicates on a path and its statistics.
class PathFilter {
 public:
  using Predicate = std::function<bool(const LatticePath&, const PathStats&)>;

  PathFilter& first_ascent_eq(int k);
  PathFilter& first_ascent_ge(int k);
  PathFilter& last_descent_ge(int s);
  PathFilter& interior_returns_ge(int j);
  /// At least s nonfinal descents, the first s of them 1.
  PathFilter& nonfinal_descents_one(int s);
  /// At least s noninitial ascents, the last s of them 1.
  PathFilter& noninitial_ascents_last_one(int s);
  PathFilter& height_le(int h);
  PathFilter& where(std::string label, Predicate pred);

  bool operator()(const LatticePath& p) const;
  std::string describe() const;

 private:
  std::vector<Predicate> preds_;
  std::vector<std::string> labels_;
};

/// Lazy stream over paths of `ups` upsteps and `downs` downsteps whose
/// heights stay within [lo, hi], lexicographic with D < U.
class PathStream {
 public:
  PathStream(int ups, int downs, int lo, int hi, PathFilter filter);
  std::optional<LatticePath> next();

 private:
  bool feasible(int h, int u, int d) const;
  void complete_from(std::size_t i, int h, int u, int d);
  bool advance();

  std::vector<Step> steps_;
  int ups_, downs_, lo_, hi_;
  PathFilter filter_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LatticePath> enumerate_dyck(int n, const PathFilter& filter = {}, const Limits& limits = {});
std::vector<LatticePath> enumerate_quadrant(int ups, int downs, const PathFilter& filter = {},
                                            const Limits& limits = {});
/// Paths of n+h-1 ups and n downs inside -r <= y <= s+h-1.
std::vector<LatticePath> enumerate_corridor(int n, int h, int r, int s, const Limits& limits = {});
std::uint64_t count_dyck(int n, const PathFilter& filter = {}, const Limits& limits = {});

/// Brute-force count of a family.
BigInt oracle_count(Family f, int n, const Limits& limits = {});

/// Counts of every family over S_n from a single scan.
std::map<Family, BigInt> tally_families(int n, const Limits& limits = {});

/// For each path of n+k ups and n downs and each of its top k levels, the
/// x-coordinate of the leftmost point on that level. Returns the histogram of
/// those coordinates over [1, 2n+k].
std::map<int, BigInt> marked_highpoint_histogram(int n, int k, const Limits& limits = {});

}  // namespace permpath::oracle
