#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permpath::verify {

/// One named invariant checked over many cases.
struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples;  // first few failing cases

  bool passed() const { return failures == 0; }
  void expect(bool ok, const std::function<std::string()>& describe_failure);
};

using Report = std::vector<Check>;

enum class Suite { Formulas, Bijections, Identities, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

/// Runs a suite. `nmax` bounds the permutation sizes; path and identity
/// checks use fixed ranges.
Report run(Suite s, int nmax);

// Groups the suites are built from.

/// reduce/reverse/complement, occurrence counts, avoider counts.
Report core_invariants(int nmax);
/// Every family's closed form against a scan of S_n, nmin <= n <= nmax.
Report family_counts(int nmin, int nmax);
/// Closed-form counts of 321-avoider classes against enumeration.
Report avoider_classes(int nmax);
/// Sums over decompositions that reassemble the family totals.
Report formula_chains(int nmax);
/// Round trips and image-equals-codomain for every bijection.
/// Sizes: kratt up to min(nmax, 9), permutation maps up to min(nmax, 8),
/// path maps up to `path_max`.
Report bijection_checks(int nmax, int path_max = 10);
/// Ballot, binomial and F/G identities over the fixed ranges.
Report ballot_identities();
/// Dyck class closed forms against path enumeration, n <= nmax.
Report dyck_classes(int nmax);
/// Chebyshev quotients, corridor counts, Catalan triangle.
Report series_checks(int height_nmax = 12, int corridor_nmax = 8);
/// Uniform marked high point histograms for n + k <= total_max.
Report highpoint_uniformity(int total_max = 10);

bool all_passed(const Report& r);

}  // namespace permpath::verify
