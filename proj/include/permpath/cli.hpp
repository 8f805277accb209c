#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "permpath/oracle.hpp"

namespace permpath::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;
inline constexpr int kDomain = 4;
inline constexpr int kMismatch = 5;

/// Filters parsed from an `enumerate --filter` expression. Atoms:
///   pattern(<word>)==<int>   first>=<int>   last_inc(<int>)
///   pos_of_max<=<int>        height<=<int>
/// joined by `&&`. `height` applies to Dyck paths, the rest to permutations.
struct ParsedFilter {
  oracle::PermFilter perm;
  oracle::PathFilter path;
  int perm_atoms = 0;
  int path_atoms = 0;
};

/// Adds the atoms of `text` to `into`. Throws InvalidInput naming the
/// 1-based column of the first bad token.
void parse_filter(std::string_view text, ParsedFilter& into);

/// Runs one command line; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permpath::cli
