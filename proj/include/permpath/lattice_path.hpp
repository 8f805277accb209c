#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpath {

enum class Step : char { Up = 'U', Down = 'D' };

/// A path of unit up/down steps starting at the origin.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a string over {U, D}; whitespace is ignored.
  static LatticePath parse(std::string_view text);
  /// Builds U^{a_1} D^{d_1} U^{a_2} D^{d_2} ... from run lengths. The
  /// sequences must have equal length and positive entries.
  static LatticePath from_runs(std::span<const int> ascents, std::span<const int> descents);

  std::span<const Step> steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int ups() const;
  int downs() const;
  int final_height() const { return ups() - downs(); }
  bool empty() const { return steps_.empty(); }

  /// Every prefix ends weakly above the x-axis.
  bool first_quadrant() const;
  /// First quadrant and balanced.
  bool dyck() const;

  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::vector<Step> steps_;
};

struct PathStats {
  int height = 0;            // maximum height reached
  int returns = 0;           // downsteps landing on the x-axis
  int interior_returns = 0;  // returns other than at the final step
  std::vector<int> ascent_seq;
  std::vector<int> descent_seq;
  int first_ascent = 0;  // length of the initial up-run, 0 if the path starts down
  int last_descent = 0;  // length of the final down-run, 0 if the path ends up
  bool starts_up = true;
};

/// One-pass statistics. Interleaving the run sequences (starting with
/// ascents when `starts_up`) reproduces the path.
PathStats path_stats(const LatticePath& p);

/// Ascents other than the first.
std::span<const int> noninitial_ascents(const PathStats& s);
/// Descents other than the last.
std::span<const int> nonfinal_descents(const PathStats& s);

}  // namespace permpath
