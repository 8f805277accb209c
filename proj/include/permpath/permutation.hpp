#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpath {

/// A word of distinct positive integers. Positions are 1-indexed in every
/// public accessor; `word()` exposes the raw 0-indexed storage.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);

  std::span<const int> word() const { return word_; }
  const std::vector<int>& letters() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// Letter at 1-indexed position `pos`.
  int at(int pos) const;
  int first() const { return at(1); }
  int last() const { return at(size()); }

  /// Position (1-indexed) of `letter`, or 0 when absent.
  int position_of(int letter) const;
  int max_letter() const;
  int min_letter() const;

  /// True when the letters are exactly {1, ..., n}.
  bool on_range() const;

  auto begin() const { return word_.begin(); }
  auto end() const { return word_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// A permutation of [k], 1 <= k <= 4, used as a pattern.
class Pattern {
 public:
  explicit Pattern(std::vector<int> word);
  Pattern(std::initializer_list<int> word);

  /// Accepts "321", "3 2 1" or "3,2,1".
  static Pattern parse(std::string_view text);

  std::span<const int> word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> word_;
};

namespace patterns {
inline const Pattern p12{1, 2};
inline const Pattern p21{2, 1};
inline const Pattern p123{1, 2, 3};
inline const Pattern p132{1, 3, 2};
inline const Pattern p213{2, 1, 3};
inline const Pattern p231{2, 3, 1};
inline const Pattern p312{3, 1, 2};
inline const Pattern p321{3, 2, 1};
}  // namespace patterns

/// One occurrence of a pattern. `roles[i]` names the role of `letters[i]`:
/// the smallest pattern letter is 'a', the next 'b', and so on, so a 321
/// occurrence reads "cba" and a 132 occurrence reads "acb".
struct Occurrence {
  std::vector<int> positions;  // 1-indexed, strictly increasing
  std::vector<int> letters;
  std::string roles;

  /// Letter playing `role` ('a', 'b', ...).
  int letter(char role) const;
  /// Position of the letter playing `role`.
  int position(char role) const;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct RecordHighs {
  std::vector<int> positions;
  std::vector<int> values;
};

Permutation reduce(std::span<const int> word);
inline Permutation reduce(const Permutation& p) { return reduce(p.word()); }

Permutation reverse(const Permutation& p);
/// Requires `p` on [n].
Permutation complement(const Permutation& p);

std::vector<Occurrence> occurrences(const Permutation& p, const Pattern& t);

/// Counts occurrences, stopping early once the count exceeds `limit`.
std::size_t count_occurrences(std::span<const int> word, const Pattern& t,
                              std::size_t limit = static_cast<std::size_t>(-1));
inline std::size_t count_occurrences(const Permutation& p, const Pattern& t) {
  return count_occurrences(p.word(), t);
}
inline bool avoids(std::span<const int> word, const Pattern& t) {
  return count_occurrences(word, t, 0) == 0;
}
inline bool avoids(const Permutation& p, const Pattern& t) { return avoids(p.word(), t); }

/// Occurrences of `t` whose last letter is the final letter of `word`.
std::size_t count_occurrences_ending_at_last(std::span<const int> word, const Pattern& t);

RecordHighs record_highs(const Permutation& p);

/// Parses "2 1 4 7 3 5 6" or "2,1,4,7,3,5,6". An empty string is the empty
/// permutation.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

}  // namespace permpath
