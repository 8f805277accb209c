#include "permpath/permutation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "permpath/errors.hpp"

namespace permpath {

namespace {

void check_distinct_positive(const std::vector<int>& word) {
  std::unordered_set<int> seen;
  seen.reserve(word.size());
  for (int x : word) {
    if (x <= 0) throw InvalidInput("permutation letters must be positive, got " + std::to_string(x));
    if (!seen.insert(x).second)
      throw InvalidInput("permutation letters must be distinct, " + std::to_string(x) + " repeats");
  }
}

// Relative order table of a pattern: less[u][v] is true iff t[u] < t[v].
struct OrderTable {
  int k = 0;
  std::array<std::array<bool, 4>, 4> less{};

  explicit OrderTable(const Pattern& t) : k(t.size()) {
    auto w = t.word();
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) less[u][v] = w[u] < w[v];
  }
};

template <typename Visit>
bool match_from(std::span<const int> word, const OrderTable& ord, std::array<int, 4>& chosen,
                int depth, int start, Visit&& visit) {
  const int n = static_cast<int>(word.size());
  if (depth == ord.k) return visit(chosen);
  for (int pos = start; pos <= n - (ord.k - depth); ++pos) {
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u)
      ok = (word[chosen[u]] < word[pos]) == ord.less[u][depth];
    if (!ok) continue;
    chosen[depth] = pos;
    if (!match_from(word, ord, chosen, depth + 1, pos + 1, visit)) return false;
  }
  return true;
}

std::vector<int> parse_ints(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '(' || c == ')' || c == '[' ||
        c == ']') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw InvalidInput(std::string("cannot parse ") + what + " at column " + std::to_string(i + 1) +
                         ": '" + std::string(text) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  check_distinct_positive(word_);
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size())
    throw InvalidInput("position " + std::to_string(pos) + " outside [1, " + std::to_string(size()) +
                       "]");
  return word_[static_cast<std::size_t>(pos - 1)];
}

int Permutation::position_of(int letter) const {
  auto it = std::find(word_.begin(), word_.end(), letter);
  return it == word_.end() ? 0 : static_cast<int>(it - word_.begin()) + 1;
}

int Permutation::max_letter() const {
  return word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
}

int Permutation::min_letter() const {
  return word_.empty() ? 0 : *std::min_element(word_.begin(), word_.end());
}

bool Permutation::on_range() const { return max_letter() == size(); }

Pattern::Pattern(std::vector<int> word) : word_(std::move(word)) {
  const int k = size();
  if (k < 1 || k > 4) throw InvalidInput("patterns must have 1 to 4 letters");
  check_distinct_positive(word_);
  if (*std::max_element(word_.begin(), word_.end()) != k)
    throw InvalidInput("pattern must be a permutation of [" + std::to_string(k) + "]");
}

Pattern::Pattern(std::initializer_list<int> word) : Pattern(std::vector<int>(word)) {}

Pattern Pattern::parse(std::string_view text) {
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (separated) return Pattern(parse_ints(text, "pattern"));
  std::vector<int> w;
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidInput("cannot parse pattern '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return Pattern(std::move(w));
}

std::string Pattern::to_string() const {
  std::string s;
  for (int x : word_) s += static_cast<char>('0' + x);
  return s;
}

int Occurrence::letter(char role) const {
  auto idx = roles.find(role);
  if (idx == std::string::npos) throw InvalidInput(std::string("no role '") + role + "'");
  return letters[idx];
}

int Occurrence::position(char role) const {
  auto idx = roles.find(role);
  if (idx == std::string::npos) throw InvalidInput(std::string("no role '") + role + "'");
  return positions[idx];
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("reduce needs distinct entries");
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.begin(), p.end());
  std::reverse(w.begin(), w.end());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  if (!p.on_range()) throw InvalidInput("complement needs a permutation on [n]");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(p.size()));
  for (int x : p) w.push_back(p.size() + 1 - x);
  return Permutation(std::move(w));
}

std::vector<Occurrence> occurrences(const Permutation& p, const Pattern& t) {
  OrderTable ord(t);
  std::string roles;
  for (int x : t.word()) roles += static_cast<char>('a' + x - 1);
  std::vector<Occurrence> out;
  std::array<int, 4> chosen{};
  match_from(p.word(), ord, chosen, 0, 0, [&](const std::array<int, 4>& c) {
    Occurrence occ;
    occ.roles = roles;
    for (int u = 0; u < ord.k; ++u) {
      occ.positions.push_back(c[u] + 1);
      occ.letters.push_back(p.word()[c[u]]);
    }
    out.push_back(std::move(occ));
    return true;
  });
  return out;
}

std::size_t count_occurrences(std::span<const int> word, const Pattern& t, std::size_t limit) {
  OrderTable ord(t);
  const int n = static_cast<int>(word.size());
  std::size_t count = 0;
  if (ord.k == 3) {
    // Unrolled triple loop; this is the hot path of every oracle scan.
    const bool l01 = ord.less[0][1], l02 = ord.less[0][2], l12 = ord.less[1][2];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((word[i] < word[j]) != l01) continue;
        for (int k = j + 1; k < n; ++k) {
          if ((word[i] < word[k]) == l02 && (word[j] < word[k]) == l12) {
            if (++count > limit) return count;
          }
        }
      }
    }
    return count;
  }
  std::array<int, 4> chosen{};
  match_from(word, ord, chosen, 0, 0, [&](const std::array<int, 4>&) { return ++count <= limit; });
  return count;
}

std::size_t count_occurrences_ending_at_last(std::span<const int> word, const Pattern& t) {
  if (word.empty()) return 0;
  OrderTable ord(t);
  const int n = static_cast<int>(word.size());
  const int k = ord.k;
  if (k == 1) return 1;
  // Occurrences of the pattern's first k-1 letters in the prefix that stay
  // consistent with the final letter.
  std::array<int, 4> chosen{};
  chosen[k - 1] = n - 1;
  std::size_t count = 0;
  auto prefix = word.first(static_cast<std::size_t>(n - 1));
  struct Frame {
    static void run(std::span<const int> full, std::span<const int> prefix, const OrderTable& ord,
                    std::array<int, 4>& chosen, int depth, int start, std::size_t& count) {
      const int k = ord.k;
      if (depth == k - 1) {
        ++count;
        return;
      }
      const int m = static_cast<int>(prefix.size());
      for (int pos = start; pos <= m - (k - 1 - depth); ++pos) {
        bool ok = (full[pos] < full[chosen[k - 1]]) == ord.less[depth][k - 1];
        for (int u = 0; u < depth && ok; ++u) ok = (full[chosen[u]] < full[pos]) == ord.less[u][depth];
        if (!ok) continue;
        chosen[depth] = pos;
        run(full, prefix, ord, chosen, depth + 1, pos + 1, count);
      }
    }
  };
  Frame::run(word, prefix, ord, chosen, 0, 0, count);
  return count;
}

RecordHighs record_highs(const Permutation& p) {
  RecordHighs r;
  int best = 0;
  for (int i = 0; i < p.size(); ++i) {
    int x = p.word()[i];
    if (x > best) {
      best = x;
      r.positions.push_back(i + 1);
      r.values.push_back(x);
    }
  }
  return r;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_ints(text, "permutation"));
}

std::string to_string(const Permutation& p) {
  std::string s;
  for (int x : p) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

}  // namespace permpath
