#include "permpath/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "permpath/errors.hpp"

namespace permpath::oracle {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw InvalidInput(std::string(what) + " size must be >= 0");
  if (n > cap)
    throw ResourceLimit(std::string(what) + " size " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(cap));
}

// Runs body(word, acc) for every member of S_n, lexicographically within
// each first letter. Work is spread over
// threads by first letter; `Acc` collects each letter's share separately so
// the merge is in canonical order.
template <typename Acc, typename Body>
std::vector<Acc> scan_by_first_letter(int n, Body body) {
  if (n == 0) {
    std::vector<Acc> out(1);
    std::vector<int> empty;
    body(std::span<const int>(empty), out[0]);
    return out;
  }
  std::vector<Acc> parts(static_cast<std::size_t>(n));
  std::atomic<int> next{1};
  auto work = [&] {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int f; (f = next.fetch_add(1)) <= n;) {
      w[0] = f;
      int letter = 1;
      for (int i = 1; i < n; ++i, ++letter) {
        if (letter == f) ++letter;
        w[static_cast<std::size_t>(i)] = letter;
      }
      Acc& acc = parts[static_cast<std::size_t>(f - 1)];
      do {
        body(std::span<const int>(w), acc);
      } while (std::next_permutation(w.begin() + 1, w.end()));
    }
  };
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return parts;
}

bool tail_increasing(std::span<const int> w, int i) {
  const int n = static_cast<int>(w.size());
  if (n < i) return false;
  for (int j = n - i + 1; j < n; ++j)
    if (w[j - 1] > w[j]) return false;
  return true;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("PERMPATH_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// --- PermFilter ------------------------------------------------------------

PermFilter& PermFilter::pattern_count(const Pattern& t, std::size_t count) {
  patterns_.push_back({t, count});
  labels_.push_back("pattern(" + t.to_string() + ")==" + std::to_string(count));
  return *this;
}

PermFilter& PermFilter::where(std::string label, Predicate pred) {
  preds_.push_back(std::move(pred));
  labels_.push_back(std::move(label));
  return *this;
}

PermFilter& PermFilter::first_eq(int k) {
  return where("first==" + std::to_string(k), [k](std::span<const int> w) { return !w.empty() && w[0] == k; });
}

PermFilter& PermFilter::first_ge(int k) {
  return where("first>=" + std::to_string(k), [k](std::span<const int> w) { return !w.empty() && w[0] >= k; });
}

PermFilter& PermFilter::last_le(int v) {
  return where("last<=" + std::to_string(v), [v](std::span<const int> w) { return !w.empty() && w.back() <= v; });
}

PermFilter& PermFilter::last_increasing(int i) {
  return where("last_inc(" + std::to_string(i) + ")", [i](std::span<const int> w) { return tail_increasing(w, i); });
}

PermFilter& PermFilter::pos_of_max_le(int pos) {
  return where("pos_of_max<=" + std::to_string(pos), [pos](std::span<const int> w) {
    auto it = std::max_element(w.begin(), w.end());
    return it != w.end() && static_cast<int>(it - w.begin()) + 1 <= pos;
  });
}

PermFilter& PermFilter::pos_of_one_ge(int pos) {
  return where("pos_of_one>=" + std::to_string(pos), [pos](std::span<const int> w) {
    auto it = std::min_element(w.begin(), w.end());
    return it != w.end() && static_cast<int>(it - w.begin()) + 1 >= pos;
  });
}

bool PermFilter::operator()(std::span<const int> word) const {
  for (const auto& pred : preds_)
    if (!pred(word)) return false;
  for (const auto& c : patterns_)
    if (count_occurrences(word, c.pattern, c.count) != c.count) return false;
  return true;
}

std::string PermFilter::describe() const {
  if (labels_.empty()) return "true";
  std::string s;
  for (const auto& l : labels_) s += (s.empty() ? "" : " && ") + l;
  return s;
}

PermFilter family_filter(Family f) {
  PermFilter filt;
  switch (f) {
    case Family::P132_1:
      return filt.pattern_count(patterns::p132, 1);
    case Family::P321_1:
    case Family::P321_2:
    case Family::P321_3:
    case Family::P321_4:
      return filt.pattern_count(patterns::p321, static_cast<std::size_t>(f) - static_cast<std::size_t>(Family::P321_1) + 1);
    case Family::P321_1_Last2Up:
      return filt.last_increasing(2).pattern_count(patterns::p321, 1);
    case Family::P321_2_Last2Up:
      return filt.last_increasing(2).pattern_count(patterns::p321, 2);
    case Family::SimionSchmidt:
      return filt.avoiding(patterns::p123).avoiding(patterns::p132);
    case Family::P123Avoid132_1:
    case Family::P123Avoid132_2:
    case Family::P123Avoid132_3:
    case Family::P123Avoid132_4:
      return filt.avoiding(patterns::p123)
          .pattern_count(patterns::p132,
                         static_cast<std::size_t>(f) - static_cast<std::size_t>(Family::P123Avoid132_1) + 1);
  }
  throw Unsupported("unknown family");
}

// --- permutation scans -----------------------------------------------------

PermStream::PermStream(int n, PermFilter filter, const Limits& limits) : filter_(std::move(filter)) {
  check_cap(n, limits.max_perm_n, "permutation");
  word_.resize(static_cast<std::size_t>(n));
  std::iota(word_.begin(), word_.end(), 1);
}

std::optional<Permutation> PermStream::next() {
  while (!done_) {
    std::vector<int> current = word_;
    done_ = !std::next_permutation(word_.begin(), word_.end());
    if (filter_(current)) return Permutation(std::move(current));
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate_perms(int n, const PermFilter& filter, const Limits& limits) {
  check_cap(n, limits.max_perm_n, "permutation");
  auto parts = scan_by_first_letter<std::vector<Permutation>>(
      n, [&filter](std::span<const int> w, std::vector<Permutation>& acc) {
        if (filter(w)) acc.emplace_back(std::vector<int>(w.begin(), w.end()));
      });
  std::vector<Permutation> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::uint64_t count_perms(int n, const PermFilter& filter, const Limits& limits) {
  check_cap(n, limits.max_perm_n, "permutation");
  auto parts = scan_by_first_letter<std::uint64_t>(
      n, [&filter](std::span<const int> w, std::uint64_t& acc) { acc += filter(w) ? 1 : 0; });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::vector<Permutation> enumerate_few_occurrences(int n, const Pattern& t, std::size_t max_occurrences,
                                                   bool exact, const Limits& limits) {
  std::vector<Permutation> out;
  visit_few_occurrences(
      n, t, max_occurrences, exact,
      [&out](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); }, limits);
  return out;
}

void visit_few_occurrences(int n, const Pattern& t, std::size_t max_occurrences, bool exact,
                           const std::function<void(std::span<const int>)>& visit, const Limits& limits,
                           int first_letter) {
  check_cap(n, limits.max_pruned_n, "pruned permutation");
  std::vector<int> w;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto dfs = [&](auto&& self, std::size_t occ) -> void {
    if (static_cast<int>(w.size()) == n) {
      if (!exact || occ == max_occurrences) visit(w);
      return;
    }
    const bool fixed = w.empty() && first_letter > 0;
    for (int x = fixed ? first_letter : 1; x <= (fixed ? std::min(first_letter, n) : n); ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      w.push_back(x);
      std::size_t total = occ + count_occurrences_ending_at_last(w, t);
      if (total <= max_occurrences) {
        used[static_cast<std::size_t>(x)] = true;
        self(self, total);
        used[static_cast<std::size_t>(x)] = false;
      }
      w.pop_back();
    }
  };
  dfs(dfs, 0);
}

// --- PathFilter ------------------------------------------------------------

PathFilter& PathFilter::where(std::string label, Predicate pred) {
  preds_.push_back(std::move(pred));
  labels_.push_back(std::move(label));
  return *this;
}

PathFilter& PathFilter::first_ascent_eq(int k) {
  return where("first_ascent==" + std::to_string(k),
               [k](const LatticePath&, const PathStats& s) { return s.first_ascent == k; });
}

PathFilter& PathFilter::first_ascent_ge(int k) {
  return where("first_ascent>=" + std::to_string(k),
               [k](const LatticePath&, const PathStats& s) { return s.first_ascent >= k; });
}

PathFilter& PathFilter::last_descent_ge(int d) {
  return where("last_descent>=" + std::to_string(d),
               [d](const LatticePath&, const PathStats& s) { return s.last_descent >= d; });
}

PathFilter& PathFilter::interior_returns_ge(int j) {
  return where("interior_returns>=" + std::to_string(j),
               [j](const LatticePath&, const PathStats& s) { return s.interior_returns >= j; });
}

PathFilter& PathFilter::nonfinal_descents_one(int k) {
  return where("nonfinal_descents_one(" + std::to_string(k) + ")", [k](const LatticePath&, const PathStats& s) {
    auto nd = nonfinal_descents(s);
    if (static_cast<int>(nd.size()) < k) return false;
    return std::all_of(nd.begin(), nd.begin() + k, [](int x) { return x == 1; });
  });
}

PathFilter& PathFilter::noninitial_ascents_last_one(int k) {
  return where("noninitial_ascents_last_one(" + std::to_string(k) + ")",
               [k](const LatticePath&, const PathStats& s) {
                 auto na = noninitial_ascents(s);
                 if (static_cast<int>(na.size()) < k) return false;
                 return std::all_of(na.end() - k, na.end(), [](int x) { return x == 1; });
               });
}

PathFilter& PathFilter::height_le(int h) {
  return where("height<=" + std::to_string(h),
               [h](const LatticePath&, const PathStats& s) { return s.height <= h; });
}

bool PathFilter::operator()(const LatticePath& p) const {
  if (preds_.empty()) return true;
  const PathStats s = path_stats(p);
  for (const auto& pred : preds_)
    if (!pred(p, s)) return false;
  return true;
}

std::string PathFilter::describe() const {
  if (labels_.empty()) return "true";
  std::string s;
  for (const auto& l : labels_) s += (s.empty() ? "" : " && ") + l;
  return s;
}

// --- path scans ------------------------------------------------------------

PathStream::PathStream(int ups, int downs, int lo, int hi, PathFilter filter)
    : ups_(ups), downs_(downs), lo_(lo), hi_(hi), filter_(std::move(filter)) {
  if (ups < 0 || downs < 0) throw InvalidInput("step counts must be >= 0");
  steps_.resize(static_cast<std::size_t>(ups + downs));
}

bool PathStream::feasible(int h, int u, int d) const {
  if (u < 0 || d < 0 || h < lo_ || h > hi_) return false;
  const int target = h + u - d;
  if (target < lo_ || target > hi_) return false;
  return u + d == 0 || lo_ < hi_;
}

void PathStream::complete_from(std::size_t i, int h, int u, int d) {
  for (; i < steps_.size(); ++i) {
    if (d > 0 && feasible(h - 1, u, d - 1)) {
      steps_[i] = Step::Down;
      --h;
      --d;
    } else {
      steps_[i] = Step::Up;
      ++h;
      --u;
    }
  }
}

bool PathStream::advance() {
  const std::size_t len = steps_.size();
  std::vector<int> before(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) before[i + 1] = before[i] + (steps_[i] == Step::Up ? 1 : -1);
  int u_after = 0, d_after = 0;
  for (std::size_t i = len; i-- > 0;) {
    (steps_[i] == Step::Up ? u_after : d_after)++;
    if (steps_[i] != Step::Down) continue;
    const int h = before[i] + 1;
    if (feasible(h, u_after - 1, d_after)) {
      steps_[i] = Step::Up;
      complete_from(i + 1, h, u_after - 1, d_after);
      return true;
    }
  }
  return false;
}

std::optional<LatticePath> PathStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      if (!feasible(0, ups_, downs_)) {
        done_ = true;
        break;
      }
      complete_from(0, 0, ups_, downs_);
    } else if (!advance()) {
      done_ = true;
      break;
    }
    LatticePath p(steps_);
    if (filter_(p)) return p;
  }
  return std::nullopt;
}

namespace {

std::vector<LatticePath> drain(PathStream s) {
  std::vector<LatticePath> out;
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

constexpr int kUnbounded = INT_MAX / 4;

}  // namespace

std::vector<LatticePath> enumerate_dyck(int n, const PathFilter& filter, const Limits& limits) {
  check_cap(n, limits.max_path_n, "Dyck path");
  return drain(PathStream(n, n, 0, kUnbounded, filter));
}

std::vector<LatticePath> enumerate_quadrant(int ups, int downs, const PathFilter& filter, const Limits& limits) {
  if (ups < 0 || downs < 0) throw InvalidInput("step counts must be >= 0");
  check_cap((ups + downs + 1) / 2, limits.max_path_n, "path");
  return drain(PathStream(ups, downs, 0, kUnbounded, filter));
}

std::vector<LatticePath> enumerate_corridor(int n, int h, int r, int s, const Limits& limits) {
  if (h < 1 || r < 0 || s < 0) throw InvalidInput("corridor needs h >= 1 and r, s >= 0");
  const int ups = n + h - 1;
  check_cap((ups + n + 1) / 2, limits.max_path_n, "path");
  return drain(PathStream(ups, n, -r, s + h - 1, {}));
}

std::uint64_t count_dyck(int n, const PathFilter& filter, const Limits& limits) {
  check_cap(n, limits.max_path_n, "Dyck path");
  PathStream s(n, n, 0, kUnbounded, filter);
  std::uint64_t c = 0;
  while (s.next()) ++c;
  return c;
}

// --- family counts -----------------------------------------------------------

BigInt oracle_count(Family f, int n, const Limits& limits) {
  if (n < 1) throw InvalidInput("family counts need n >= 1");
  return BigInt(count_perms(n, family_filter(f), limits));
}

namespace {

struct Tally {
  std::array<std::uint64_t, 12> by_family{};
};

// 123 and 321 counts by middle letter; 132 by direct search, capped at 5.
void classify(std::span<const int> w, Tally& t) {
  const int n = static_cast<int>(w.size());
  std::uint64_t c123 = 0, c321 = 0;
  for (int j = 1; j + 1 < n; ++j) {
    int ls = 0, lg = 0, rs = 0, rg = 0;
    for (int i = 0; i < j; ++i) (w[i] < w[j] ? ls : lg)++;
    for (int k = j + 1; k < n; ++k) (w[k] < w[j] ? rs : rg)++;
    c123 += static_cast<std::uint64_t>(ls) * rg;
    c321 += static_cast<std::uint64_t>(lg) * rs;
  }
  const bool up = tail_increasing(w, 2);
  auto bump = [&t](Family f) { ++t.by_family[static_cast<std::size_t>(f)]; };
  if (c321 >= 1 && c321 <= 4) {
    bump(static_cast<Family>(static_cast<int>(Family::P321_1) + static_cast<int>(c321) - 1));
    if (up && c321 == 1) bump(Family::P321_1_Last2Up);
    if (up && c321 == 2) bump(Family::P321_2_Last2Up);
  }
  const std::size_t c132 = count_occurrences(w, patterns::p132, 4);
  if (c132 == 1) bump(Family::P132_1);
  if (c123 == 0) {
    if (c132 == 0) bump(Family::SimionSchmidt);
    if (c132 >= 1 && c132 <= 4)
      bump(static_cast<Family>(static_cast<int>(Family::P123Avoid132_1) + static_cast<int>(c132) - 1));
  }
}

}  // namespace

std::map<Family, BigInt> tally_families(int n, const Limits& limits) {
  if (n < 1) throw InvalidInput("family counts need n >= 1");
  check_cap(n, limits.max_perm_n, "permutation");
  auto parts = scan_by_first_letter<Tally>(n, [](std::span<const int> w, Tally& t) { classify(w, t); });
  std::map<Family, BigInt> out;
  for (Family f : all_families()) {
    std::uint64_t total = 0;
    for (const auto& p : parts) total += p.by_family[static_cast<std::size_t>(f)];
    out[f] = total;
  }
  return out;
}

std::map<int, BigInt> marked_highpoint_histogram(int n, int k, const Limits& limits) {
  if (n < 0 || k < 1) throw InvalidInput("histogram needs n >= 0 and k >= 1");
  const int len = 2 * n + k;
  check_cap((len + 1) / 2, limits.max_path_n, "path");
  std::map<int, BigInt> hist;
  for (int x = 1; x <= len; ++x) hist[x] = 0;
  PathStream s(n + k, n, -kUnbounded, kUnbounded, {});
  std::vector<int> first_at;
  while (auto p = s.next()) {
    // first_at[h + len] is the leftmost x reaching height h
    first_at.assign(static_cast<std::size_t>(2 * len + 1), -1);
    int h = 0, top = 0;
    int x = 0;
    first_at[static_cast<std::size_t>(len)] = 0;
    for (Step st : p->steps()) {
      ++x;
      h += st == Step::Up ? 1 : -1;
      auto& slot = first_at[static_cast<std::size_t>(h + len)];
      if (slot < 0) slot = x;
      top = std::max(top, h);
    }
    for (int level = top; level > top - k; --level) ++hist[first_at[static_cast<std::size_t>(level + len)]];
  }
  return hist;
}

}  // namespace permpath::oracle
