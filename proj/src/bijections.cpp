#include "permpath/bijections.hpp"

#include <algorithm>
#include <numeric>

#include "permpath/errors.hpp"

namespace permpath {

namespace {

void require(bool ok, const std::string& predicate) {
  if (!ok) throw DomainError("domain violation: " + predicate);
}

void require_on_range(const Permutation& p) {
  require(p.on_range(), "input must be a permutation of [n]");
}

std::vector<int> slice(const Permutation& p, int from, int to) {
  // 1-indexed, inclusive; empty when from > to
  if (from > to) return {};
  return std::vector<int>(p.begin() + (from - 1), p.begin() + to);
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool last_increasing(const Permutation& p, int i) {
  for (int j = p.size() - i + 2; j <= p.size(); ++j)
    if (p.at(j - 1) > p.at(j)) return false;
  return true;
}

Occurrence unique_occurrence(const Permutation& p, const Pattern& t) {
  auto occ = occurrences(p, t);
  require(occ.size() == 1, "must contain exactly one " + t.to_string() + " (found " +
                               std::to_string(occ.size()) + ")");
  return occ.front();
}

}  // namespace

LatticePath kratt_forward(const Permutation& p) {
  require_on_range(p);
  require(avoids(p, patterns::p321), "must avoid 321");
  if (p.empty()) return {};
  const auto highs = record_highs(p);
  std::vector<int> ascents, descents;
  int prev_value = 0;
  for (std::size_t j = 0; j < highs.values.size(); ++j) {
    ascents.push_back(highs.values[j] - prev_value);
    prev_value = highs.values[j];
    int next_pos = j + 1 < highs.positions.size() ? highs.positions[j + 1] : p.size() + 1;
    descents.push_back(next_pos - highs.positions[j]);
  }
  return LatticePath::from_runs(ascents, descents);
}

Permutation kratt_inverse(const LatticePath& d) {
  require(d.dyck(), "must be a Dyck path");
  const int n = d.ups();
  const auto stats = path_stats(d);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  int value = 0, pos = 1;
  for (std::size_t j = 0; j < stats.ascent_seq.size(); ++j) {
    value += stats.ascent_seq[j];
    word[static_cast<std::size_t>(pos - 1)] = value;
    used[static_cast<std::size_t>(value)] = true;
    pos += stats.descent_seq[j];
  }
  int next_letter = 1;
  for (int& slot : word) {
    if (slot != 0) continue;
    while (used[static_cast<std::size_t>(next_letter)]) ++next_letter;
    slot = next_letter++;
  }
  return Permutation(std::move(word));
}

ReturnsDeletion delete_returns(const LatticePath& p) {
  require(p.first_quadrant(), "must be a first-quadrant path");
  require(!p.empty() && p.steps().front() == Step::Up, "must start with an upstep");
  ReturnsDeletion out;
  std::vector<Step> kept;
  int h = 0;
  auto steps = p.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == Step::Up ? 1 : -1;
    if (i == 0) continue;
    if (steps[i] == Step::Down && h == 0) {
      ++out.returns;
      continue;
    }
    kept.push_back(steps[i]);
  }
  out.path = LatticePath(std::move(kept));
  return out;
}

LatticePath insert_returns(const LatticePath& q, int returns) {
  require(q.first_quadrant(), "must be a first-quadrant path");
  require(returns >= 0 && returns <= q.final_height() + 1,
          "return count must lie in [0, final height + 1]");
  std::vector<Step> lifted{Step::Up};
  lifted.insert(lifted.end(), q.steps().begin(), q.steps().end());
  const int len = static_cast<int>(lifted.size());
  std::vector<int> before(static_cast<std::size_t>(len));
  int h = 0;
  for (int t = 0; t < len; ++t) {
    before[t] = h;
    h += lifted[t] == Step::Up ? 1 : -1;
  }
  const int final_height = h;
  std::vector<int> cuts;
  for (int level = 1; level <= returns; ++level) {
    // The top block closes at the end when nothing follows it.
    int cut = len;
    if (level < final_height)
      for (int t = len - 1; t >= 0; --t)
        if (lifted[t] == Step::Up && before[t] == level) {
          cut = t;
          break;
        }
    cuts.push_back(cut);
  }
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it)
    lifted.insert(lifted.begin() + *it, Step::Down);
  return LatticePath(std::move(lifted));
}

LatticePath transfer_nonfinal(const LatticePath& d, int i) {
  require(d.dyck(), "must be a Dyck path");
  require(i >= 0, "transfer count must be >= 0");
  if (i == 0) return d;
  const auto stats = path_stats(d);
  const auto nonfinal = nonfinal_descents(stats);
  require(static_cast<int>(nonfinal.size()) >= i &&
              std::all_of(nonfinal.begin(), nonfinal.begin() + i, [](int x) { return x == 1; }),
          "first " + std::to_string(i) + " nonfinal descents must all be 1");
  require(d.ups() > i + stats.last_descent, "semilength must exceed i + last descent");
  std::vector<Step> out(static_cast<std::size_t>(i), Step::Up);
  int downs_seen = 0;
  bool skip_up = false;
  for (Step s : d.steps()) {
    if (s == Step::Up && skip_up) {
      skip_up = false;
      continue;
    }
    out.push_back(s);
    if (s == Step::Down && ++downs_seen <= i) skip_up = true;
  }
  return LatticePath(std::move(out));
}

LatticePath untransfer_nonfinal(const LatticePath& d, int i) {
  require(d.dyck(), "must be a Dyck path");
  require(i >= 0, "transfer count must be >= 0");
  if (i == 0) return d;
  const auto stats = path_stats(d);
  require(stats.first_ascent >= i + 1, "first ascent must be >= i + 1");
  require(d.ups() > i + stats.last_descent, "semilength must exceed i + last descent");
  std::vector<Step> out;
  int downs_seen = 0;
  auto steps = d.steps();
  for (std::size_t t = static_cast<std::size_t>(i); t < steps.size(); ++t) {
    out.push_back(steps[t]);
    if (steps[t] == Step::Down && ++downs_seen <= i) out.push_back(Step::Up);
  }
  return LatticePath(std::move(out));
}

Permutation tail_phi(const Permutation& p, int i) {
  require_on_range(p);
  require(avoids(p, patterns::p321), "must avoid 321");
  const int n = p.size();
  require(n > i && i >= 1, "needs n > i >= 1");
  require(last_increasing(p, i), "last " + std::to_string(i) + " entries must increase");
  if (p.position_of(n) <= n - i) return p;
  std::vector<int> w(p.begin(), p.end() - 1);
  w.insert(w.begin() + (n - i), n);
  return Permutation(std::move(w));
}

Permutation tail_phi_inverse(const Permutation& p, int i) {
  require_on_range(p);
  require(avoids(p, patterns::p321), "must avoid 321");
  const int n = p.size();
  require(n > i && i >= 1, "needs n > i >= 1");
  const int pos = p.position_of(n);
  require(pos <= n - i + 1, "n must not be among the last " + std::to_string(i - 1) + " entries");
  if (pos <= n - i) return p;
  std::vector<int> w(p.begin(), p.end());
  w.erase(w.begin() + (pos - 1));
  w.push_back(n);
  return Permutation(std::move(w));
}

Decomposition split_consecutive_132(const Permutation& p) {
  require_on_range(p);
  const auto occ = unique_occurrence(p, patterns::p132);
  const int k = occ.positions[0];
  require(occ.positions[1] == k + 1 && occ.positions[2] == k + 2,
          "the 132 must occupy consecutive positions");
  auto rest = concat({slice(p, 1, k - 1), {occ.letter('c')}, slice(p, k + 3, p.size())});
  return {reduce(rest), std::nullopt, k};
}

Permutation join_consecutive_132(const Permutation& rho, int k) {
  require_on_range(rho);
  require(avoids(rho, patterns::p132), "rho must avoid 132");
  require(k >= 1 && k <= rho.size(), "k must lie in [1, |rho|]");
  const int c_reduced = rho.at(k);
  int smaller_after = 0;
  for (int j = k + 1; j <= rho.size(); ++j)
    if (rho.at(j) < c_reduced) ++smaller_after;
  // Every letter below a follows c, so a is one more than that count.
  const int a = smaller_after + 1;
  std::vector<int> w;
  for (int j = 1; j <= rho.size(); ++j) {
    if (j == k) w.push_back(a);
    int x = rho.at(j);
    w.push_back(x >= a ? x + 2 : x);
    if (j == k) w.push_back(a + 1);
  }
  return Permutation(std::move(w));
}

Permutation strip_outer_132(const Permutation& p) {
  require_on_range(p);
  const int n = p.size();
  const auto occ = unique_occurrence(p, patterns::p132);
  require(occ.positions == std::vector<int>{1, 2, n},
          "the 132 must occupy the first, second and last positions");
  return Permutation(slice(p, 3, n - 1));
}

Permutation wrap_outer_132(const Permutation& w2) {
  require_on_range(w2);
  require(avoids(w2, patterns::p132), "W2 must avoid 132");
  const int n = w2.size() + 3;
  return Permutation(concat({{n - 2, n}, w2.letters(), {n - 1}}));
}

Decomposition split_132_by_gap(const Permutation& p) {
  require_on_range(p);
  const auto occ = unique_occurrence(p, patterns::p132);
  const int pa = occ.positions[0], pc = occ.positions[1], pb = occ.positions[2];
  require(pc == pa + 1, "a and c must be adjacent");
  const int k = pb - pc - 1;
  auto rho = reduce(concat({slice(p, 1, pc), slice(p, pb, p.size())}));
  auto sigma = reduce(slice(p, pa, pb));
  return {std::move(rho), std::move(sigma), k};
}

Permutation join_132_by_gap(const Permutation& rho, const Permutation& sigma) {
  require_on_range(rho);
  require_on_range(sigma);
  require(sigma.size() >= 3, "sigma must have at least 3 letters");
  const Permutation middle = strip_outer_132(sigma);
  const int k = sigma.size() - 3;
  const auto occ = unique_occurrence(rho, patterns::p132);
  const int p = occ.positions[0];
  require(occ.positions[1] == p + 1 && occ.positions[2] == p + 2,
          "the 132 of rho must occupy consecutive positions");
  const int a_reduced = occ.letter('a');
  std::vector<int> lifted;
  for (int x : rho) lifted.push_back(x >= a_reduced ? x + k : x);
  std::vector<int> gap;
  for (int y : middle) gap.push_back(y + a_reduced - 1);
  std::vector<int> w(lifted.begin(), lifted.begin() + (p + 1));
  w.insert(w.end(), gap.begin(), gap.end());
  w.insert(w.end(), lifted.begin() + (p + 1), lifted.end());
  return Permutation(std::move(w));
}

Decomposition split_one_321(const Permutation& p) {
  require_on_range(p);
  const auto occ = unique_occurrence(p, patterns::p321);
  const int b = occ.letter('b');
  const int pb = occ.position('b');
  require(pb == b, "middle letter of the 321 must be a fixed point");
  auto rho = reduce(concat({slice(p, 1, pb - 1), {occ.letter('a')}}));
  auto sigma = reduce(concat({{occ.letter('c')}, slice(p, pb + 1, p.size())}));
  return {std::move(rho), std::move(sigma), b};
}

Permutation join_one_321(const Permutation& rho, const Permutation& sigma) {
  require_on_range(rho);
  require_on_range(sigma);
  require(avoids(rho, patterns::p321) && avoids(sigma, patterns::p321), "rho and sigma must avoid 321");
  const int b = rho.size();
  require(b >= 2 && rho.last() <= b - 1, "rho must have last entry <= |rho| - 1");
  require(sigma.size() >= 2 && sigma.first() >= 2, "sigma must have first entry >= 2");
  const int a = rho.last();
  const int c = sigma.first() + b - 1;
  std::vector<int> w;
  for (int j = 1; j < b; ++j) w.push_back(rho.at(j) == b ? c : rho.at(j));
  w.push_back(b);
  for (int j = 2; j <= sigma.size(); ++j) w.push_back(sigma.at(j) == 1 ? a : sigma.at(j) + b - 1);
  return Permutation(std::move(w));
}

Decomposition split_two_321_common_b(const Permutation& p) {
  require_on_range(p);
  const auto occ = occurrences(p, patterns::p321);
  require(occ.size() == 2, "must contain exactly two 321s (found " + std::to_string(occ.size()) + ")");
  require(occ[0].letter('b') == occ[1].letter('b'), "the two 321s must share their middle letter");
  require(occ[0].letter('a') == occ[1].letter('a'), "the two 321s must share their last letter");
  const int b = occ[0].letter('b');
  const int pb = occ[0].position('b');
  // Occurrences are listed by position, so the first c precedes the second.
  const int c1 = occ[0].letter('c'), c2 = occ[1].letter('c');
  auto rho = reduce(concat({slice(p, 1, pb - 1), {occ[0].letter('a')}}));
  auto sigma = reduce(concat({{c1, c2}, [&] {
                                std::vector<int> w2;
                                for (int j = pb + 1; j <= p.size(); ++j) w2.push_back(p.at(j));
                                return w2;
                              }()}));
  return {std::move(rho), std::move(sigma), b};
}

Permutation join_two_321_common_b(const Permutation& rho, const Permutation& sigma) {
  require_on_range(rho);
  require_on_range(sigma);
  require(avoids(rho, patterns::p321) && avoids(sigma, patterns::p321), "rho and sigma must avoid 321");
  require(rho.size() >= 3 && rho.last() <= rho.size() - 2, "rho must have last entry <= max - 2");
  require(sigma.size() >= 3 && sigma.position_of(1) >= 3, "sigma must have 1 at position >= 3");
  const int b = rho.size() - 1;
  const int a = rho.last();
  const int c1 = sigma.at(1) + b - 1, c2 = sigma.at(2) + b - 1;
  std::vector<int> w;
  for (int j = 1; j <= b; ++j) {
    int x = rho.at(j);
    w.push_back(x == b ? c1 : x == b + 1 ? c2 : x);
  }
  w.push_back(b);
  for (int j = 3; j <= sigma.size(); ++j) w.push_back(sigma.at(j) == 1 ? a : sigma.at(j) + b - 1);
  return Permutation(std::move(w));
}

Decomposition split_two_321_distinct_b(const Permutation& p) {
  require_on_range(p);
  auto occ = occurrences(p, patterns::p321);
  require(occ.size() == 2, "must contain exactly two 321s (found " + std::to_string(occ.size()) + ")");
  require(occ[0].letter('b') != occ[1].letter('b'), "the two 321s must have distinct middle letters");
  std::sort(occ.begin(), occ.end(),
            [](const Occurrence& x, const Occurrence& y) { return x.letter('b') < y.letter('b'); });
  const auto& first = occ[0];
  const auto& second = occ[1];
  const int pb1 = first.position('b'), pb2 = second.position('b');
  require(pb1 < pb2, "middle letters must appear in increasing order");
  const int c1 = first.letter('c'), c2 = second.letter('c');
  const int a1 = first.letter('a'), a2 = second.letter('a');
  std::vector<int> outer;
  for (int j = 1; j < pb1; ++j) outer.push_back(p.at(j) == c1 ? c2 : p.at(j));
  outer.push_back(p.at(pb1));
  for (int j = pb2 + 1; j <= p.size(); ++j) outer.push_back(p.at(j) == a2 ? a1 : p.at(j));
  auto sigma = reduce(concat({{c1}, slice(p, pb1 + 1, pb2 - 1), {a2}}));
  return {reduce(outer), std::move(sigma), pb2 - pb1 - 1};
}

Permutation join_two_321_distinct_b(const Permutation& rho, const Permutation& sigma) {
  require_on_range(rho);
  require_on_range(sigma);
  require(avoids(sigma, patterns::p321), "sigma must avoid 321");
  const int k = sigma.size() - 2;
  require(k >= 0 && sigma.first() >= 2 && sigma.last() <= k + 1,
          "sigma must have first entry > min and last entry < max");
  const auto occ = unique_occurrence(rho, patterns::p321);
  const int b1 = occ.letter('b');
  const int pb = occ.position('b');
  const int c_pos = occ.position('c'), a_pos = occ.position('a');
  const int c2 = occ.letter('c') + k + 1;
  const int a1 = occ.letter('a');
  const int c1 = sigma.first() == k + 2 ? c2 : sigma.first() + b1 - 1;
  const int a2 = sigma.last() == 1 ? a1 : sigma.last() + b1 - 1;
  std::vector<int> w;
  for (int j = 1; j < pb; ++j) w.push_back(j == c_pos ? c1 : rho.at(j));
  w.push_back(b1);
  for (int j = 2; j <= k + 1; ++j) {
    int y = sigma.at(j);
    w.push_back(y == 1 ? a1 : y == k + 2 ? c2 : y + b1 - 1);
  }
  w.push_back(b1 + k + 1);
  for (int j = pb + 1; j <= rho.size(); ++j) w.push_back(j == a_pos ? a2 : rho.at(j) + k + 1);
  return Permutation(std::move(w));
}

}  // namespace permpath
