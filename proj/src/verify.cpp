#include "permpath/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permpath/ballot.hpp"
#include "permpath/bijections.hpp"
#include "permpath/errors.hpp"
#include "permpath/formulas.hpp"
#include "permpath/oracle.hpp"
#include "permpath/series.hpp"

namespace permpath::verify {

void Check::expect(bool ok, const std::function<std::string()>& describe_failure) {
  ++cases;
  if (ok) return;
  ++failures;
  if (samples.size() < 5) samples.push_back(describe_failure());
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "formulas") return Suite::Formulas;
  if (name == "bijections") return Suite::Bijections;
  if (name == "identities") return Suite::Identities;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Formulas:
      return "formulas";
    case Suite::Bijections:
      return "bijections";
    case Suite::Identities:
      return "identities";
    case Suite::All:
      return "all";
  }
  return "?";
}

bool all_passed(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const Check& c) { return c.passed(); });
}

namespace {

using oracle::Limits;
using Perms = std::vector<Permutation>;
using Paths = std::vector<LatticePath>;

const Limits kWide{11, 14, 14};

std::string str(const BigInt& v) { return v.str(); }
std::string str(const Permutation& p) { return "(" + to_string(p) + ")"; }
std::string str(const LatticePath& p) { return p.to_string(); }

std::string mismatch(const std::string& what, const BigInt& expected, const BigInt& got) {
  return what + ": expected " + str(expected) + ", got " + str(got);
}

Perms with_count(int n, const Pattern& t, std::size_t k) {
  return oracle::enumerate_few_occurrences(n, t, k, true, kWide);
}

template <typename T, typename Pred>
std::vector<T> keep(const std::vector<T>& v, Pred pred) {
  std::vector<T> out;
  std::copy_if(v.begin(), v.end(), std::back_inserter(out), pred);
  return out;
}

template <typename T>
bool same_set(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Report append(Report a, Report b) {
  std::move(b.begin(), b.end(), std::back_inserter(a));
  return a;
}

bool last_increasing(const Permutation& p, int i) {
  if (p.size() < i) return false;
  for (int j = p.size() - i + 2; j <= p.size(); ++j)
    if (p.at(j - 1) > p.at(j)) return false;
  return true;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

const std::vector<Pattern>& three_patterns() {
  static const std::vector<Pattern> all{patterns::p123, patterns::p132, patterns::p213,
                                        patterns::p231, patterns::p312, patterns::p321};
  return all;
}

// Runs `body` and turns a library exception into a failed case.
template <typename Body>
void guarded(Check& c, const std::string& label, Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.expect(false, [&] { return label + ": threw " + e.what(); });
  }
}

}  // namespace

// --- formulas suite ----------------------------------------------------------

Report core_invariants(int nmax) {
  Check inv{"reduce is idempotent; reverse and complement are involutions"};
  Check sym{"pattern counts are preserved by reversing word and pattern"};
  Check listing{"occurrence listing agrees with the counter"};
  Check dist{"occurrence-count distribution sums to n!"};
  Check avoid{"321- and 132-avoiders are counted by Catalan numbers"};

  for (int n = 0; n <= std::min(nmax, 7); ++n) {
    for (const auto& p : oracle::enumerate_perms(n, {})) {
      inv.expect(reduce(p) == p && reverse(reverse(p)) == p && complement(complement(p)) == p,
                 [&] { return str(p); });
      for (const auto& t : three_patterns()) {
        const Pattern rt(std::vector<int>(t.word().rbegin(), t.word().rend()));
        sym.expect(count_occurrences(p, t) == count_occurrences(reverse(p), rt),
                   [&] { return str(p) + " with " + t.to_string(); });
        if (n <= 6) {
          listing.expect(count_occurrences(p, t) == occurrences(p, t).size(),
                         [&] { return str(p) + " with " + t.to_string(); });
        }
      }
    }
  }
  for (int n = 0; n <= std::min(nmax, 8); ++n) {
    for (const auto& t : three_patterns()) {
      std::map<std::size_t, std::uint64_t> hist;
      for (const auto& p : oracle::enumerate_perms(n, {})) ++hist[count_occurrences(p, t)];
      BigInt total = 0;
      for (const auto& [k, c] : hist) total += c;
      dist.expect(total == factorial(n), [&] { return "n=" + std::to_string(n) + " " + t.to_string(); });
    }
  }
  for (int n = 0; n <= std::min(nmax, 10); ++n) {
    const BigInt c = catalan(n);
    for (const auto& t : {patterns::p321, patterns::p132}) {
      const auto pruned = with_count(n, t, 0);
      avoid.expect(BigInt(pruned.size()) == c,
                   [&] { return mismatch("n=" + std::to_string(n) + " " + t.to_string(), c, pruned.size()); });
      if (n <= std::min(nmax, 8)) {
        const auto full = oracle::enumerate_perms(n, oracle::PermFilter().avoiding(t));
        avoid.expect(full == pruned, [&] { return "pruned and full scans differ at n=" + std::to_string(n); });
      }
    }
  }
  return {inv, sym, listing, dist, avoid};
}

Report family_counts(int nmin, int nmax) {
  Report out;
  std::map<Family, std::size_t> slot;
  for (Family f : all_families()) {
    slot[f] = out.size();
    out.push_back(Check{"family " + family_name(f) + " (" + family_description(f) + ") matches the scan"});
  }
  Check cross{"single-pass tally agrees with per-family filter scans"};
  for (int n = std::max(nmin, 1); n <= nmax; ++n) {
    const auto tally = oracle::tally_families(n, kWide);
    for (Family f : all_families()) {
      const BigInt formula = count(f, n);
      out[slot[f]].expect(tally.at(f) == formula, [&] {
        return mismatch("n=" + std::to_string(n), formula, tally.at(f));
      });
      if (n <= 8) {
        const BigInt direct = oracle::oracle_count(f, n);
        cross.expect(direct == tally.at(f), [&] { return family_name(f) + " n=" + std::to_string(n); });
      }
    }
  }
  out.push_back(cross);
  return out;
}

Report avoider_classes(int nmax) {
  using namespace avoider_class;
  Check c{"321-avoider class counts match enumeration"};
  Check shifted{"exactly-one-321 count equals 321-avoiders of [n+3] starting with 6"};
  for (int n = 1; n <= std::min(nmax, 10); ++n) {
    const auto av = with_count(n, patterns::p321, 0);
    auto tally = [&](auto pred) { return BigInt(std::count_if(av.begin(), av.end(), pred)); };
    auto check = [&](const ClassConstraint& cc, const BigInt& got) {
      const BigInt want = count_avoider_class(n, cc);
      c.expect(want == got, [&] { return mismatch("n=" + std::to_string(n) + " " + describe(cc), want, got); });
    };
    for (int k = 1; k <= n; ++k) {
      check(FirstEntryEq{k}, tally([k](const Permutation& p) { return p.first() == k; }));
      check(FirstEntryGe{k}, tally([k](const Permutation& p) { return p.first() >= k; }));
      check(OneNotBeforePos{k}, tally([k](const Permutation& p) { return p.position_of(1) >= k; }));
      check(MaxNotAfterPosFromEnd{k},
            tally([k, n](const Permutation& p) { return p.position_of(n) <= n + 1 - k; }));
      check(LastEntryLe{k}, tally([k](const Permutation& p) { return p.last() <= k; }));
      check(LastIIncreasing{k}, tally([k](const Permutation& p) { return last_increasing(p, k); }));
    }
    check(FirstGe2AndLastLeNminus1{},
          tally([n](const Permutation& p) { return p.first() >= 2 && p.last() <= n - 1; }));
  }
  for (int n = 1; n + 3 <= 14 && n <= std::min(nmax, 11); ++n) {
    std::uint64_t hits = 0;
    oracle::visit_few_occurrences(
        n + 3, patterns::p321, 0, true, [&hits](std::span<const int>) { ++hits; }, kWide, 6);
    const BigInt want = count(Family::P321_1, n);
    shifted.expect(want == hits, [&] { return mismatch("n=" + std::to_string(n), want, hits); });
  }
  return {c, shifted};
}

Report formula_chains(int nmax) {
  using namespace avoider_class;
  Check one132{"one-132 total reassembles from consecutive and outer classes"};
  Check one{"one-321 total reassembles over the middle letter"};
  Check two{"two-321 total reassembles from shared and distinct middle letters"};
  Check sane{"counts of 0..4 copies of 321 are nonnegative and sum to at most n!"};
  for (int n = 3; n <= 15; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n - 3; ++k) sum += binomial(2 * n - 2 * k - 4, n - k - 3) * catalan(k);
    one132.expect(sum == count(Family::P132_1, n), [&] { return "n=" + std::to_string(n); });
  }
  for (int n = 3; n <= 20; ++n) {
    BigInt by_ballot = 0, by_class = 0;
    for (int b = 2; b <= n - 1; ++b) {
      by_ballot += ballot(3, b - 2) * ballot(3, n - b - 1);
      by_class += count_avoider_class(b, LastEntryLe{b - 1}) * count_avoider_class(n - b + 1, FirstEntryGe{2});
    }
    one.expect(by_ballot == count(Family::P321_1, n) && by_class == by_ballot,
               [&] { return "n=" + std::to_string(n); });
  }
  for (int n = 4; n <= 20; ++n) {
    BigInt shared = 0, distinct = 0;
    for (int b = 2; b <= n - 2; ++b)
      shared += count_avoider_class(b + 1, LastEntryLe{b - 1}) * count_avoider_class(n - b + 1, OneNotBeforePos{3});
    for (int k = 0; k <= n - 4; ++k)
      distinct += count(Family::P321_1, n - k - 1) * count_avoider_class(k + 2, FirstGe2AndLastLeNminus1{});
    two.expect(shared == ballot(8, n - 4), [&] { return mismatch("shared n=" + std::to_string(n), ballot(8, n - 4), shared); });
    const BigInt want_distinct = ballot(8, n - 4) + ballot(11, n - 6);
    two.expect(distinct == want_distinct,
               [&] { return mismatch("distinct n=" + std::to_string(n), want_distinct, distinct); });
    two.expect(2 * shared + distinct == count(Family::P321_2, n), [&] { return "total n=" + std::to_string(n); });
  }
  for (int n = 1; n <= std::max(10, nmax); ++n) {
    BigInt total = catalan(n);
    bool nonneg = true;
    for (Family f : {Family::P321_1, Family::P321_2, Family::P321_3, Family::P321_4}) {
      BigInt v = count(f, n);
      nonneg = nonneg && v >= 0;
      total += v;
    }
    sane.expect(nonneg && total <= factorial(n), [&] { return "n=" + std::to_string(n); });
  }
  return {one132, one, two, sane};
}

// --- bijections suite --------------------------------------------------------

namespace {

Report kratt_checks(int nmax) {
  Check rt{"kratt: inverse after forward is the identity, image is all Dyck paths"};
  Check stat{"kratt: first entry becomes the first ascent"};
  Check transport{"kratt: first entry / position of n transport to first ascent / last descent"};
  for (int n = 0; n <= std::min(nmax, 9); ++n) {
    const auto av = with_count(n, patterns::p321, 0);
    const auto dyck = oracle::enumerate_dyck(n);
    std::vector<std::pair<Permutation, LatticePath>> pairs;
    guarded(rt, "n=" + std::to_string(n), [&] {
      Paths image;
      for (const auto& p : av) {
        LatticePath d = kratt_forward(p);
        rt.expect(d.dyck() && kratt_inverse(d) == p, [&] { return str(p); });
        stat.expect(path_stats(d).first_ascent == (n == 0 ? 0 : p.first()), [&] { return str(p); });
        pairs.emplace_back(p, d);
        image.push_back(d);
      }
      rt.expect(same_set(image, dyck), [&] { return "image differs from Dyck paths at n=" + std::to_string(n); });
      for (const auto& d : dyck) rt.expect(kratt_forward(kratt_inverse(d)) == d, [&] { return str(d); });
    });
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= n; ++i) {
        for (bool at_least : {false, true}) {
          Paths image, target;
          for (const auto& [p, d] : pairs) {
            const bool first_ok = at_least ? p.first() >= k : p.first() == k;
            if (first_ok && p.position_of(n) <= n - i + 1) image.push_back(d);
          }
          for (const auto& d : dyck) {
            const auto s = path_stats(d);
            const bool fa_ok = at_least ? s.first_ascent >= k : s.first_ascent == k;
            if (fa_ok && s.last_descent >= i) target.push_back(d);
          }
          transport.expect(same_set(image, target), [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                   (at_least ? " (>=)" : " (=)");
          });
        }
      }
    }
  }
  return {rt, stat, transport};
}

Perms consecutive_132(int n) {
  return keep(with_count(n, patterns::p132, 1), [](const Permutation& p) {
    auto pos = occurrences(p, patterns::p132).front().positions;
    return pos[1] == pos[0] + 1 && pos[2] == pos[0] + 2;
  });
}

Perms outer_132(int n) {
  return keep(with_count(n, patterns::p132, 1), [n](const Permutation& p) {
    return occurrences(p, patterns::p132).front().positions == std::vector<int>{1, 2, n};
  });
}

Report check_132_maps(int nmax) {
  Check consec{"lemma11: consecutive 132 <-> (132-avoider of [n-2], k)"};
  Check outer{"lemma12: 132 at first, second, last <-> 132-avoider of [n-3]"};
  Check by_gap{"prop14: one 132 <-> (consecutive class, outer class) by gap"};
  for (int n = 3; n <= std::min(nmax, 8); ++n) {
    const std::string at = "n=" + std::to_string(n);
    guarded(consec, at, [&] {
      std::vector<Decomposition> image, target;
      for (const auto& p : consecutive_132(n)) {
        auto d = split_consecutive_132(p);
        consec.expect(join_consecutive_132(d.rho, d.param) == p, [&] { return str(p); });
        image.push_back(d);
      }
      for (const auto& rho : with_count(n - 2, patterns::p132, 0))
        for (int k = 1; k <= n - 2; ++k) target.push_back({rho, std::nullopt, k});
      consec.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
    });
    guarded(outer, at, [&] {
      Perms image;
      for (const auto& p : outer_132(n)) {
        auto w = strip_outer_132(p);
        outer.expect(wrap_outer_132(w) == p, [&] { return str(p); });
        image.push_back(w);
      }
      outer.expect(same_set(image, with_count(n - 3, patterns::p132, 0)), [&] { return "image != codomain at " + at; });
    });
    guarded(by_gap, at, [&] {
      std::vector<Decomposition> image, target;
      for (const auto& p : with_count(n, patterns::p132, 1)) {
        auto d = split_132_by_gap(p);
        by_gap.expect(d.sigma && join_132_by_gap(d.rho, *d.sigma) == p, [&] { return str(p); });
        image.push_back(d);
      }
      for (int k = 0; k <= n - 3; ++k)
        for (const auto& rho : consecutive_132(n - k))
          for (const auto& sigma : outer_132(k + 3)) target.push_back({rho, sigma, k});
      by_gap.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
    });
  }
  return {consec, outer, by_gap};
}

Report check_phi(int nmax) {
  Check phi{"phi: last i increasing <-> n not among the last i-1 entries, first entry kept"};
  for (int n = 2; n <= std::min(nmax, 8); ++n) {
    const auto av = with_count(n, patterns::p321, 0);
    for (int i = 1; i < n; ++i) {
      const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      guarded(phi, at, [&] {
        Perms image;
        for (const auto& p : keep(av, [i](const Permutation& p) { return last_increasing(p, i); })) {
          auto q = tail_phi(p, i);
          phi.expect(q.first() == p.first() && tail_phi_inverse(q, i) == p, [&] { return str(p) + " " + at; });
          image.push_back(q);
        }
        auto target = keep(av, [n, i](const Permutation& p) { return p.position_of(n) <= n - i + 1; });
        phi.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
      });
    }
  }
  return {phi};
}

bool shares(const Occurrence& x, const Occurrence& y, char role) { return x.letter(role) == y.letter(role); }

Report check_321_maps(int nmax) {
  Check one{"one321: one 321 <-> (rho, sigma) by middle letter"};
  Check common{"two321-b: two 321 sharing middle and last letters <-> (rho, sigma)"};
  Check mirror{"two321-b: reverse-complement swaps shared-last and shared-first instances"};
  Check cover{"two321: every instance shares a middle letter with a shared end, or has distinct middles"};
  Check distinct{"two321-k: two 321 with distinct middles <-> (one-321 rho, sigma) by gap"};
  for (int n = 3; n <= std::min(nmax, 8); ++n) {
    const std::string at = "n=" + std::to_string(n);
    guarded(one, at, [&] {
      std::vector<Decomposition> image, target;
      for (const auto& p : with_count(n, patterns::p321, 1)) {
        auto d = split_one_321(p);
        one.expect(d.sigma && join_one_321(d.rho, *d.sigma) == p, [&] { return str(p); });
        image.push_back(d);
      }
      for (int b = 2; b <= n - 1; ++b)
        for (const auto& rho : with_count(b, patterns::p321, 0))
          if (rho.last() <= b - 1)
            for (const auto& sigma : with_count(n - b + 1, patterns::p321, 0))
              if (sigma.first() >= 2) target.push_back({rho, sigma, b});
      one.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
    });
    if (n < 4) continue;
    const auto two = with_count(n, patterns::p321, 2);
    Perms shared_last, shared_first, distinct_mid;
    for (const auto& p : two) {
      auto occ = occurrences(p, patterns::p321);
      if (!shares(occ[0], occ[1], 'b')) {
        distinct_mid.push_back(p);
      } else if (shares(occ[0], occ[1], 'a')) {
        shared_last.push_back(p);
      } else if (shares(occ[0], occ[1], 'c')) {
        shared_first.push_back(p);
      }
    }
    cover.expect(shared_last.size() + shared_first.size() + distinct_mid.size() == two.size(), [&] { return at; });
    Perms mirrored;
    for (const auto& p : shared_last) mirrored.push_back(reverse(complement(p)));
    mirror.expect(same_set(mirrored, shared_first), [&] { return at; });
    guarded(common, at, [&] {
      std::vector<Decomposition> image, target;
      for (const auto& p : shared_last) {
        auto d = split_two_321_common_b(p);
        common.expect(d.sigma && join_two_321_common_b(d.rho, *d.sigma) == p, [&] { return str(p); });
        image.push_back(d);
      }
      for (int b = 2; b <= n - 2; ++b)
        for (const auto& rho : with_count(b + 1, patterns::p321, 0))
          if (rho.last() <= b - 1)
            for (const auto& sigma : with_count(n - b + 1, patterns::p321, 0))
              if (sigma.position_of(1) >= 3) target.push_back({rho, sigma, b});
      common.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
    });
    guarded(distinct, at, [&] {
      std::vector<Decomposition> image, target;
      for (const auto& p : distinct_mid) {
        auto d = split_two_321_distinct_b(p);
        distinct.expect(d.sigma && join_two_321_distinct_b(d.rho, *d.sigma) == p, [&] { return str(p); });
        image.push_back(d);
      }
      for (int k = 0; k <= n - 4; ++k)
        for (const auto& rho : with_count(n - k - 1, patterns::p321, 1))
          for (const auto& sigma : with_count(k + 2, patterns::p321, 0))
            if (sigma.first() >= 2 && sigma.last() <= k + 1) target.push_back({rho, sigma, k});
      distinct.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
    });
  }
  return {one, common, mirror, cover, distinct};
}

Report check_path_maps(int path_max) {
  Check ret{"returns: deleting the first upstep and all returns is invertible"};
  Check nonfinal{"nonfinal: moving upsteps after the first i descents to the front is invertible"};
  for (int n = 0; n <= path_max; ++n) {
    for (int k = 0; k <= 2; ++k) {
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (n + k == 0) continue;
      guarded(ret, at, [&] {
        std::vector<std::pair<LatticePath, int>> image, target;
        for (const auto& p : oracle::enumerate_quadrant(n + k, n)) {
          if (p.steps().front() != Step::Up) continue;
          auto r = delete_returns(p);
          ret.expect(r.path.ups() == n + k - 1 && r.path.downs() == n - r.returns &&
                         insert_returns(r.path, r.returns) == p,
                     [&] { return str(p); });
          image.emplace_back(r.path, r.returns);
        }
        for (int j = 0; j <= n; ++j)
          for (const auto& q : oracle::enumerate_quadrant(n + k - 1, n - j)) target.emplace_back(q, j);
        ret.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
      });
    }
    const auto dyck = oracle::enumerate_dyck(n);
    for (int i = 1; i <= 3; ++i) {
      const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      guarded(nonfinal, at, [&] {
        Paths image, target;
        for (const auto& d : dyck) {
          const auto s = path_stats(d);
          auto nd = nonfinal_descents(s);
          const bool in_domain = static_cast<int>(nd.size()) >= i &&
                                 std::all_of(nd.begin(), nd.begin() + i, [](int x) { return x == 1; }) &&
                                 n > i + s.last_descent;
          if (in_domain) {
            auto e = transfer_nonfinal(d, i);
            const auto t = path_stats(e);
            nonfinal.expect(e.dyck() && t.first_ascent == s.first_ascent + i && t.last_descent == s.last_descent &&
                                untransfer_nonfinal(e, i) == d,
                            [&] { return str(d) + " " + at; });
            image.push_back(e);
          }
          if (s.first_ascent >= i + 1 && n > i + s.last_descent) target.push_back(d);
        }
        nonfinal.expect(same_set(image, target), [&] { return "image != codomain at " + at; });
      });
    }
  }
  return {ret, nonfinal};
}

}  // namespace

Report bijection_checks(int nmax, int path_max) {
  Report r = kratt_checks(nmax);
  r = append(r, check_132_maps(nmax));
  r = append(r, check_phi(nmax));
  r = append(r, check_321_maps(nmax));
  r = append(r, check_path_maps(path_max));
  return r;
}

// --- identities suite --------------------------------------------------------

Report ballot_identities() {
  Check dual{"ballot difference and quotient forms agree"};
  Check conv{"ballot convolution"};
  Check tele{"telescoping ballot sum equals a binomial"};
  Check l3{"ballot recurrences (i)-(iii)"};
  Check bc{"binomial-Catalan convolution"};
  Check fg{"last-ascents counts: subtraction and subtraction-free forms agree"};
  Check fsym{"last-ascents count is symmetric in r, s and reduces at s = 1"};
  Check quad{"first-quadrant path counts"};

  for (int n = 0; n <= 50; ++n)
    for (int k = 1; k <= 25; ++k)
      dual.expect(ballot_by_difference(k, n) == ballot_by_quotient(k, n),
                  [&] { return "k=" + std::to_string(k) + " n=" + std::to_string(n); });
  for (int r = 0; r <= 12; ++r)
    for (int s = 0; r + s <= 12; ++s)
      for (int n = 0; n <= 20; ++n) {
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k) sum += ballot(r, k) * ballot(s, n - k);
        conv.expect(sum == ballot(r + s, n), [&] {
          return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
        });
      }
  for (int m = 0; m <= 10; ++m)
    for (int k = 1; k <= 21; ++k) {
      BigInt sum = 0;
      for (int j = 0; j <= std::min(m, k - m - 1); ++j) sum += ballot(k - 2 * j, j);
      tele.expect(sum == binomial(k - 1, m), [&] { return "m=" + std::to_string(m) + " k=" + std::to_string(k); });
    }
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= 12; ++k) {
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      if (k >= 1)
        l3.expect(ballot(k, n) - ballot(k - 1, n) == ballot(k + 1, n - 1), [&] { return "(i) " + at; });
      if (k >= 2)
        l3.expect(ballot(k, n) - ballot(k, n - 1) == ballot(k - 2, n) + ballot(k + 1, n - 1),
                  [&] { return "(ii) " + at; });
      BigInt sum = 0;
      for (int j = 0; j <= n; ++j) sum += ballot(k + j, n - j);
      l3.expect(sum == ballot(k + 1, n), [&] { return "(iii) " + at; });
    }
  for (int m = 1; m <= 15; ++m) {
    BigInt sum = 0;
    for (int k = 0; k <= m - 1; ++k) sum += binomial(2 * m - 2 * k, m - 1 - k) * catalan(k);
    bc.expect(sum == binomial(2 * m + 1, m - 1), [&] { return "m=" + std::to_string(m); });
  }
  for (int n = 0; n <= 12; ++n)
    for (int r = 1; r <= 5; ++r)
      for (int s = 1; s <= 5; ++s) {
        const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        fg.expect(count_lastascents_F(n, r, s) == count_lastascents_G(n, r, s), [&] { return at; });
        fsym.expect(count_lastascents_F(n, r, s) == count_lastascents_F(n, s, r), [&] { return at; });
      }
  for (int n = 0; n <= 12; ++n)
    for (int r = 1; r <= 5; ++r)
      fsym.expect(count_lastascents_F(n, r, 1) == ballot(r + 1, n - r),
                  [&] { return "s=1 n=" + std::to_string(n) + " r=" + std::to_string(r); });
  for (int ups = 0; ups <= 10; ++ups)
    for (int downs = 0; downs <= 10; ++downs) {
      const BigInt got = oracle::enumerate_quadrant(ups, downs).size();
      quad.expect(got == count_first_quadrant(ups, downs), [&] {
        return mismatch(std::to_string(ups) + " ups, " + std::to_string(downs) + " downs",
                        count_first_quadrant(ups, downs), got);
      });
    }
  return {dual, conv, tele, l3, bc, fg, fsym, quad};
}

Report dyck_classes(int nmax) {
  using namespace dyck_class;
  Check c{"Dyck class closed forms match enumeration"};
  for (int n = 0; n <= nmax; ++n) {
    std::vector<PathStats> stats;
    for (const auto& d : oracle::enumerate_dyck(n)) stats.push_back(path_stats(d));
    auto tally = [&](auto pred) { return BigInt(std::count_if(stats.begin(), stats.end(), pred)); };
    auto check = [&](const DyckClassConstraint& cc, const BigInt& got) {
      const BigInt want = count_dyck_class(n, cc);
      c.expect(want == got, [&] { return mismatch("n=" + std::to_string(n) + " " + describe(cc), want, got); });
    };
    auto ones_prefix = [](std::span<const int> v, int s) {
      return static_cast<int>(v.size()) >= s && std::all_of(v.begin(), v.begin() + s, [](int x) { return x == 1; });
    };
    auto ones_suffix = [](std::span<const int> v, int s) {
      return static_cast<int>(v.size()) >= s && std::all_of(v.end() - s, v.end(), [](int x) { return x == 1; });
    };
    for (int k = 0; k <= 5; ++k) {
      check(FirstAscentEq{k}, tally([k](const PathStats& s) { return s.first_ascent == k; }));
      check(FirstAscentGe{k}, tally([k](const PathStats& s) { return s.first_ascent >= k; }));
    }
    for (int r = 1; r <= 5; ++r)
      for (int s = 1; s <= 5; ++s) {
        check(FirstAscentLastDescent{r, s, true}, tally([&](const PathStats& p) {
                return p.first_ascent >= r && p.last_descent >= s && p.interior_returns >= 1;
              }));
        check(FirstAscentLastDescent{r, s, false},
              tally([&](const PathStats& p) { return p.first_ascent >= r && p.last_descent >= s; }));
        check(FirstAscentNonfinalDescentsOne{r, s}, tally([&](const PathStats& p) {
                return p.first_ascent >= r && ones_prefix(nonfinal_descents(p), s);
              }));
        const BigInt last_ones = tally([&](const PathStats& p) {
          return p.first_ascent >= r && ones_suffix(noninitial_ascents(p), s - 1);
        });
        check(FirstAscentLastAscentsOne{r, s}, last_ones);
        c.expect(count_lastascents_F(n, r, s) == last_ones, [&] {
          return mismatch("n=" + std::to_string(n) + " F(" + std::to_string(r) + "," + std::to_string(s) + ")",
                          last_ones, count_lastascents_F(n, r, s));
        });
      }
  }
  return {c};
}

Report series_checks(int height_nmax, int corridor_nmax) {
  Check height{"bounded-height counts match enumeration"};
  Check corridor{"corridor counts match enumeration"};
  Check tri{"Catalan triangle times its inverse is the identity"};
  Check rows{"inverse triangle rows are Chebyshev q coefficients"};
  Check colsum{"row sums from a column give the next column"};
  Check cheb{"q_{2h-1} = p_h q_{h-1}; deg q_h = floor(h/2)"};
  Check exact{"series quotients are exact"};

  for (int n = 0; n <= height_nmax; ++n) {
    const auto dyck = oracle::enumerate_dyck(n);
    for (int h = 0; h <= 6; ++h) {
      const BigInt got = std::count_if(dyck.begin(), dyck.end(), [h](const LatticePath& d) { return path_stats(d).height <= h; });
      height.expect(got == bounded_height_count(n, h), [&] {
        return mismatch("n=" + std::to_string(n) + " h=" + std::to_string(h), bounded_height_count(n, h), got);
      });
    }
  }
  for (int n = 0; n <= corridor_nmax; ++n)
    for (int h = 1; h <= 4; ++h)
      for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
          const BigInt got = oracle::enumerate_corridor(n, h, r, s).size();
          corridor.expect(got == corridor_count(n, h, r, s), [&] {
            return mismatch("n=" + std::to_string(n) + " h=" + std::to_string(h) + " r=" + std::to_string(r) +
                                " s=" + std::to_string(s),
                            corridor_count(n, h, r, s), got);
          });
        }
  const int nmax = 10;
  const auto t = catalan_triangle(nmax);
  const auto ti = catalan_triangle_inverse(nmax);
  tri.expect(multiply(t, ti) == identity_matrix(nmax + 1) && multiply(ti, t) == identity_matrix(nmax + 1),
             [] { return "nmax=10"; });
  for (int n = 0; n <= nmax; ++n) {
    const auto q = chebyshev_q(n);
    for (int j = 0; j <= n; ++j)
      rows.expect(ti[n][n - j] == q.coeff(j), [&] { return "n=" + std::to_string(n) + " j=" + std::to_string(j); });
  }
  for (int n = 0; n + 1 <= nmax; ++n)
    for (int k = 0; n + k + 1 <= nmax; ++k) {
      BigInt sum = 0;
      for (int j = 0; j <= n; ++j) sum += t[n + k][k + j];
      colsum.expect(sum == t[n + k + 1][k + 1], [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  for (int h = 1; h <= 8; ++h)
    cheb.expect(chebyshev_q(2 * h - 1) == chebyshev_p(h) * chebyshev_q(h - 1), [&] { return "h=" + std::to_string(h); });
  for (int h = 0; h <= 16; ++h)
    cheb.expect(chebyshev_q(h).degree() == h / 2, [&] { return "deg h=" + std::to_string(h); });
  for (int h = 0; h <= 8; ++h) {
    const int order = 20;
    const auto num = chebyshev_q(h), den = chebyshev_q(h + 1);
    const auto quotient = divide(num, den, order);
    const auto back = IntPowerSeries(den, order) * quotient;
    bool ok = true;
    for (int i = 0; i <= order; ++i) ok = ok && back.coeff(i) == num.coeff(i);
    exact.expect(ok, [&] { return "h=" + std::to_string(h); });
  }
  return {height, corridor, tri, rows, colsum, cheb, exact};
}

Report highpoint_uniformity(int total_max) {
  Check c{"marked high point position is uniform"};
  for (int k = 1; k <= total_max; ++k)
    for (int n = 0; n + k <= total_max; ++n) {
      const auto hist = oracle::marked_highpoint_histogram(n, k);
      const BigInt objects = k * binomial(2 * n + k, n);
      const BigInt bin = objects / (2 * n + k);
      bool ok = static_cast<int>(hist.size()) == 2 * n + k;
      for (const auto& [x, v] : hist) ok = ok && v == bin;
      c.expect(ok && bin * (2 * n + k) == objects,
               [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  return {c};
}

Report run(Suite s, int nmax) {
  if (nmax < 1) throw InvalidInput("nmax must be >= 1");
  Report r;
  if (s == Suite::Formulas || s == Suite::All) {
    r = append(r, core_invariants(nmax));
    r = append(r, family_counts(1, nmax));
    r = append(r, avoider_classes(nmax));
    r = append(r, formula_chains(nmax));
  }
  if (s == Suite::Bijections || s == Suite::All) r = append(r, bijection_checks(nmax));
  if (s == Suite::Identities || s == Suite::All) {
    r = append(r, ballot_identities());
    r = append(r, dyck_classes(10));
    r = append(r, series_checks());
    r = append(r, highpoint_uniformity());
  }
  return r;
}

}  // namespace permpath::verify
