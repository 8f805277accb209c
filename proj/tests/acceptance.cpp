// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>

#include "permpath/ballot.hpp"
#include "permpath/formulas.hpp"
#include "permpath/oracle.hpp"
#include "permpath/verify.hpp"

using namespace permpath;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failed = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << title << " ["
            << seconds_since(t0) << " s]";
  if (!o.ok) std::cout << "  " << o.note.str();
  std::cout << std::endl;
  failed += !o.ok;
}

// Scan once per n and keep the counts for the family criteria.
std::map<int, std::map<Family, BigInt>> tallies;

const BigInt& oracle_value(Family f, int n) {
  auto it = tallies.find(n);
  if (it == tallies.end()) it = tallies.emplace(n, oracle::tally_families(n)).first;
  return it->second.at(f);
}

void family_range(Outcome& o, Family f, int nmin, int nmax) {
  for (int n = nmin; n <= nmax; ++n) {
    const auto formula = count(f, n);
    const auto& seen = oracle_value(f, n);
    o.require(formula == seen, family_name(f) + " n=" + std::to_string(n) + ": formula " + formula.str() +
                                   ", oracle " + seen.str());
  }
}

void report_passes(Outcome& o, const verify::Report& r) {
  for (const auto& c : r)
    o.require(c.passed(), c.name + " (" + std::to_string(c.failures) + " of " + std::to_string(c.cases) + ")");
}

}  // namespace

int main() {
  criterion(1, "one 132: binom(2n-3, n-3) against the oracle, 3 <= n <= 10", [](Outcome& o) {
    for (int n = 3; n <= 9; ++n) {
      const auto expect = binomial(2 * n - 3, n - 3);
      o.require(count(Family::P132_1, n) == expect, "closed form n=" + std::to_string(n));
      o.require(oracle::oracle_count(Family::P132_1, n) == expect, "oracle n=" + std::to_string(n));
    }
    const auto t0 = Clock::now();
    const auto at10 = oracle::oracle_count(Family::P132_1, 10);
    const double dt = seconds_since(t0);
    o.require(at10 == 19448 && count(Family::P132_1, 10) == 19448, "n=10 gives " + at10.str());
    o.require(dt < 60, "n=10 oracle took " + std::to_string(dt) + " s");
  });

  criterion(2, "one 321: ballot(6, n-3) against the oracle, 3 <= n <= 10", [](Outcome& o) {
    for (int n = 3; n <= 10; ++n)
      o.require(count(Family::P321_1, n) == ballot(6, n - 3), "closed form n=" + std::to_string(n));
    family_range(o, Family::P321_1, 3, 10);
    o.require(count(Family::P321_1, 4) == 6, "n=4 is not 6");
  });

  criterion(3, "two 321: closed form against the oracle, 4 <= n <= 10", [](Outcome& o) {
    family_range(o, Family::P321_2, 4, 10);
    o.require(count(Family::P321_2, 6) == 133, "n=6 is not 133");
  });

  criterion(4, "three and four 321: closed forms against the oracle, n <= 10", [](Outcome& o) {
    family_range(o, Family::P321_3, 1, 10);
    family_range(o, Family::P321_4, 1, 10);
    o.require(count(Family::P321_3, 4) == 0, "three 321 at n=4 is not 0");
    o.require(count(Family::P321_4, 4) == 1, "four 321 at n=4 is not 1");
  });

  criterion(5, "one and two 321 with the last two entries increasing, n <= 10", [](Outcome& o) {
    for (int n = 1; n <= 10; ++n)
      for (auto [f, k] : {std::pair{Family::P321_1_Last2Up, 1}, std::pair{Family::P321_2_Last2Up, 2}}) {
        const auto filter =
            oracle::PermFilter{}.pattern_count(patterns::p321, static_cast<std::size_t>(k)).last_increasing(2);
        const BigInt seen = oracle::count_perms(n, filter);
        o.require(count(f, n) == seen, family_name(f) + " n=" + std::to_string(n));
      }
  });

  criterion(6, "123-avoiders: 2^(n-1) avoid 132, and one to four 132s, n <= 10", [](Outcome& o) {
    for (int n = 1; n <= 10; ++n)
      o.require(count(Family::SimionSchmidt, n) == BigInt(1) << (n - 1), "2^(n-1) at n=" + std::to_string(n));
    for (Family f : {Family::SimionSchmidt, Family::P123Avoid132_1, Family::P123Avoid132_2, Family::P123Avoid132_3,
                     Family::P123Avoid132_4})
      family_range(o, f, 1, 10);
  });

  criterion(7, "bijection round trips and images", [](Outcome& o) { report_passes(o, verify::bijection_checks(9, 10)); });

  criterion(8, "ballot and binomial identities", [](Outcome& o) { report_passes(o, verify::ballot_identities()); });

  criterion(9, "height-bounded and corridor counts, Catalan triangle, q and p polynomials",
            [](Outcome& o) { report_passes(o, verify::series_checks(12, 8)); });

  criterion(10, "marked high points are uniform for n + k <= 10",
            [](Outcome& o) { report_passes(o, verify::highpoint_uniformity(10)); });

  criterion(11, "full suite: nmax 9 under 300 s, nmax 10 under 1800 s", [](Outcome& o) {
    for (auto [nmax, budget] : {std::pair{9, 300.0}, std::pair{10, 1800.0}}) {
      const auto t0 = Clock::now();
      const auto report = verify::run(verify::Suite::All, nmax);
      const double dt = seconds_since(t0);
      o.require(verify::all_passed(report), "suite all --nmax " + std::to_string(nmax) + " has failures");
      o.require(dt < budget, "suite all --nmax " + std::to_string(nmax) + " took " + std::to_string(dt) + " s");
    }
  });

  std::cout << (11 - failed) << " of 11 criteria passed" << std::endl;
  return failed;
}
