#include <doctest.h>

#include "permpath/ballot.hpp"
#include "permpath/errors.hpp"
#include "permpath/lattice_path.hpp"
#include "permpath/oracle.hpp"

using namespace permpath;

TEST_SUITE("lattice-paths") {

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, -1) == 0);
  CHECK(binomial(-1, -1, BinomialConvention::ExtendedMinusOne) == 1);
}

TEST_CASE("ballot numbers") {
  CHECK(ballot(3, 2) == 9);
  CHECK(ballot(1, 4) == 14);
  for (int k = 1; k <= 6; ++k) CHECK(ballot(k, 0) == 1);
  CHECK(ballot(6, 1) == 6);
  CHECK(ballot(6, 2) == 27);
  CHECK(ballot(3, -1) == 0);
  for (int k = 1; k <= 12; ++k)
    for (int n = 0; n <= 12; ++n) {
      CHECK(ballot_by_difference(k, n) == ballot(k, n));
      CHECK(ballot_by_quotient(k, n) == ballot(k, n));
    }
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(7) == 429);
  CHECK(catalan(-1) == 0);
}

TEST_CASE("first-quadrant counts") {
  CHECK(count_first_quadrant(6, 4) == 90);
  CHECK(count_first_quadrant(4, 4) == 14);
  CHECK(count_first_quadrant(3, 5) == 0);
  CHECK(oracle::enumerate_quadrant(6, 4).size() == 90);
}

TEST_CASE("path statistics") {
  const auto fig = LatticePath::from_runs(std::vector<int>{2, 1, 3}, std::vector<int>{1, 2, 1});
  CHECK(fig.to_string() == "UUDUDDUUUD");
  auto st = path_stats(fig);
  CHECK(st.height == 3);
  CHECK(st.ascent_seq == std::vector<int>{2, 1, 3});
  CHECK(st.descent_seq == std::vector<int>{1, 2, 1});

  const auto dyck = LatticePath::from_runs(std::vector<int>{3, 1, 1}, std::vector<int>{2, 1, 2});
  CHECK(dyck.dyck());
  st = path_stats(dyck);
  CHECK(st.ascent_seq == std::vector<int>{3, 1, 1});
  CHECK(st.descent_seq == std::vector<int>{2, 1, 2});

  st = path_stats(LatticePath::parse("UD"));
  CHECK(st.height == 1);
  CHECK(st.returns == 1);
  CHECK(st.interior_returns == 0);
  CHECK(st.ascent_seq == std::vector<int>{1});

  CHECK(LatticePath::parse("UUDD") == LatticePath::parse("U U D D"));
  CHECK_THROWS_AS(LatticePath::parse("UXD"), InvalidInput);
}

TEST_CASE("Dyck classes") {
  using namespace dyck_class;
  CHECK(count_dyck_class(4, FirstAscentEq{2}) == 5);
  CHECK(count_dyck_class(4, FirstAscentGe{1}) == 14);
  CHECK(count_dyck_class(3, FirstAscentLastDescent{1, 1, true}) == 3);
  CHECK(count_dyck_class(3, FirstAscentLastDescent{1, 1, false}) == 5);

  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(count_dyck_class(n, FirstAscentEq{k}) == oracle::count_dyck(n, oracle::PathFilter{}.first_ascent_eq(k)));
      CHECK(count_dyck_class(n, FirstAscentGe{k}) == oracle::count_dyck(n, oracle::PathFilter{}.first_ascent_ge(k)));
    }
}

TEST_CASE("last-ascents counts") {
  // Brute force gives 14 here; the class is every Dyck 4-path.
  CHECK(count_lastascents_G(4, 1, 1) == 14);
  CHECK(count_lastascents_F(4, 1, 1) == 14);
  CHECK(count_lastascents_F(4, 2, 2) == count_lastascents_G(4, 2, 2));
  CHECK(count_lastascents_G(4, 2, 2) ==
        oracle::count_dyck(4, oracle::PathFilter{}.first_ascent_ge(2).noninitial_ascents_last_one(1)));
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= 4; ++r) {
      CHECK(count_lastascents_F(n, r, 1) == ballot(r + 1, n - r));
      for (int s = 1; s <= 4; ++s) CHECK(count_lastascents_F(n, r, s) == count_lastascents_F(n, s, r));
    }
}

}
