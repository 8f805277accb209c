#include <doctest.h>

#include "permpath/ballot.hpp"
#include "permpath/errors.hpp"
#include "permpath/formulas.hpp"
#include "permpath/oracle.hpp"

using namespace permpath;

TEST_SUITE("formulas") {

TEST_CASE("spot values") {
  CHECK(count(Family::P132_1, 3) == 1);
  CHECK(count(Family::P321_1, 3) == 1);
  CHECK(count(Family::P321_1, 4) == 6);
  CHECK(count(Family::P321_2, 6) == 133);
  CHECK(count(Family::P321_3, 4) == 0);
  CHECK(count(Family::P321_4, 4) == 1);
  CHECK(count(Family::SimionSchmidt, 3) == 4);
  CHECK(count(Family::P123Avoid132_1, 4) == 4);
  CHECK(count(Family::P132_1, 10) == 19448);
  CHECK(count(Family::P132_1, 20) == binomial(37, 17));
  CHECK_THROWS_AS(count(Family::P132_1, 0), InvalidInput);
}

TEST_CASE("closed forms agree with a scan up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto tally = oracle::tally_families(n);
    for (Family f : all_families()) {
      INFO(family_name(f) << " n=" << n);
      CHECK(count(f, n) == tally.at(f));
    }
  }
}

TEST_CASE("family names round-trip") {
  CHECK(all_families().size() == 12);
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(Family::P321_1_Last2Up) == "p321-1-last2up");
  CHECK(family_name(Family::P123Avoid132_4) == "p123avoid-132-4");
  CHECK_FALSE(parse_family("p321-5"));
}

TEST_CASE("avoider classes") {
  using namespace avoider_class;
  CHECK(count_avoider_class(3, FirstEntryEq{2}) == 2);
  CHECK(count_avoider_class(4, FirstGe2AndLastLeNminus1{}) == 6);
  for (int n = 1; n <= 10; ++n) CHECK(count_avoider_class(n, FirstEntryGe{1}) == catalan(n));
  CHECK_THROWS_AS(count_avoider_class(4, FirstEntryEq{5}), Unsupported);

  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m) {
      const auto avoid = oracle::PermFilter{}.avoiding(patterns::p321);
      CHECK(count_avoider_class(n, FirstEntryEq{m}) == oracle::count_perms(n, oracle::PermFilter(avoid).first_eq(m)));
      CHECK(count_avoider_class(n, FirstEntryGe{m}) == oracle::count_perms(n, oracle::PermFilter(avoid).first_ge(m)));
      CHECK(count_avoider_class(n, OneNotBeforePos{m}) ==
            oracle::count_perms(n, oracle::PermFilter(avoid).pos_of_one_ge(m)));
      CHECK(count_avoider_class(n, MaxNotAfterPosFromEnd{m}) ==
            oracle::count_perms(n, oracle::PermFilter(avoid).pos_of_max_le(n + 1 - m)));
      CHECK(count_avoider_class(n, LastEntryLe{m}) == oracle::count_perms(n, oracle::PermFilter(avoid).last_le(m)));
      CHECK(count_avoider_class(n, LastIIncreasing{m}) ==
            oracle::count_perms(n, oracle::PermFilter(avoid).last_increasing(m)));
    }
}

}
