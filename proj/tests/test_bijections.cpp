#include <doctest.h>

#include <set>

#include "permpath/bijections.hpp"
#include "permpath/errors.hpp"
#include "permpath/oracle.hpp"

using namespace permpath;

namespace {

std::vector<Permutation> with_count(int n, const Pattern& t, std::size_t k) {
  return oracle::enumerate_perms(n, oracle::PermFilter{}.pattern_count(t, k));
}

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("kratt on the worked example") {
  const Permutation p{2, 1, 4, 7, 3, 5, 6};
  const auto d = kratt_forward(p);
  const auto st = path_stats(d);
  CHECK(st.ascent_seq == std::vector<int>{2, 2, 3});
  CHECK(st.descent_seq == std::vector<int>{2, 1, 4});
  CHECK(d.to_string() == "UUDDUUDUUUDDDD");
  CHECK(kratt_inverse(d) == p);
}

TEST_CASE("kratt small cases") {
  CHECK(kratt_forward(Permutation::identity(4)).to_string() == "UDUDUDUD");
  CHECK(kratt_inverse(LatticePath::parse("UDUDUD")) == Permutation::identity(3));
  CHECK(kratt_forward(Permutation{2, 1}).to_string() == "UUDD");
  CHECK_THROWS_AS(kratt_forward(Permutation{3, 2, 1}), DomainError);
  CHECK_THROWS_AS(kratt_inverse(LatticePath::parse("UDDU")), DomainError);

  std::set<Permutation> seen;
  for (const auto& d : oracle::enumerate_dyck(4)) {
    const auto p = kratt_inverse(d);
    CHECK(avoids(p, patterns::p321));
    CHECK(kratt_forward(p) == d);
    seen.insert(p);
  }
  CHECK(seen.size() == 14);
}

TEST_CASE("kratt sends the first entry to the first ascent") {
  for (const auto& p : with_count(7, patterns::p321, 0))
    CHECK(path_stats(kratt_forward(p)).first_ascent == p.first());
}

TEST_CASE("returns deletion") {
  const auto r = delete_returns(LatticePath::parse("UUDUDD"));
  CHECK(r.returns == 1);
  CHECK(r.path.to_string() == "UDUD");
  // No returns: only the initial upstep goes.
  const auto q = delete_returns(LatticePath::parse("UUDUD"));
  CHECK(q.returns == 0);
  CHECK(q.path.to_string() == "UDUD");
  CHECK(insert_returns(LatticePath::parse("UDUD"), 1).to_string() == "UUDUDD");

  for (int m = 0; m <= 4; ++m)
    for (const auto& p : oracle::enumerate_quadrant(m + 2, m)) {
      if (p.steps().front() != Step::Up) continue;
      const auto d = delete_returns(p);
      CHECK(insert_returns(d.path, d.returns) == p);
    }
}

TEST_CASE("nonfinal transfer") {
  const auto d = LatticePath::parse("UDUDUUDD");
  CHECK(transfer_nonfinal(d, 0) == d);
  CHECK(transfer_nonfinal(d, 1).to_string() == "UUDDUUDD");

  // Both classes at n=6, first ascent a=2, last descent 1, i=2.
  const int n = 6, a = 2, ld = 1, i = 2;
  std::set<LatticePath> from, to, image;
  for (const auto& p : oracle::enumerate_dyck(n)) {
    const auto st = path_stats(p);
    if (st.last_descent != ld) continue;
    const auto nf = nonfinal_descents(st);
    if (st.first_ascent == a && nf.size() >= static_cast<std::size_t>(i) && nf[0] == 1 && nf[1] == 1)
      from.insert(p);
    if (st.first_ascent == a + i) to.insert(p);
  }
  for (const auto& p : from) {
    const auto q = transfer_nonfinal(p, i);
    CHECK(untransfer_nonfinal(q, i) == p);
    image.insert(q);
  }
  CHECK(from.size() == to.size());
  CHECK(image == to);
}

TEST_CASE("nonfinal transfer needs n > i + last descent") {
  CHECK_THROWS_AS(transfer_nonfinal(LatticePath::parse("UDUD"), 1), DomainError);
}

TEST_CASE("phi") {
  CHECK(tail_phi(Permutation{2, 1, 3, 4, 5}, 2) == Permutation{2, 1, 3, 5, 4});
  CHECK(tail_phi(Permutation{1, 5, 2, 3, 4}, 2) == Permutation{1, 5, 2, 3, 4});
  CHECK_THROWS_AS(tail_phi(Permutation{2, 1, 3, 5, 4}, 2), DomainError);

  // Class sizes agree for n=6, every first entry, i <= 3.
  const auto avoiders = with_count(6, patterns::p321, 0);
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 6; ++k) {
      std::size_t left = 0, right = 0;
      for (const auto& p : avoiders) {
        if (p.first() != k) continue;
        bool inc = true;
        for (int j = 6 - i + 1; j < 6; ++j) inc = inc && p.at(j) < p.at(j + 1);
        left += inc;
        right += p.position_of(6) <= 6 - i + 1;
        if (inc) CHECK(tail_phi_inverse(tail_phi(p, i), i) == p);
      }
      CHECK(left == right);
    }
}

TEST_CASE("consecutive 132") {
  CHECK(split_consecutive_132(Permutation{1, 3, 2}) == Decomposition{Permutation{1}, std::nullopt, 1});
  const auto d = split_consecutive_132(Permutation{2, 4, 3, 1});
  CHECK(d.rho == Permutation{2, 1});
  CHECK(d.param == 1);
  CHECK(join_consecutive_132(d.rho, d.param) == Permutation{2, 4, 3, 1});
  CHECK_THROWS_AS(split_consecutive_132(Permutation{2, 4, 1, 3}), DomainError);
}

TEST_CASE("outer 132") {
  CHECK(strip_outer_132(Permutation{1, 3, 2}).empty());
  CHECK(strip_outer_132(Permutation{2, 4, 1, 3}) == Permutation{1});
  CHECK(wrap_outer_132(Permutation{1}) == Permutation{2, 4, 1, 3});
}

TEST_CASE("132 split by gap") {
  const auto d = split_132_by_gap(Permutation{2, 4, 1, 3});
  CHECK(d.param == 1);
  CHECK(d.rho == Permutation{1, 3, 2});
  CHECK(d.sigma == Permutation{2, 4, 1, 3});
  for (const auto& p : with_count(6, patterns::p132, 1)) {
    const auto s = split_132_by_gap(p);
    if (s.param == 0) CHECK(s.sigma == Permutation{1, 3, 2});
    CHECK(join_132_by_gap(s.rho, *s.sigma) == p);
  }
}

TEST_CASE("one 321") {
  const auto d = split_one_321(Permutation{3, 2, 1});
  CHECK(d.rho == Permutation{2, 1});
  CHECK(d.sigma == Permutation{2, 1});
  CHECK(d.param == 2);
  CHECK(join_one_321(d.rho, *d.sigma) == Permutation{3, 2, 1});
  CHECK_THROWS_AS(split_one_321(Permutation{4, 3, 2, 1}), DomainError);
}

TEST_CASE("two 321 with a common middle letter") {
  const auto d = split_two_321_common_b(Permutation{3, 4, 2, 1, 5});
  CHECK(d.param == 2);
  CHECK(d.rho == Permutation{2, 3, 1});
  CHECK(d.sigma == Permutation{2, 3, 1, 4});
  CHECK(join_two_321_common_b(d.rho, *d.sigma) == Permutation{3, 4, 2, 1, 5});
}

TEST_CASE("two 321 with distinct middle letters") {
  const auto d = split_two_321_distinct_b(Permutation{4, 2, 3, 1});
  CHECK(d.param == 0);
  CHECK(d.rho == Permutation{3, 2, 1});
  CHECK(d.sigma == Permutation{2, 1});
  CHECK(join_two_321_distinct_b(d.rho, *d.sigma) == Permutation{4, 2, 3, 1});
}

}
