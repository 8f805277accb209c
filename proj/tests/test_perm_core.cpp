#include <doctest.h>

#include <algorithm>
#include <random>

#include "permpath/errors.hpp"
#include "permpath/permutation.hpp"

using namespace permpath;

TEST_SUITE("perm-core") {

TEST_CASE("reduce") {
  CHECK(reduce(std::vector<int>{9, 8, 2, 4, 6}) == Permutation{5, 4, 1, 2, 3});
  CHECK(reduce(Permutation{1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(reduce(std::vector<int>{10, 20}) == Permutation{1, 2});
  CHECK_THROWS_AS(reduce(std::vector<int>{3, 3}), InvalidInput);
}

TEST_CASE("duplicate letters are rejected") {
  CHECK_THROWS_AS(Permutation({1, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("1 0 2"), InvalidInput);
}

TEST_CASE("reverse and complement") {
  CHECK(reverse(Permutation{1, 3, 2}) == Permutation{2, 3, 1});
  CHECK(complement(Permutation{1, 3, 2}) == Permutation{3, 1, 2});
  CHECK_THROWS_AS(complement(Permutation{1, 5}), InvalidInput);

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> w(1 + t % 9);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation p(w);
    CHECK(reverse(reverse(p)) == p);
    CHECK(complement(complement(p)) == p);
  }
}

TEST_CASE("occurrences") {
  const Permutation p{4, 3, 1, 2};
  const auto occ = occurrences(p, patterns::p321);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].letters == std::vector<int>{4, 3, 1});
  CHECK(occ[1].letters == std::vector<int>{4, 3, 2});
  CHECK(occ[0].letter('c') == 4);
  CHECK(occ[0].position('a') == 3);
  CHECK(occurrences(p, patterns::p132).empty());
  CHECK(occurrences(Permutation::identity(7), patterns::p321).empty());
  CHECK(count_occurrences(p, patterns::p321) == 2);
  CHECK(count_occurrences(Permutation{4, 3, 2, 1}, patterns::p321) == 4);
}

TEST_CASE("exactly one 21 on [3]") {
  std::vector<int> w{1, 2, 3};
  std::vector<Permutation> hits;
  do {
    if (count_occurrences(w, patterns::p21) == 1) hits.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  CHECK(hits == std::vector<Permutation>{{1, 3, 2}, {2, 1, 3}});
}

TEST_CASE("count limit stops early but stays exact below it") {
  const auto dec = Permutation{6, 5, 4, 3, 2, 1};
  CHECK(count_occurrences(dec.word(), patterns::p321) == 20);
  CHECK(count_occurrences(dec.word(), patterns::p321, 3) == 4);
  CHECK(count_occurrences(Permutation{1, 3, 2}.word(), patterns::p132, 3) == 1);
}

TEST_CASE("record highs") {
  auto r = record_highs(Permutation{2, 1, 4, 7, 3, 5, 6});
  CHECK(r.positions == std::vector<int>{1, 3, 4});
  CHECK(r.values == std::vector<int>{2, 4, 7});
  r = record_highs(Permutation{1, 2, 3});
  CHECK(r.positions == std::vector<int>{1, 2, 3});
  r = record_highs(Permutation{3, 2, 1});
  CHECK(r.positions == std::vector<int>{1});
  CHECK(r.values == std::vector<int>{3});
}

TEST_CASE("text format") {
  CHECK(parse_permutation("2 1 4 7 3 5 6") == Permutation{2, 1, 4, 7, 3, 5, 6});
  CHECK(parse_permutation("2,1,4") == Permutation{2, 1, 4});
  CHECK(parse_permutation("").empty());
  CHECK(to_string(Permutation{2, 1, 4}) == "2 1 4");
  CHECK_THROWS_AS(parse_permutation("2 x"), InvalidInput);
  CHECK(Pattern::parse("132") == patterns::p132);
  CHECK(Pattern::parse("2 1") == patterns::p21);
}

}
