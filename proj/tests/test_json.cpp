#include <doctest.h>

#include "permpath/errors.hpp"
#include "permpath/json_io.hpp"

using permpath::BigInt;
using permpath::Decomposition;
using permpath::IntPolynomial;
using permpath::InvalidInput;
using permpath::LatticePath;
using permpath::Permutation;
using nlohmann::json;
namespace pj = permpath::json;

TEST_SUITE("json-io") {

TEST_CASE("big integers") {
  CHECK(json::parse(pj::from_bigint(BigInt(42)).dump()) == 42);
  const BigInt big("123456789012345678901234567890");
  const auto j = pj::from_bigint(big);
  CHECK(j.is_string());
  CHECK(pj::to_bigint(j) == big);
  CHECK(pj::to_bigint(json(-7)) == -7);
  CHECK_THROWS_AS(pj::to_bigint(json("12a")), InvalidInput);
}

TEST_CASE("round trips") {
  const Permutation p{2, 1, 4};
  CHECK(pj::encode(p).dump() == "[2,1,4]");
  CHECK(pj::decode_permutation(json::parse("[2,1,4]")) == p);

  const auto d = LatticePath::parse("UUDD");
  CHECK(pj::decode_path(pj::encode(d)) == d);

  const IntPolynomial q{1, -3, 1};
  CHECK(pj::encode(q).dump() == R"({"coeffs":[1,-3,1]})");
  CHECK(pj::decode_polynomial(pj::encode(q)) == q);

  const Decomposition dec{Permutation{2, 1}, std::nullopt, 3};
  CHECK(pj::encode(dec).dump() == R"({"param":3,"rho":[2,1],"sigma":null})");
  CHECK(pj::decode_decomposition(pj::encode(dec)) == dec);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(pj::decode_permutation(json::parse(R"(["a"])")), InvalidInput);
  CHECK_THROWS_AS(pj::decode_path(json::parse(R"(["X"])")), InvalidInput);
  CHECK_THROWS_AS(pj::decode_decomposition(json::parse("{}")), InvalidInput);
}

}
