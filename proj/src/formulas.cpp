#include "permpath/formulas.hpp"

#include <array>

#include "permpath/ballot.hpp"
#include "permpath/errors.hpp"

namespace permpath {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  const char* description;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::P132_1, "p132-1", "exactly one 132"},
    {Family::P321_1, "p321-1", "exactly one 321"},
    {Family::P321_2, "p321-2", "exactly two 321"},
    {Family::P321_3, "p321-3", "exactly three 321"},
    {Family::P321_4, "p321-4", "exactly four 321"},
    {Family::P321_1_Last2Up, "p321-1-last2up", "exactly one 321, last two entries increasing"},
    {Family::P321_2_Last2Up, "p321-2-last2up", "exactly two 321, last two entries increasing"},
    {Family::SimionSchmidt, "simion-schmidt", "avoiding 123 and 132"},
    {Family::P123Avoid132_1, "p123avoid-132-1", "avoiding 123, exactly one 132"},
    {Family::P123Avoid132_2, "p123avoid-132-2", "avoiding 123, exactly two 132"},
    {Family::P123Avoid132_3, "p123avoid-132-3", "avoiding 123, exactly three 132"},
    {Family::P123Avoid132_4, "p123avoid-132-4", "avoiding 123, exactly four 132"},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw Unsupported("unknown family");
}

BigInt C(long k, long n) { return ballot(k, n); }
BigInt binom(long a, long b) { return binomial(a, b); }

// coeff * 2^e, where a zero coefficient wins over a negative exponent.
BigInt times_pow2(const BigInt& coeff, long e) {
  if (coeff == 0) return 0;
  if (e < 0) throw Error("nonzero term with negative power of 2");
  return coeff << static_cast<unsigned>(e);
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> out = [] {
    std::vector<Family> v;
    for (const auto& i : kFamilies) v.push_back(i.family);
    return v;
  }();
  return out;
}

std::string family_name(Family f) { return info(f).name; }

std::string family_description(Family f) { return info(f).description; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : kFamilies)
    if (name == i.name) return i.family;
  return std::nullopt;
}

BigInt count(Family f, int n) {
  if (n < 1) throw InvalidInput("family counts need n >= 1");
  const long m = n;
  switch (f) {
    case Family::P132_1:
      return binom(2 * m - 3, m - 3);
    case Family::P321_1:
      return C(6, m - 3);
    case Family::P321_2:
      return 3 * C(8, m - 4) + C(11, m - 6);
    case Family::P321_3:
      return 7 * C(10, m - 5) + 6 * C(13, m - 7) + C(16, m - 9);
    case Family::P321_4:
      return 13 * C(12, m - 6) + 19 * C(15, m - 8) + 9 * C(18, m - 10) + C(21, m - 12) +
             4 * C(14, m - 7) + 5 * C(10, m - 5) + C(6, m - 4) - 2 * C(8, m - 5);
    case Family::P321_1_Last2Up:
      return 2 * C(6, m - 4) + C(9, m - 6);
    case Family::P321_2_Last2Up:
      return 4 * C(8, m - 5) + 3 * C(11, m - 7) + C(14, m - 9) + 2 * C(10, m - 6) +
             2 * C(6, m - 4) - C(4, m - 4);
    case Family::SimionSchmidt:
      return times_pow2(1, m - 1);
    case Family::P123Avoid132_1:
      return times_pow2(binom(m - 2, 1), m - 3);
    case Family::P123Avoid132_2:
      return times_pow2(binom(m - 3, 1), m - 4) + times_pow2(binom(m - 3, 2), m - 5);
    case Family::P123Avoid132_3:
      return times_pow2(binom(m - 3, 1), m - 4) + times_pow2(binom(m - 3, 2), m - 5) +
             times_pow2(binom(m - 4, 3), m - 7);
    case Family::P123Avoid132_4:
      return 2 * times_pow2(binom(m - 4, 1), m - 5) + 3 * times_pow2(binom(m - 4, 2), m - 6) +
             times_pow2(binom(m - 4, 3), m - 7) + times_pow2(binom(m - 5, 3), m - 8) +
             times_pow2(binom(m - 5, 4), m - 9);
  }
  throw Unsupported("unknown family");
}

std::string describe(const ClassConstraint& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        using namespace avoider_class;
        if constexpr (std::is_same_v<T, FirstEntryEq>)
          return "first entry = " + std::to_string(v.k);
        else if constexpr (std::is_same_v<T, FirstEntryGe>)
          return "first entry >= " + std::to_string(v.k);
        else if constexpr (std::is_same_v<T, OneNotBeforePos>)
          return "1 at position >= " + std::to_string(v.m);
        else if constexpr (std::is_same_v<T, MaxNotAfterPosFromEnd>)
          return "n at position <= n+1-" + std::to_string(v.m);
        else if constexpr (std::is_same_v<T, LastEntryLe>)
          return "last entry <= " + std::to_string(v.v);
        else if constexpr (std::is_same_v<T, FirstGe2AndLastLeNminus1>)
          return "first entry >= 2, last entry <= n-1";
        else
          return "last " + std::to_string(v.i) + " entries increasing";
      },
      c);
}

BigInt count_avoider_class(int n, const ClassConstraint& c) {
  if (n < 1) throw InvalidInput("class counts need n >= 1");
  return std::visit(
      [n](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        using namespace avoider_class;
        auto in_range = [n](int m, const char* what) {
          if (m < 1 || m > n) throw Unsupported(std::string(what) + " must lie in [1, n]");
        };
        if constexpr (std::is_same_v<T, FirstEntryEq>) {
          in_range(v.k, "k");
          return C(v.k, n - v.k);
        } else if constexpr (std::is_same_v<T, FirstEntryGe>) {
          in_range(v.k, "k");
          return C(v.k + 1, n - v.k);
        } else if constexpr (std::is_same_v<T, OneNotBeforePos> || std::is_same_v<T, MaxNotAfterPosFromEnd>) {
          in_range(v.m, "m");
          return C(v.m + 1, n - v.m);
        } else if constexpr (std::is_same_v<T, LastEntryLe>) {
          in_range(v.v, "v");
          const int m = n + 1 - v.v;
          return C(m + 1, n - m);
        } else if constexpr (std::is_same_v<T, FirstGe2AndLastLeNminus1>) {
          return C(2, n - 2) + C(5, n - 4);
        } else {
          in_range(v.i, "i");
          return C(v.i + 1, n - v.i);
        }
      },
      c);
}

}  // namespace permpath
