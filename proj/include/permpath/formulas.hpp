#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permpath/bigint.hpp"

namespace permpath {

enum class Family {
  P132_1,
  P321_1,
  P321_2,
  P321_3,
  P321_4,
  P321_1_Last2Up,
  P321_2_Last2Up,
  SimionSchmidt,
  P123Avoid132_1,
  P123Avoid132_2,
  P123Avoid132_3,
  P123Avoid132_4,
};

/// Every family, in CLI listing order.
const std::vector<Family>& all_families();

/// Stable CLI name, e.g. "p321-2" or "p123avoid-132-1".
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Plain-language description of the permutations the family counts.
std::string family_description(Family f);

/// Closed-form count for n >= 1.
BigInt count(Family f, int n);

/// Classes of 321-avoiders on [n] with closed-form counts.
namespace avoider_class {
struct FirstEntryEq {
  int k;
};
struct FirstEntryGe {
  int k;
};
/// 1 sits at position >= m.
struct OneNotBeforePos {
  int m;
};
/// n sits at position <= n + 1 - m.
struct MaxNotAfterPosFromEnd {
  int m;
};
struct LastEntryLe {
  int v;
};
struct FirstGe2AndLastLeNminus1 {};
/// The last i entries increase.
struct LastIIncreasing {
  int i;
};
}  // namespace avoider_class

using ClassConstraint =
    std::variant<avoider_class::FirstEntryEq, avoider_class::FirstEntryGe,
                 avoider_class::OneNotBeforePos, avoider_class::MaxNotAfterPosFromEnd,
                 avoider_class::LastEntryLe, avoider_class::FirstGe2AndLastLeNminus1,
                 avoider_class::LastIIncreasing>;

std::string describe(const ClassConstraint& c);

BigInt count_avoider_class(int n, const ClassConstraint& c);

}  // namespace permpath
