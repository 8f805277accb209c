#pragma once

#include <string>
#include <variant>

#include "permpath/bigint.hpp"

namespace permpath {

enum class BinomialConvention {
  Standard,
  /// Adds binom(-1, -1) = 1 and binom(-1, 0) = 0. Only the subtraction form
  /// of the last-ascents count needs it.
  ExtendedMinusOne,
};

/// binom(a, b); zero when b < 0, b > a or a < 0 (Standard convention).
BigInt binomial(long a, long b, BinomialConvention conv = BinomialConvention::Standard);

/// Ballot number [x^n] C(x)^k: zero for n < 0, [n = 0] for k = 0.
BigInt ballot(long k, long n);

/// The two closed forms of the ballot number, kept separately so they can be
/// checked against each other. Both require k >= 1 and n >= 0.
BigInt ballot_by_difference(long k, long n);
BigInt ballot_by_quotient(long k, long n);

BigInt catalan(long n);

/// First-quadrant paths with the given step counts.
BigInt count_first_quadrant(long ups, long downs);

/// Classes of Dyck n-paths with closed-form counts.
namespace dyck_class {
struct FirstAscentEq {
  int k;
};
struct FirstAscentGe {
  int k;
};
/// First ascent >= r, last descent >= s, optionally at least one interior return.
struct FirstAscentLastDescent {
  int r;
  int s;
  bool require_interior_return;
};
/// First ascent >= r and at least s nonfinal descents, the first s of them 1.
struct FirstAscentNonfinalDescentsOne {
  int r;
  int s;
};
/// First ascent >= r and at least s-1 noninitial ascents, the last s-1 of them 1.
struct FirstAscentLastAscentsOne {
  int r;
  int s;
};
}  // namespace dyck_class

using DyckClassConstraint =
    std::variant<dyck_class::FirstAscentEq, dyck_class::FirstAscentGe,
                 dyck_class::FirstAscentLastDescent, dyck_class::FirstAscentNonfinalDescentsOne,
                 dyck_class::FirstAscentLastAscentsOne>;

std::string describe(const DyckClassConstraint& c);

BigInt count_dyck_class(long n, const DyckClassConstraint& c);

/// Last-ascents count, subtraction form (r, s >= 1).
BigInt count_lastascents_G(long n, long r, long s);
/// Last-ascents count, subtraction-free double-sum form (r, s >= 1).
BigInt count_lastascents_F(long n, long r, long s);

}  // namespace permpath
