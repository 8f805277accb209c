#include "permpath/ballot.hpp"

#include <algorithm>

#include "permpath/errors.hpp"

namespace permpath {

BigInt binomial(long a, long b, BinomialConvention conv) {
  if (conv == BinomialConvention::ExtendedMinusOne && a == -1) return b == -1 ? 1 : 0;
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

BigInt ballot_by_difference(long k, long n) {
  if (k < 1 || n < 0) throw InvalidInput("difference form needs k >= 1, n >= 0");
  return binomial(2 * n + k - 1, n) - binomial(2 * n + k - 1, n - 1);
}

BigInt ballot_by_quotient(long k, long n) {
  if (k < 1 || n < 0) throw InvalidInput("quotient form needs k >= 1, n >= 0");
  BigInt num = BigInt(k) * binomial(2 * n + k, n);
  BigInt den = 2 * n + k;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw Error("ballot quotient form left a remainder");
  return q;
}

BigInt ballot(long k, long n) {
  if (n < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (k < 0) throw InvalidInput("ballot needs k >= 0");
  return ballot_by_quotient(k, n);
}

BigInt catalan(long n) { return n < 0 ? BigInt(0) : ballot(1, n); }

BigInt count_first_quadrant(long ups, long downs) {
  if (ups < 0 || downs < 0 || ups < downs) return 0;
  return ballot(ups - downs + 1, downs);
}

namespace {

BigInt lastdescent_total(long n, long r, long s) {
  BigInt total = 0;
  for (long j = 0; j <= std::min(r, s); ++j) total += ballot(r + s + 1 - 2 * j, n - r - s + j);
  return total;
}

void require_nonnegative(long v, const char* name) {
  if (v < 0) throw Unsupported(std::string("class parameter ") + name + " must be >= 0");
}

}  // namespace

std::string describe(const DyckClassConstraint& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, dyck_class::FirstAscentEq>)
          return "first ascent = " + std::to_string(v.k);
        else if constexpr (std::is_same_v<T, dyck_class::FirstAscentGe>)
          return "first ascent >= " + std::to_string(v.k);
        else if constexpr (std::is_same_v<T, dyck_class::FirstAscentLastDescent>)
          return "first ascent >= " + std::to_string(v.r) + ", last descent >= " + std::to_string(v.s) +
                 (v.require_interior_return ? ", interior return" : "");
        else if constexpr (std::is_same_v<T, dyck_class::FirstAscentNonfinalDescentsOne>)
          return "first ascent >= " + std::to_string(v.r) + ", first " + std::to_string(v.s) +
                 " nonfinal descents = 1";
        else
          return "first ascent >= " + std::to_string(v.r) + ", last " + std::to_string(v.s - 1) +
                 " noninitial ascents = 1";
      },
      c);
}

BigInt count_dyck_class(long n, const DyckClassConstraint& c) {
  return std::visit(
      [n](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, dyck_class::FirstAscentEq>) {
          require_nonnegative(v.k, "k");
          return ballot(v.k, n - v.k);
        } else if constexpr (std::is_same_v<T, dyck_class::FirstAscentGe>) {
          require_nonnegative(v.k, "k");
          return ballot(v.k + 1, n - v.k);
        } else if constexpr (std::is_same_v<T, dyck_class::FirstAscentLastDescent>) {
          require_nonnegative(v.r, "r");
          require_nonnegative(v.s, "s");
          if (v.require_interior_return) return ballot(v.r + v.s + 1, n - v.r - v.s);
          return lastdescent_total(n, v.r, v.s);
        } else if constexpr (std::is_same_v<T, dyck_class::FirstAscentNonfinalDescentsOne>) {
          require_nonnegative(v.r, "r");
          require_nonnegative(v.s, "s");
          return ballot(v.r + v.s + 1, n - v.r - v.s);
        } else {
          if (v.r < 1 || v.s < 1) throw Unsupported("last-ascents class needs r, s >= 1");
          return count_lastascents_G(n, v.r, v.s);
        }
      },
      c);
}

BigInt count_lastascents_G(long n, long r, long s) {
  if (r < 1 || s < 1) throw InvalidInput("last-ascents count needs r, s >= 1");
  const long m = std::min(r, s);
  BigInt correction = 0;
  for (long j = 2; j <= m; ++j)
    correction += binomial(r + s - 2 * j, r - j, BinomialConvention::ExtendedMinusOne) *
                  ballot(0, n - r - s + j);
  return lastdescent_total(n, r, s) - correction;
}

BigInt count_lastascents_F(long n, long r, long s) {
  if (r < 1 || s < 1) throw InvalidInput("last-ascents count needs r, s >= 1");
  BigInt total = ballot(r + s, n + 1 - r - s);
  for (long k = 0; k <= r + s - 4; ++k) {
    BigInt coeff = 0;
    for (long j = 0; j <= r + s - 4 - k; ++j) coeff += binomial(k, r - 2 - j);
    total += coeff * ballot(r + s - 2 - k, n - r - s + 1);
  }
  return total;
}

}  // namespace permpath
