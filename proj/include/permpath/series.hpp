#pragma once

#include <span>
#include <string>
#include <vector>

#include "permpath/bigint.hpp"

namespace permpath {

/// Polynomial over exact integers; coefficient i is the coefficient of x^i.
/// Canonical form has no trailing zeros, so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  /// Multiplication by x^k.
  IntPolynomial shifted(int k) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Power series truncated after x^order.
class IntPowerSeries {
 public:
  IntPowerSeries(std::vector<BigInt> coeffs, int order);
  IntPowerSeries(const IntPolynomial& p, int order);

  int order() const { return order_; }
  const BigInt& coeff(int i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  friend IntPowerSeries operator*(const IntPowerSeries& a, const IntPowerSeries& b);

 private:
  std::vector<BigInt> coeffs_;
  int order_;
};

/// num / den to the given order. The denominator must have constant term 1,
/// which keeps every coefficient integral.
IntPowerSeries divide(const IntPolynomial& num, const IntPolynomial& den, int order);

/// x^{h/2} U_h(1/(2 sqrt x)), generated by q_0 = q_1 = 1,
/// q_{h+1} = q_h - x q_{h-1}.
IntPolynomial chebyshev_q(int h);
/// 2 x^{h/2} T_h(1/(2 sqrt x)), generated by p_0 = 2, p_1 = 1,
/// p_{h+1} = p_h - x p_{h-1}.
IntPolynomial chebyshev_p(int h);

/// Dyck n-paths of height at most h: [x^n] q_h / q_{h+1}.
BigInt bounded_height_count(int n, int h);
/// Paths of n+h-1 ups and n downs inside -r <= y <= s+h-1:
/// [x^n] q_r q_s / q_{r+s+h}. Requires h >= 1.
BigInt corridor_count(int n, int h, int r, int s);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Lower-triangular (ballot(k, n-k))_{0 <= n,k <= nmax}.
IntMatrix catalan_triangle(int nmax);
/// ((-1)^{n-k} binom(k, n-k))_{0 <= n,k <= nmax}.
IntMatrix catalan_triangle_inverse(int nmax);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int size);

}  // namespace permpath
