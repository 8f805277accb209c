#include "permpath/series.hpp"

#include <algorithm>

#include "permpath/ballot.hpp"
#include "permpath/errors.hpp"

namespace permpath {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) s += mag.str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPowerSeries::IntPowerSeries(std::vector<BigInt> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw InvalidInput("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

IntPowerSeries::IntPowerSeries(const IntPolynomial& p, int order)
    : IntPowerSeries(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()), order) {}

const BigInt& IntPowerSeries::coeff(int i) const {
  if (i < 0 || i > order_) throw InvalidInput("coefficient index outside truncation order");
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPowerSeries operator*(const IntPowerSeries& a, const IntPowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return IntPowerSeries(std::move(c), order);
}

IntPowerSeries divide(const IntPolynomial& num, const IntPolynomial& den, int order) {
  if (den.coeff(0) != 1) throw InvalidInput("series division needs a denominator with constant term 1");
  // den * out = num  =>  out_i = num_i - sum_{j>=1} den_j out_{i-j}
  std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    BigInt v = num.coeff(i);
    for (int j = 1; j <= std::min(i, den.degree()); ++j) v -= den.coeff(j) * out[static_cast<std::size_t>(i - j)];
    out[static_cast<std::size_t>(i)] = v;
  }
  return IntPowerSeries(std::move(out), order);
}

namespace {

IntPolynomial three_term(int h, IntPolynomial first, IntPolynomial second) {
  if (h < 0) throw InvalidInput("Chebyshev index must be >= 0");
  if (h == 0) return first;
  IntPolynomial prev = std::move(first), cur = std::move(second);
  for (int i = 1; i < h; ++i) {
    IntPolynomial next = cur - prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntPolynomial chebyshev_q(int h) { return three_term(h, IntPolynomial{1}, IntPolynomial{1}); }

IntPolynomial chebyshev_p(int h) { return three_term(h, IntPolynomial{2}, IntPolynomial{1}); }

BigInt bounded_height_count(int n, int h) {
  if (n < 0) return 0;
  return divide(chebyshev_q(h), chebyshev_q(h + 1), n).coeff(n);
}

BigInt corridor_count(int n, int h, int r, int s) {
  if (h < 1) throw InvalidInput("corridor count needs h >= 1");
  if (r < 0 || s < 0) throw InvalidInput("corridor offsets must be >= 0");
  if (n < 0) return 0;
  return divide(chebyshev_q(r) * chebyshev_q(s), chebyshev_q(r + s + h), n).coeff(n);
}

IntMatrix catalan_triangle(int nmax) {
  IntMatrix m(static_cast<std::size_t>(nmax + 1), std::vector<BigInt>(static_cast<std::size_t>(nmax + 1)));
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) m[n][k] = ballot(k, n - k);
  return m;
}

IntMatrix catalan_triangle_inverse(int nmax) {
  IntMatrix m(static_cast<std::size_t>(nmax + 1), std::vector<BigInt>(static_cast<std::size_t>(nmax + 1)));
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) {
      BigInt b = binomial(k, n - k);
      m[n][k] = (n - k) % 2 == 0 ? b : BigInt(-b);
    }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b.front().size();
  IntMatrix c(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMatrix identity_matrix(int size) {
  IntMatrix m(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

}  // namespace permpath
