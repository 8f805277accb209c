#include <doctest.h>

#include "permpath/ballot.hpp"
#include "permpath/oracle.hpp"
#include "permpath/series.hpp"

using namespace permpath;

TEST_SUITE("gf-series") {

TEST_CASE("q polynomials") {
  CHECK(chebyshev_q(0) == IntPolynomial{1});
  CHECK(chebyshev_q(2) == IntPolynomial{1, -1});
  CHECK(chebyshev_q(4) == IntPolynomial{1, -3, 1});
}

TEST_CASE("p polynomials") {
  CHECK(chebyshev_p(1) == IntPolynomial{1});
  CHECK(chebyshev_p(2) == IntPolynomial{1, -2});
  CHECK(chebyshev_q(5) == chebyshev_p(3) * chebyshev_q(2));
  for (int h = 1; h <= 8; ++h) CHECK(chebyshev_q(2 * h - 1) == chebyshev_p(h) * chebyshev_q(h - 1));
}

TEST_CASE("bounded height") {
  CHECK(bounded_height_count(3, 2) == 4);
  for (int n = 0; n <= 10; ++n) {
    CHECK(bounded_height_count(n, 1) == 1);
    CHECK(bounded_height_count(n, n + 2) == catalan(n));
  }
  CHECK(oracle::count_dyck(3, oracle::PathFilter{}.height_le(2)) == 4);
}

TEST_CASE("corridors") {
  CHECK(corridor_count(0, 1, 0, 0) == 1);
  for (int n = 1; n <= 8; ++n) {
    CHECK(corridor_count(n, 1, 0, 0) == 0);
    CHECK(corridor_count(n, 1, 1, 0) == 1);
    CHECK(corridor_count(n, 2, 0, 0) == 1);
  }
}

TEST_CASE("Catalan triangle") {
  const auto t = catalan_triangle(10);
  CHECK(t[5][3] == 9);
  CHECK(t[8][1] == 429);
  CHECK(multiply(catalan_triangle(8), catalan_triangle_inverse(8)) == identity_matrix(9));
}

TEST_CASE("power series division") {
  // 1/(1-x) = 1 + x + x^2 + ...
  const auto s = divide(IntPolynomial{1}, IntPolynomial{1, -1}, 6);
  for (int i = 0; i < 6; ++i) CHECK(s.coeff(i) == 1);
}

}
