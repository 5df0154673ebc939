#include <doctest.h>

#include "qbic/combinatorics.hpp"

using namespace qbic;

TEST_CASE("gaussian numbers at qbar = -q") {
  CHECK(gauss_number(0, 2) == 0);
  CHECK(gauss_number(1, 2) == 1);
  CHECK(gauss_number(4, 2) == -5);  // 1 - 2 + 4 - 8
  CHECK(gauss_number(5, 2) == 11);
  CHECK(gauss_factorial(0, 2) == 1);
  CHECK(gauss_binomial(5, 0, 2) == 1);
  CHECK(gauss_binomial(5, 2, 2) == 55);  // [5][4]/([2][1]) = 11*(-5)/(-1)
  CHECK(gauss_double_factorial(3, 2) == 3);
  CHECK(gauss_double_factorial(5, 2) == 33);  // [1][3][5] = 1*3*11
  CHECK_THROWS_AS(gauss_double_factorial(4, 2), ParameterOutOfRangeError);
  CHECK_THROWS_AS(gauss_binomial(3, 4, 2), ParameterOutOfRangeError);
}

TEST_CASE("gaussian binomial symmetry at both parameters") {
  for (unsigned q : {2u, 3u, 5u}) {
    for (unsigned n = 0; n <= 30; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(gauss_binomial(n, k, q) == gauss_binomial(n, n - k, q));
        BigInt qq = BigInt(q) * q;
        CHECK(gauss_binomial_param(n, k, qq) == gauss_binomial_param(n, n - k, qq));
      }
    }
  }
}

TEST_CASE("hermitian maximal counts") {
  CHECK(hermitian_max_count(2, 1, Parity::even) == 27);
  CHECK(hermitian_max_count(3, 1, Parity::even) == 112);  // (q+1)(q^3+1)
  CHECK(hermitian_max_count(2, 1, Parity::odd) == 297);   // 9 * 33
  CHECK(hermitian_max_count(2, 0, Parity::even) == 3);
}

TEST_CASE("hermitian plane counts") {
  CHECK(hermitian_plane_count(2, 2, 0) == 9);
  CHECK(hermitian_plane_count(2, 4, 0) == 165);
  CHECK(hermitian_plane_count(2, 4, 1) == 297);
  CHECK(hermitian_plane_count(2, 3, 1) == 27);
  CHECK(hermitian_plane_count(3, 3, 1) == 112);
  CHECK_THROWS_AS(hermitian_plane_count(2, 4, 2), ParameterOutOfRangeError);
}

TEST_CASE("hermitian plane counts are positive on the wide grid") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (unsigned n = 2; n <= 12; ++n) {
      for (unsigned k = 0; 2 * k < n; ++k) {
        CHECK(hermitian_plane_count(q, n, k) > 0);
      }
    }
  }
}

TEST_CASE("double counting identity") {
  CHECK(hermitian_plane_count(2, 4, 0) * 9 == hermitian_plane_count(2, 4, 1) * 5);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned n = 3; n <= 8; ++n) {
      unsigned m = (n - 1) / 2;
      for (unsigned k = 0; k < m; ++k) {
        CHECK(double_count_identity(q, n, k, m));
      }
    }
  }
  CHECK_THROWS_AS(double_count_identity(2, 5, 2, 2), ParameterOutOfRangeError);
}

TEST_CASE("fano dimension and canonical degree") {
  CHECK(expected_fano_dim(4, 1) == 2);   // the Fano surface
  CHECK(expected_fano_dim(3, 1) == 0);
  CHECK(expected_fano_dim(7, 2) == 6);
  CHECK(canonical_degree(4, 1, 2) == 1);  // general type
  // trivial canonical bundle at n = (q+1)(r+1) - 1
  for (unsigned q : {2u, 3u, 4u}) {
    for (unsigned r = 1; r <= 2; ++r) {
      CHECK(canonical_degree((q + 1) * (r + 1) - 1, r, q) == 0);
    }
  }
}

TEST_CASE("inseparable degrees of the cyclic correspondences") {
  CHECK(phi_minus_degree(2, 1) == 4);       // q^(k(k+1)) = 2^2
  CHECK(phi_minus_degree(2, 2) == 64);      // 2^6
  CHECK(phi_minus_degree(3, 1) == 9);
  CHECK(phi_plus_degree(2, 4, 1) == 4);              // 2^(1*(8-3-3))
  CHECK(phi_plus_degree(2, 5, 2) == 4);              // 2^(2*(10-6-3))
  CHECK(phi_plus_degree(3, 5, 1) == 3 * 3 * 3 * 3);  // 3^(1*(10-3-3))
}

TEST_CASE("unitary group orders") {
  CHECK(unitary_group_order(2, 1) == 3);           // GU_1(2) = mu_3
  CHECK(projective_unitary_group_order(2, 1) == 1);
  CHECK(unitary_group_order(2, 3) == 648);
  CHECK(projective_unitary_group_order(2, 3) == 216);
  CHECK(projective_unitary_group_order(2, 5) == 13685760);

  // the Ennola product qbar^(k(2k+1)) prod_{i=2}^{2k+1} (qbar^i - 1) at odd n
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    BigInt qbar(-static_cast<long long>(q));
    for (unsigned k = 1; k <= 4; ++k) {
      BigInt prod = big_pow(qbar, k * (2 * k + 1));
      for (unsigned i = 2; i <= 2 * k + 1; ++i) prod *= big_pow(qbar, i) - 1;
      CHECK(prod == projective_unitary_group_order(q, 2 * k + 1));
      CHECK(prod > 0);
    }
  }
}

TEST_CASE("plucker degrees") {
  CHECK(plucker_degree(2, 0, Parity::even) == 3);  // the plane curve, q+1
  CHECK(plucker_degree(3, 0, Parity::even) == 4);
  CHECK(plucker_degree(2, 1, Parity::even) == 45);
  CHECK(plucker_degree(3, 1, Parity::even) == 160);  // 8*80/4
  CHECK(plucker_degree(2, 1, Parity::odd) == 27);
  CHECK(plucker_degree(4, 1, Parity::odd) == 325);   // 5*65
  CHECK(plucker_degree(2, 2, Parity::odd) == 891);   // 3*9*33
}

TEST_CASE("degree of the scheme of lines") {
  CHECK(deg_f1(3, 2) == 27);
  CHECK(deg_f1(4, 2) == 45);
  CHECK(deg_f1(4, 3) == 160);
  CHECK(deg_f1(5, 2) == 108);
  CHECK_THROWS_AS(deg_f1(2, 2), ParameterOutOfRangeError);
}

TEST_CASE("exact division guard") {
  CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2), "test"), ExactDivisionError);
  CHECK(exact_div(BigInt(10), BigInt(5), "test") == 2);
}
