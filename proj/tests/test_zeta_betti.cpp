#include <doctest.h>

#include "qbic/combinatorics.hpp"
#include "qbic/subspace.hpp"
#include "qbic/zeta.hpp"

using namespace qbic;

TEST_CASE("coxeter zeta exponents") {
  // k=0: a single point, zeta = (1-t)^(-1)
  ZetaFactorization z0 = coxeter_zeta(2, 0);
  CHECK(z0.exponent(0) == -1);
  for (unsigned s = 1; s <= 5; ++s) CHECK(z0.point_count(s) == 1);

  // k=1, q=2: exponents (8, 2, -1)
  ZetaFactorization z1 = coxeter_zeta(2, 1);
  CHECK(z1.exponent(0) == 8);
  CHECK(z1.exponent(1) == 2);
  CHECK(z1.exponent(2) == -1);
  CHECK(z1.point_count(1) == 0);
  CHECK(z1.point_count(2) == 0);
  CHECK(z1.point_count(3) == 72);
  CHECK(z1.point_count(4) == 216);  // 4^4 + (-2)^5 - 8

  // k=2, q=2: exponents (-1024, -320, 120, 10, -1)
  ZetaFactorization z2 = coxeter_zeta(2, 2);
  CHECK(z2.exponent(0) == -1024);
  CHECK(z2.exponent(1) == -320);
  CHECK(z2.exponent(2) == 120);
  CHECK(z2.exponent(3) == 10);
  CHECK(z2.exponent(4) == -1);
}

TEST_CASE("coxeter point counts agree with the generating function") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned k = 0; k <= 4; ++k) {
      ZetaFactorization z = coxeter_zeta(q, k);
      auto series = coxeter_point_counts(q, k, 2 * k + 4);
      for (unsigned s = 1; s <= 2 * k + 4; ++s) {
        CHECK(z.point_count(s) == series[s - 1]);
      }
      // vanishing window, and the first nonzero count
      for (unsigned s = 1; s <= 2 * k; ++s) CHECK(z.point_count(s) == 0);
      BigInt qbar(-static_cast<long long>(q));
      BigInt lead = big_pow(qbar, k * (2 * k + 1)) *
                    big_pow(BigInt(1) - qbar, 2 * k) * gauss_factorial(2 * k, q);
      CHECK(z.point_count(2 * k + 1) == lead);
    }
  }
}

TEST_CASE("coxeter N_3 against the curve over F_64") {
  Field f4(2, 2);
  QBicForm curve = QBicForm::fermat(f4, 2, 3);
  BigInt total = hypersurface_enumerated_count(curve, 3);
  BigInt hermitian = hermitian_point_count_enumerated(curve, 3);
  CHECK(total == 81);
  CHECK(hermitian == 9);
  CHECK(coxeter_zeta(2, 1).point_count(3) == total - hermitian);
}

TEST_CASE("fano zeta of the q-bic curve itself (m = 0)") {
  for (unsigned q : {2u, 3u, 4u}) {
    ZetaFactorization z = fano_zeta(q, 0);
    // N_1 = q^3 + 1 Hermitian points
    CHECK(z.point_count(1) == big_pow(BigInt(q), 3) + 1);
    // e_1 = q^2 - q, twice the genus
    CHECK(z.exponent(1) == BigInt(q) * q - q);
    CHECK(z.exponent(0) == -1);
    CHECK(z.exponent(2) == -1);
  }
}

TEST_CASE("fano zeta of the Fano surface at q = 2") {
  ZetaFactorization z = fano_zeta(2, 1);
  CHECK(z.exponent(0) == -1);
  CHECK(z.exponent(1) == 10);
  CHECK(z.exponent(2) == -45);
  CHECK(z.exponent(3) == 10);
  CHECK(z.exponent(4) == -1);
  CHECK(z.point_count(1) == 297);
  CHECK(z.point_count(2) == 297);
  CHECK(z.point_count(3) == 12177);
}

TEST_CASE("fano zeta point counts match enumeration at (q, m) = (2, 1)") {
  Field f4(2, 2);
  QBicForm threefold = QBicForm::fermat(f4, 2, 5);
  ZetaFactorization z = fano_zeta(2, 1);
  CHECK(fano_count(threefold, 1, 1) == z.point_count(1));
  CHECK(fano_count(threefold, 1, 2) == z.point_count(2));
}

TEST_CASE("betti tables from zeta") {
  BettiTable t = betti_from_zeta(fano_zeta(2, 1), 1);
  REQUIRE(t.b.size() == 5);
  CHECK(t.b[0] == 1);
  CHECK(t.b[1] == 10);
  CHECK(t.b[2] == 45);
  CHECK(t.b[3] == 10);
  CHECK(t.b[4] == 1);

  // m = 0: (1, 2g, 1) with 2g = q^2 - q
  for (unsigned q : {2u, 3u, 5u}) {
    BettiTable c = betti_from_zeta(fano_zeta(q, 0), 0);
    CHECK(c.b[0] == 1);
    CHECK(c.b[1] == BigInt(q) * q - q);
    CHECK(c.b[2] == 1);
  }
}

TEST_CASE("purity violations are hard errors") {
  ZetaFactorization bad(2);
  bad.add_factor(0, -1);
  bad.add_factor(1, -3);  // a negative odd Betti slot
  bad.add_factor(2, -1);
  CHECK_THROWS_AS(betti_from_zeta(bad, 0), PurityViolationError);

  ZetaFactorization wrong_top(2);
  wrong_top.add_factor(0, -2);  // b_0 = 2
  wrong_top.add_factor(2, -1);
  CHECK_THROWS_AS(betti_from_zeta(wrong_top, 0), PurityViolationError);
}

TEST_CASE("closed-form betti numbers") {
  CHECK(betti_closed_form(2, 1, 0) == 1);
  CHECK(betti_closed_form(2, 1, 1) == 10);
  CHECK(betti_closed_form(2, 1, 2) == 45);
  CHECK(betti_closed_form(2, 1, 3) == 10);
  CHECK(betti_closed_form(2, 1, 4) == 1);
  CHECK_THROWS_AS(betti_closed_form(2, 1, 5), ParameterOutOfRangeError);

  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned m = 0; m <= 4; ++m) {
      BettiTable t = betti_from_zeta(fano_zeta(q, m), m);
      for (unsigned k = 0; k <= 2 * m + 2; ++k) {
        CHECK(betti_closed_form(q, m, k) == t.b[k]);
        CHECK(betti_closed_form(q, m, k) == betti_closed_form(q, m, 2 * m + 2 - k));
      }
      CHECK(betti_closed_form(q, m, 0) == 1);
      // b_1 = qbar [2m+2] = middle primitive dimension of the hypersurface
      CHECK(betti_closed_form(q, m, 1) ==
            hypersurface_middle_prim_dim(q, 2 * m + 2));
    }
  }
}

TEST_CASE("hypersurface point counts") {
  CHECK(hypersurface_middle_prim_dim(2, 2) == 2);
  CHECK(hypersurface_middle_prim_dim(2, 3) == 6);
  CHECK(hypersurface_middle_prim_dim(2, 4) == 10);

  CHECK(hypersurface_point_count(2, 2, 1) == 9);
  CHECK(hypersurface_point_count(2, 3, 1) == 45);
  CHECK(hypersurface_point_count(2, 4, 1) == 165);
  CHECK(hypersurface_point_count(2, 2, 3) == 81);

  Field f4(2, 2);
  for (unsigned n = 2; n <= 4; ++n) {
    QBicForm fermat = QBicForm::fermat(f4, 2, n + 1);
    for (unsigned s = 1; s <= 2; ++s) {
      CHECK(hypersurface_enumerated_count(fermat, s) ==
            hypersurface_point_count(2, n, s));
    }
  }
  Field f9(3, 2);
  QBicForm cubic = QBicForm::fermat(f9, 3, 3);
  CHECK(hypersurface_enumerated_count(cubic, 1) == hypersurface_point_count(3, 2, 1));
}

TEST_CASE("assembled zeta functions count nonnegatively to a horizon") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned m = 0; m <= 3; ++m) {
      ZetaFactorization z = fano_zeta(q, m);
      for (unsigned s = 1; s <= 8; ++s) {
        CHECK(z.point_count(s) >= 0);
      }
    }
  }
}

TEST_CASE("zeta multiplication is exponent addition") {
  ZetaFactorization a = coxeter_zeta(2, 1);
  ZetaFactorization b = coxeter_zeta(2, 0);
  ZetaFactorization ab = a;
  ab.multiply(b, 5);
  CHECK(ab.exponent(0) == a.exponent(0) + 5 * b.exponent(0));
  for (unsigned s = 1; s <= 4; ++s) {
    CHECK(ab.point_count(s) == a.point_count(s) + 5 * b.point_count(s));
  }
}
