#include "qbic/combinatorics.hpp"

namespace qbic {

BigInt gauss_number_param(unsigned n, const BigInt& param) {
  // (1 - param^n)/(1 - param) = 1 + param + ... + param^(n-1)
  BigInt acc = 0, p = 1;
  for (unsigned i = 0; i < n; ++i) {
    acc += p;
    p *= param;
  }
  return acc;
}

BigInt gauss_number(unsigned n, unsigned q) {
  return gauss_number_param(n, BigInt(-static_cast<long long>(q)));
}

BigInt gauss_factorial(unsigned n, unsigned q) {
  BigInt acc = 1;
  for (unsigned i = 1; i <= n; ++i) acc *= gauss_number(i, q);
  return acc;
}

BigInt gauss_binomial_param(unsigned n, unsigned k, const BigInt& param) {
  if (k > n) throw ParameterOutOfRangeError("gauss_binomial: k > n");
  BigInt num = 1, den = 1;
  for (unsigned i = 1; i <= n; ++i) num *= gauss_number_param(i, param);
  for (unsigned i = 1; i <= k; ++i) den *= gauss_number_param(i, param);
  for (unsigned i = 1; i <= n - k; ++i) den *= gauss_number_param(i, param);
  return exact_div(num, den, "gauss_binomial");
}

BigInt gauss_binomial(unsigned n, unsigned k, unsigned q) {
  return gauss_binomial_param(n, k, BigInt(-static_cast<long long>(q)));
}

BigInt gauss_double_factorial(unsigned odd_n, unsigned q) {
  if (odd_n % 2 == 0) {
    throw ParameterOutOfRangeError("gauss_double_factorial needs an odd argument");
  }
  BigInt acc = 1;
  for (unsigned i = 1; i <= odd_n; i += 2) acc *= gauss_number(i, q);
  return acc;
}

BigInt hermitian_max_count(unsigned q, unsigned m, Parity dim_x_parity) {
  BigInt acc = 1;
  for (unsigned i = 0; i <= m; ++i) {
    unsigned exp = dim_x_parity == Parity::even ? 2 * i + 1 : 2 * i + 3;
    acc *= big_pow(BigInt(q), exp) + 1;
  }
  return acc;
}

BigInt hermitian_plane_count(unsigned q, unsigned n, unsigned k) {
  if (!(2 * k < n)) {
    throw ParameterOutOfRangeError("hermitian_plane_count needs 0 <= k < n/2");
  }
  BigInt one_minus_qbar = BigInt(1) + q;  // 1 - qbar = 1 + q
  BigInt value = big_pow(one_minus_qbar, k + 1) *
                 gauss_double_factorial(2 * k + 1, q) *
                 gauss_binomial(n + 1, 2 * k + 2, q);
  if (value <= 0) {
    throw ExactDivisionError("hermitian_plane_count must be positive");
  }
  return value;
}

bool double_count_identity(unsigned q, unsigned n, unsigned k, unsigned m) {
  if (m != (n - 1) / 2 || k >= m) {
    throw ParameterOutOfRangeError("double_count_identity needs m = floor((n-1)/2), k < m");
  }
  BigInt lhs = hermitian_plane_count(q, n, k) *
               hermitian_plane_count(q, n - 2 * k - 2, m - k - 1);
  BigInt rhs = hermitian_plane_count(q, n, m) *
               gauss_binomial_param(m + 1, k + 1, BigInt(q) * q);
  return lhs == rhs;
}

long long expected_fano_dim(unsigned n, unsigned r) {
  if (!(2 * r < n)) throw ParameterOutOfRangeError("expected_fano_dim needs r < n/2");
  return static_cast<long long>(r + 1) *
         (static_cast<long long>(n) - 2 * static_cast<long long>(r) - 1);
}

long long canonical_degree(unsigned n, unsigned r, unsigned q) {
  if (!(2 * r < n)) throw ParameterOutOfRangeError("canonical_degree needs r < n/2");
  return static_cast<long long>(q + 1) * (r + 1) - static_cast<long long>(n + 1);
}

BigInt phi_minus_degree(unsigned q, unsigned k) {
  return big_pow(BigInt(q), k * (k + 1));
}

BigInt phi_plus_degree(unsigned q, unsigned n, unsigned k) {
  if (!(2 * k < n)) throw ParameterOutOfRangeError("phi_plus_degree needs k < n/2");
  long long e = static_cast<long long>(k) *
                (2LL * n - 3LL * k - 3LL);
  if (e < 0) throw ParameterOutOfRangeError("phi_plus_degree exponent negative");
  return big_pow(BigInt(q), static_cast<unsigned long>(e));
}

BigInt unitary_group_order(unsigned q, unsigned n) {
  BigInt acc = big_pow(BigInt(q), n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) {
    BigInt term = big_pow(BigInt(q), i);
    acc *= (i % 2 == 0) ? BigInt(term - 1) : BigInt(term + 1);  // q^i - (-1)^i
  }
  if (acc <= 0) throw ExactDivisionError("unitary group order must be positive");
  return acc;
}

BigInt projective_unitary_group_order(unsigned q, unsigned n) {
  return exact_div(unitary_group_order(q, n), BigInt(q) + 1,
                   "projective_unitary_group_order");
}

BigInt plucker_degree(unsigned q, unsigned m, Parity ambient_parity) {
  if (ambient_parity == Parity::odd) {
    return hermitian_max_count(q, m, Parity::even);
  }
  BigInt acc = 1;
  for (unsigned i = 0; i <= m; ++i) {
    acc *= exact_div(big_pow(BigInt(q), 2 * i + 2) - 1, BigInt(q) - 1,
                     "plucker_degree");
  }
  return acc;
}

BigInt factorial(unsigned n) {
  BigInt acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt deg_f1(unsigned n, unsigned q) {
  if (n < 3) throw ParameterOutOfRangeError("deg_f1 needs n >= 3");
  BigInt quad = BigInt(n - 1) * q * q +
                (BigInt(2) * n - 8) * q + BigInt(n - 1);
  BigInt num = factorial(2 * n - 6) * big_pow(BigInt(q) + 1, 2) * quad;
  return exact_div(num, factorial(n - 1) * factorial(n - 3), "deg_f1");
}

}  // namespace qbic
