#pragma once

#include "qbic/bigint.hpp"

namespace qbic {

/**
 * Gaussian (q-analog) combinatorics at the Ennola parameter qbar = -q, on
 * exact integers. The parameter is fixed by construction: every unitary-side
 * count below is stated at qbar only, never at a free parameter.
 *
 *   [n]    = (1 - qbar^n) / (1 - qbar)
 *   [n]!   = prod_{i=1..n} [i]
 *   [n k]  = [n]! / ([k]! [n-k]!)
 *   [2k+1]!! = prod_{i=0..k} [2i+1]
 */
BigInt gauss_number(unsigned n, unsigned q);
BigInt gauss_factorial(unsigned n, unsigned q);
BigInt gauss_binomial(unsigned n, unsigned k, unsigned q);
BigInt gauss_double_factorial(unsigned odd_n, unsigned q);  // odd_n = 2k+1

// Same quantities at an arbitrary integer parameter (used at parameter q^2
// for counts of rational flags over F_{q^2}).
BigInt gauss_number_param(unsigned n, const BigInt& param);
BigInt gauss_binomial_param(unsigned n, unsigned k, const BigInt& param);

enum class Parity { even, odd };

/// Number of maximal (m-plane) Hermitian isotropic subspaces in a smooth
/// q-bic of dimension 2m (parity = even) or 2m+1 (parity = odd):
/// prod (q^(2i+1)+1), resp. prod (q^(2i+3)+1), i = 0..m.
BigInt hermitian_max_count(unsigned q, unsigned m, Parity dim_x_parity);

/// Number of Hermitian isotropic k-planes in a smooth q-bic in P^n:
/// (1-qbar)^(k+1) [2k+1]!! [n+1 choose 2k+2], always a positive integer.
BigInt hermitian_plane_count(unsigned q, unsigned n, unsigned k);

/// The nested-pair double count: with m = floor((n-1)/2) and 0 <= k < m,
///   HPC(q,n,k) * HPC(q,n-2k-2,m-k-1) == HPC(q,n,m) * [m+1 choose k+1]_{q^2}.
bool double_count_identity(unsigned q, unsigned n, unsigned k, unsigned m);

/// (r+1)(n-2r-1), the dimension of the Fano scheme of r-planes when smooth.
long long expected_fano_dim(unsigned n, unsigned r);

/// Plucker degree of the canonical bundle: (q+1)(r+1) - (n+1).
long long canonical_degree(unsigned n, unsigned r, unsigned q);

/// Inseparable degrees of the cyclic-resolution correspondences.
BigInt phi_minus_degree(unsigned q, unsigned k);              // q^(k(k+1))
BigInt phi_plus_degree(unsigned q, unsigned n, unsigned k);   // q^(k(2n-3k-3))

/// #GU_n(q) = q^(n(n-1)/2) prod_{i=1..n} (q^i - (-1)^i), and the projective
/// order #PGU_n(q) = #GU_n(q)/(q+1). For odd n = 2k+1 the projective order
/// equals the Ennola product qbar^(k(2k+1)) prod_{i=2..2k+1} (qbar^i - 1).
BigInt unitary_group_order(unsigned q, unsigned n);
BigInt projective_unitary_group_order(unsigned q, unsigned n);

/// Plucker degree of the Fano scheme of half-dimensional planes:
/// parity refers to the ambient n: odd n = 2m+1 gives prod (q^(2i+1)+1)
/// (a finite reduced scheme, degree = cardinality), even n = 2m+2 gives
/// prod (q^(2i+2)-1)/(q-1).
BigInt plucker_degree(unsigned q, unsigned m, Parity ambient_parity);

/// Degree of the scheme of lines when it has dimension 2n-6:
/// (2n-6)!/((n-1)!(n-3)!) (q+1)^2 ((n-1)q^2 + (2n-8)q + (n-1)).
BigInt deg_f1(unsigned n, unsigned q);

BigInt factorial(unsigned n);

}  // namespace qbic
