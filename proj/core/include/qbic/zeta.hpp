#pragma once

#include <map>
#include <vector>

#include "qbic/bigint.hpp"

namespace qbic {

/**
 * A zeta function stored on the factor basis {(1 - qbar^i t)}: the rational
 * function prod_i (1 - qbar^i t)^(e_i) with integer exponents e_i. Point
 * counts over F_{q^(2s)} are recovered as N_s = -sum_i e_i qbar^(i s).
 * Multiplication adds exponent maps.
 */
class ZetaFactorization {
 public:
  explicit ZetaFactorization(unsigned q) : q_(q) {}

  unsigned q() const { return q_; }
  BigInt qbar() const { return BigInt(-static_cast<long long>(q_)); }

  void add_factor(unsigned i, const BigInt& exponent);
  const std::map<unsigned, BigInt>& factors() const { return factors_; }
  BigInt exponent(unsigned i) const;

  ZetaFactorization& multiply(const ZetaFactorization& other,
                              const BigInt& multiplicity = 1);

  /// N_s = -sum e_i qbar^(i s); the number of F_{q^(2s)}-points.
  BigInt point_count(unsigned s) const;

  std::vector<std::pair<unsigned, BigInt>> sorted_factors() const;

 private:
  unsigned q_;
  std::map<unsigned, BigInt> factors_;
};

/// Zeta function of the k-dimensional Coxeter Deligne-Lusztig stratum:
/// e_i = (-1)^(i+1) qbar^C(2k+1-i,2) [2k choose i] for 0 <= i <= 2k.
/// Cox_0 is a single point.
ZetaFactorization coxeter_zeta(unsigned q, unsigned k);

/// Point counts N_1..N_smax of the Coxeter stratum from the generating
/// function qbar^(k(2k+1)) (1-qbar)^(2k) [2k]! t^(2k+1) / prod (1 - qbar^i t),
/// computed by exact power-series division. Cross-checks coxeter_zeta.
std::vector<BigInt> coxeter_point_counts(unsigned q, unsigned k, unsigned s_max);

/// Zeta function of the Fano scheme of m-planes in a smooth q-bic of
/// dimension 2m+1, assembled from the motivic decomposition
/// [F] = [Cox_{m+1}] + sum_k #F_{m-k}(X)_Herm [Cox_k].
ZetaFactorization fano_zeta(unsigned q, unsigned m);

struct BettiTable {
  unsigned m = 0;
  std::vector<BigInt> b;  // b_0 .. b_{2m+2}
};

/// Betti numbers b_k = (-1)^(k+1) e_k read off a fano_zeta factorization.
/// Throws PurityViolationError when a slot is negative or b_0, b_top != 1.
BettiTable betti_from_zeta(const ZetaFactorization& z, unsigned m);

/// Closed-form k-th Betti number of the Fano scheme of m-planes.
BigInt betti_closed_form(unsigned q, unsigned m, unsigned k);

/// Dimension of the middle primitive cohomology of the hypersurface:
/// (-1)^n qbar [n]. Coincides with b_1 of the Fano scheme at n = 2m+2.
BigInt hypersurface_middle_prim_dim(unsigned q, unsigned n);

/// #X(F_{q^(2s)}) for a smooth q-bic hypersurface in P^n: all primitive
/// Frobenius eigenvalues equal qbar^(n-1), so the count is
/// sum_{j<n} q^(2js) + (-1)^(n-1) B qbar^((n-1)s) with B the primitive
/// dimension above.
BigInt hypersurface_point_count(unsigned q, unsigned n, unsigned s);

}  // namespace qbic
