#include "qbic/zeta.hpp"

#include "qbic/combinatorics.hpp"

namespace qbic {

void ZetaFactorization::add_factor(unsigned i, const BigInt& exponent) {
  BigInt& e = factors_[i];
  e += exponent;
  if (e == 0) factors_.erase(i);
}

BigInt ZetaFactorization::exponent(unsigned i) const {
  auto it = factors_.find(i);
  return it == factors_.end() ? BigInt(0) : it->second;
}

ZetaFactorization& ZetaFactorization::multiply(const ZetaFactorization& other,
                                               const BigInt& multiplicity) {
  if (other.q_ != q_) throw ParameterOutOfRangeError("zeta parameter mismatch");
  for (const auto& [i, e] : other.factors_) add_factor(i, e * multiplicity);
  return *this;
}

BigInt ZetaFactorization::point_count(unsigned s) const {
  BigInt acc = 0;
  for (const auto& [i, e] : factors_) {
    acc -= e * big_pow(qbar(), static_cast<unsigned long>(i) * s);
  }
  return acc;
}

std::vector<std::pair<unsigned, BigInt>> ZetaFactorization::sorted_factors() const {
  return {factors_.begin(), factors_.end()};
}

ZetaFactorization coxeter_zeta(unsigned q, unsigned k) {
  ZetaFactorization z(q);
  BigInt qbar = z.qbar();
  for (unsigned i = 0; i <= 2 * k; ++i) {
    BigInt c = big_pow(qbar, binomial2(BigInt(2 * k + 1 - i)).convert_to<unsigned long>()) *
               gauss_binomial(2 * k, i, q);
    if (i % 2 == 0) c = -c;  // (-1)^(i+1)
    z.add_factor(i, c);
  }
  return z;
}

std::vector<BigInt> coxeter_point_counts(unsigned q, unsigned k, unsigned s_max) {
  // t d/dt log zeta = C t^(2k+1) / prod_{i=0..2k} (1 - qbar^i t), whose t^s
  // coefficient is N_s.
  BigInt qbar(-static_cast<long long>(q));
  BigInt lead = big_pow(qbar, k * (2 * k + 1)) *
                big_pow(BigInt(1) - qbar, 2 * k) * gauss_factorial(2 * k, q);

  // denominator polynomial, exact integer coefficients
  std::vector<BigInt> den{1};
  for (unsigned i = 0; i <= 2 * k; ++i) {
    std::vector<BigInt> next(den.size() + 1, 0);
    BigInt root = big_pow(qbar, i);
    for (std::size_t j = 0; j < den.size(); ++j) {
      next[j] += den[j];
      next[j + 1] -= den[j] * root;
    }
    den = std::move(next);
  }

  // series coefficients a_s of (numerator)/(denominator); numerator is
  // lead * t^(2k+1)
  std::vector<BigInt> series(s_max + 1, 0);
  for (unsigned s = 1; s <= s_max; ++s) {
    BigInt acc = (s == 2 * k + 1) ? lead : BigInt(0);
    for (std::size_t j = 1; j < den.size() && j <= s; ++j) {
      acc -= den[j] * series[s - j];
    }
    series[s] = acc;  // den[0] = 1
  }
  return {series.begin() + 1, series.end()};
}

ZetaFactorization fano_zeta(unsigned q, unsigned m) {
  ZetaFactorization z = coxeter_zeta(q, m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    // Hermitian (m-k)-planes in the (2m+1)-dimensional hypersurface X in
    // P^(2m+2)
    BigInt mult = hermitian_plane_count(q, 2 * m + 2, m - k);
    z.multiply(coxeter_zeta(q, k), mult);
  }
  return z;
}

BettiTable betti_from_zeta(const ZetaFactorization& z, unsigned m) {
  BettiTable t;
  t.m = m;
  t.b.resize(2 * m + 3);
  for (const auto& [i, e] : z.factors()) {
    if (i >= t.b.size()) {
      throw PurityViolationError("zeta factor beyond the top cohomological degree");
    }
  }
  for (unsigned k = 0; k <= 2 * m + 2; ++k) {
    BigInt bk = z.exponent(k);
    if (k % 2 == 0) bk = -bk;  // b_k = (-1)^(k+1) e_k
    if (bk < 0) {
      throw PurityViolationError("negative Betti slot: assembly violates purity");
    }
    t.b[k] = bk;
  }
  if (t.b.front() != 1 || t.b.back() != 1) {
    throw PurityViolationError("b_0 and b_top must equal 1");
  }
  return t;
}

BigInt betti_closed_form(unsigned q, unsigned m, unsigned k) {
  if (k > 2 * m + 2) throw ParameterOutOfRangeError("betti_closed_form: k > 2m+2");
  BigInt qbar(-static_cast<long long>(q));
  auto qbar_binom2 = [&](long long n) {
    return big_pow(qbar, binomial2(BigInt(n)).convert_to<unsigned long>());
  };
  BigInt acc = qbar_binom2(2LL * m + 3 - k) * gauss_binomial(2 * m + 2, k, q);
  long long upper = static_cast<long long>(m) - (k + 1) / 2;  // m - ceil(k/2)
  for (long long i = 0; i <= upper; ++i) {
    BigInt term = big_pow(BigInt(1) - qbar, static_cast<unsigned long>(i + 1)) *
                  qbar_binom2(2LL * m + 1 - 2 * i - k) *
                  gauss_double_factorial(2 * i + 1, q) *
                  gauss_binomial(2 * m + 3, 2 * i + 2, q) *
                  gauss_binomial(2 * m - 2 * i, k, q);
    acc += term;
  }
  return acc;
}

BigInt hypersurface_middle_prim_dim(unsigned q, unsigned n) {
  if (n < 2) throw ParameterOutOfRangeError("hypersurface dimension needs n >= 2");
  BigInt qbar(-static_cast<long long>(q));
  BigInt b = qbar * gauss_number(n, q);
  if (n % 2 == 1) b = -b;
  if (b <= 0) throw ExactDivisionError("primitive dimension must be positive");
  return b;
}

BigInt hypersurface_point_count(unsigned q, unsigned n, unsigned s) {
  if (n < 2 || s < 1) throw ParameterOutOfRangeError("hypersurface_point_count");
  BigInt qbar(-static_cast<long long>(q));
  BigInt acc = 0;
  for (unsigned j = 0; j < n; ++j) {
    acc += big_pow(BigInt(q) * q, static_cast<unsigned long>(j) * s);
  }
  BigInt prim = hypersurface_middle_prim_dim(q, n) *
                big_pow(qbar, static_cast<unsigned long>(n - 1) * s);
  acc += (n % 2 == 0) ? -prim : prim;  // (-1)^(n-1) B qbar^((n-1)s)
  return acc;
}

}  // namespace qbic
