#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbic/bigint.hpp"

namespace qbic {

/// Sparse exact-integer multivariate polynomial in variables x_0 .. x_{r}.
/// No zero coefficients are stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

  static MultiPoly constant(unsigned nvars, const BigInt& c);
  static MultiPoly variable(unsigned nvars, unsigned index);
  /// c0 * x_i + c1 * x_j.
  static MultiPoly linear(unsigned nvars, unsigned i, const BigInt& ci,
                          unsigned j, const BigInt& cj);

  unsigned nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  void add_term(const Exponents& e, const BigInt& c);
  MultiPoly add(const MultiPoly& other) const;
  MultiPoly mul(const MultiPoly& other, std::uint64_t term_budget = 0) const;
  MultiPoly negated() const;
  MultiPoly permute_variables(const std::vector<unsigned>& perm) const;

  BigInt coefficient(const Exponents& e) const;
  unsigned total_degree() const;

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  unsigned nvars_;
  std::map<Exponents, BigInt> terms_;
};

/// The Schubert-calculus product without the multinomial power:
/// prod_{i,j=0..r} (x_i + q x_j) * prod_{i<j} (x_i - x_j).
MultiPoly schubert_factor_product(unsigned r, unsigned q,
                                  std::uint64_t term_budget = 2'000'000);

/**
 * Plucker degree of the Fano scheme of r-planes in a q-bic hypersurface in
 * P^n via coefficient extraction: the coefficient of x_0^n x_1^(n-1) ...
 * x_r^(n-r) in (x_0+...+x_r)^((r+1)(n-2r-1)) * schubert_factor_product.
 * The multinomial power is folded in exactly: each Schubert monomial x^alpha
 * contributes M! / prod (target_i - alpha_i)! when alpha <= target.
 */
BigInt fano_degree_coefficient(unsigned n, unsigned r, unsigned q,
                               std::uint64_t term_budget = 2'000'000);

struct DegreeReport {
  unsigned n = 0, r = 0, q = 0;
  BigInt coefficient;
  std::vector<std::pair<std::string, BigInt>> closed_forms;
  bool match = false;
};

/// Evaluates the coefficient extraction against every closed form applicable
/// to (n, r): deg_f1 for r = 1, the half-dimensional product formulas for
/// n = 2r+1 and n = 2r+2. Throws ParameterOutOfRangeError when none applies.
DegreeReport degree_crosscheck(unsigned n, unsigned r, unsigned q);

}  // namespace qbic
