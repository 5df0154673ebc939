#pragma once

#include <string>
#include <vector>

#include "qbic/subspace.hpp"

namespace qbic {

/// One named formula-vs-oracle comparison. Values are decimal strings so the
/// scorecard serializes losslessly.
struct CheckCase {
  std::string name;
  std::string params;
  std::string formula;
  std::string oracle;
  bool match = false;
  bool skipped = false;  // budget ran out before this case
  double elapsed_ms = 0.0;
};

struct Scorecard {
  std::vector<CheckCase> cases;
  bool budget_exhausted = false;

  bool all_match() const;
  std::size_t mismatches() const;
};

struct SuiteGrid {
  std::vector<unsigned> enum_qs = {2, 3};  // enumeration-backed checks
  unsigned enum_max_n = 4;
  unsigned max_s = 2;
  std::vector<unsigned> formula_qs = {2, 3, 4, 5};  // formula-only grids
  unsigned formula_max_n = 8;
  unsigned max_m = 4;
  unsigned max_k_cox = 4;
  unsigned orbit_max_dim = 3;
  bool include_fano_zeta_scan = true;  // the G(2,5)(F_16) enumeration

  static SuiteGrid default_grid() { return {}; }
  static SuiteGrid small_grid();
  static SuiteGrid empty_grid();
};

/// Runs every registered cross-check on the grid in a fixed deterministic
/// order. A BudgetExceededError inside a case marks it skipped and the
/// scorecard budget_exhausted; remaining cases still run.
Scorecard run_suite(const SuiteGrid& grid, const EnumerationOptions& opts = {});

/// Names of closed-form operations that the suite must exercise. run_suite
/// appends a failing "coverage/<name>" case for any registry entry that no
/// executed case covers.
const std::vector<std::string>& formula_registry();

/**
 * Exhaustive classification oracle over the coefficient field F_{q^2}:
 * partitions all dim x dim Gram matrices into orbits of the twisted
 * congruence A -> P^(q)T A P by generator closure, classifies every matrix,
 * and checks that classify_type is constant on orbits, unambiguous, and
 * realizes every type of the dimension exactly once across normal forms.
 *
 * Rational orbits are strictly finer than the geometric classification (the
 * scaling norm c -> c^(q+1) is not surjective on F_{q^2}^*), so
 * rational_orbits exceeds the type count; the type-level checks are the
 * meaningful ones and `ok` reflects them.
 */
struct OrbitReport {
  unsigned dim = 0;
  std::uint64_t matrices = 0;
  std::uint64_t rational_orbits = 0;
  std::size_t expected_types = 0;
  std::size_t realized_types = 0;
  bool constant_on_orbits = false;
  bool unambiguous = false;
  bool normal_forms_covered = false;

  bool ok() const {
    return constant_on_orbits && unambiguous && normal_forms_covered &&
           realized_types == expected_types;
  }
};

OrbitReport orbit_oracle(const Field& field, unsigned q, unsigned dim,
                         std::uint64_t matmul_budget = 1'000'000'000);

}  // namespace qbic
