#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qbic/bigint.hpp"
#include "qbic/matrix.hpp"
#include "qbic/qbic_form.hpp"

namespace qbic {

/**
 * A linear subspace in canonical reduced-row-echelon form. Two Subspace
 * values are equal exactly when their RREF matrices are identical, so
 * set-level equality is matrix equality.
 */
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient_dim)
      : basis_(f, 0, ambient_dim) {}
  // Canonicalizes: row-reduces and drops zero rows.
  static Subspace span(const Matrix& rows);
  static Subspace span_of(const Field& f, const std::vector<Vec>& rows);
  static Subspace full(const Field& f, std::size_t ambient_dim);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  std::size_t intersection_dim(const Subspace& other) const;

  // Entrywise Frobenius image/preimage (the twist of the subspace).
  Subspace frobenius_image(std::uint64_t s) const;
  Subspace frobenius_preimage(std::uint64_t s) const;

  // {v : Av in *this} for the matrix A acting on the ambient space.
  Subspace preimage_under(const Matrix& a) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}
  Matrix basis_;
};

/**
 * Deterministic enumeration layout for k-dimensional subspaces of an
 * n-dimensional space: one entry per pivot-column pattern (lexicographic),
 * with |field|^free matrices each. The total must equal the Gaussian binomial
 * [n choose k] at |field|.
 */
struct EnumerationPlan {
  struct Pattern {
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // (row, col)
    std::uint64_t count = 0;  // |field|^free
  };
  std::size_t ambient_dim = 0;
  std::size_t sub_dim = 0;
  std::vector<Pattern> patterns;
  BigInt total = 0;
};

EnumerationPlan make_enumeration_plan(const Field& f, std::size_t ambient_dim,
                                      std::size_t sub_dim);

struct EnumerationOptions {
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;  // subspace visits
};

/// Visits every k-subspace exactly once in plan order (single-threaded).
/// The visitor receives the RREF basis matrix; returning false stops early.
void for_each_subspace(const Field& f, std::size_t ambient_dim,
                       std::size_t sub_dim,
                       const std::function<bool(const Matrix&)>& visit,
                       std::uint64_t budget = 100'000'000);

/// Parallel count of subspaces satisfying `pred`. Work splits into
/// (pattern, chunk) tasks; per-task tallies are reduced in task order, so the
/// result is identical for any worker count. Throws BudgetExceededError
/// upfront when the plan total exceeds the budget.
BigInt count_subspaces_if(const Field& f, std::size_t ambient_dim,
                          std::size_t sub_dim,
                          const std::function<bool(const Matrix&)>& pred,
                          const EnumerationOptions& opts = {});

/// All subspaces as canonical Subspace values (desk-scale helper).
std::vector<Subspace> enumerate_subspaces(const Field& f,
                                          std::size_t ambient_dim,
                                          std::size_t sub_dim,
                                          std::uint64_t budget = 100'000'000);

// ---- predicates and counts attached to a q-bic form ----

/// True iff B^(q)T A B = 0 for the RREF basis B of U; q-linearity in the
/// first slot makes the basis check equivalent to isotropy of every vector.
bool is_isotropic(const QBicForm& form, const Subspace& U);
bool is_isotropic_basis(const QBicForm& form, const Matrix& rows);

/// Number of isotropic (r+1)-subspaces rational over F_{q^(2s)}; the form is
/// base-changed from its own field to the degree-s extension.
BigInt fano_count(const QBicForm& form, unsigned r, unsigned s,
                  const EnumerationOptions& opts = {});

/// phi(U) = U, tested by comparing RREF forms. Needs a nonsingular form.
bool is_hermitian_subspace(const QBicForm& form, const Subspace& U);

/// Number of Hermitian isotropic (k+1)-subspaces, enumerated over the form's
/// own field F_{q^2}.
BigInt hermitian_fano_count(const QBicForm& form, unsigned k,
                            const EnumerationOptions& opts = {});

/// Membership in the dynamical filtration X^k: beta(phi^i(v)^[1], v) = 0 for
/// 0 <= i <= k.
bool filtration_member(const QBicForm& form, const Vec& v, unsigned k);

/// Number of projective points of X^k over F_{q^(2s)}.
BigInt filtration_count(const QBicForm& form, unsigned k, unsigned s,
                        const EnumerationOptions& opts = {});

/// <v, phi(v), ..., phi^k(v)> as a canonical subspace.
Subspace cyclic_span(const QBicForm& form, const Vec& v, unsigned k);

/// dim(U cap phi(U)) >= dim U - 1.
bool is_cyclic_plane(const QBicForm& form, const Subspace& U);

/// Points of the hypersurface X itself over F_{q^(2s)} (k = 0 filtration).
BigInt hypersurface_enumerated_count(const QBicForm& form, unsigned s,
                                     const EnumerationOptions& opts = {});

/// Hermitian (phi-fixed) projective points of X over F_{q^(2s)}.
BigInt hermitian_point_count_enumerated(const QBicForm& form, unsigned s,
                                        const EnumerationOptions& opts = {});

/// Field of order q^(2s) together with the embedding of form.field() into it.
Field extension_field_for(const QBicForm& form, unsigned s);

}  // namespace qbic
