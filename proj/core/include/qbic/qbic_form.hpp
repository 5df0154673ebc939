#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbic/matrix.hpp"

namespace qbic {

class Subspace;

/// Isomorphism type (a; b_m): a unit blocks and b_m Jordan blocks N_m.
struct FormType {
  unsigned a = 0;
  std::map<unsigned, unsigned> blocks;  // m -> b_m, only nonzero entries

  unsigned dimension() const;
  unsigned corank() const;
  std::string str() const;  // e.g. "(1; b_2=1)"
  bool operator==(const FormType& o) const { return a == o.a && blocks == o.blocks; }
  bool operator<(const FormType& o) const;
};

/// All types of the given dimension, in a fixed deterministic order.
std::vector<FormType> all_form_types(unsigned dim);

/**
 * Invariant profile of a form under twisted congruence A -> P^(q)T A P.
 *
 * right_chain tracks the saturating kernel chain Q_1 = ker A,
 * Q_{s+1} = Q_s + A^{-1}(A'(Q_s)) with A'(v) = (A^(q))^T v^(q^2); left_chain
 * is the analogous chain seeded by the descended left kernel
 * {v : A^T v^(q) = 0} and grown by {v : A'(v) in A W}. cross_dims records
 * dim(Q_s cap D_t), which separates types the chain dimensions alone cannot
 * (e.g. N_4 from N_3 + 1). All entries are additive over direct sums.
 */
struct FormProfile {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::size_t radical_dim = 0;
  std::vector<std::size_t> right_chain;
  std::vector<std::size_t> left_chain;
  std::vector<std::vector<std::size_t>> cross_dims;

  std::optional<FormType> type;     // set when exactly one candidate matches
  std::vector<FormType> matches;    // every candidate whose profile agrees

  bool invariants_equal(const FormProfile& o) const;
};

/**
 * A q-bic form: Gram matrix A over a field of order q^(2s) with
 * beta(u^[1], v) = sum a_ij u_i^q v_j. Values are immutable; all operations
 * are pure and safe for concurrent use.
 */
class QBicForm {
 public:
  QBicForm(const Field& field, unsigned q, Matrix gram);

  static QBicForm fermat(const Field& field, unsigned q, std::size_t dim);
  // Block-diagonal normal form 1^a + sum_m N_m^(b_m).
  static QBicForm from_type(const Field& field, unsigned q, const FormType& type);

  const Field& field() const { return *field_; }
  unsigned q() const { return q_; }
  unsigned q_squared() const { return q_ * q_; }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  bool is_zero_form() const { return gram_.is_zero(); }

  /// A = (A^(q))^T. Exactly then is every base-field vector Hermitian, so
  /// base-field enumeration sees the full Hermitian geometry and the closed
  /// count formulas apply to it. Congruence twists of such forms can have
  /// strictly fewer rational points than the formulas predict.
  bool has_hermitian_gram() const;

  /// beta(u^[1], v) = u^(q)T A v.
  Fe evaluate(const Vec& u, const Vec& v) const;
  Fe evaluate_point(const Vec& v) const { return evaluate(v, v); }

  /// Restricted form B^(q)T A B for a basis matrix B of U; possibly zero.
  QBicForm restrict_to(const Subspace& U) const;

  /// Kernels, radical and rank data (no type matching).
  FormProfile kernels() const;
  Subspace right_kernel() const;  // ker A, source coordinates
  Subspace left_kernel() const;   // ker A^T, twisted coordinates
  Subspace radical() const;       // {v : Av = 0 and (v^(q))^T A = 0}

  bool is_smooth() const;           // Gram invertible; throws on the zero form
  Subspace singular_locus() const;  // P V^perp, twisted coordinates
  bool is_cone() const;             // radical nonzero

  bool has_phi() const { return phi_.has_value(); }
  const Matrix& phi_matrix() const;  // A^{-1} (A^(q))^T

  /// phi(v) = A^{-1} (A^(q))^T v^(q^2); q^2-linear bijection, needs nonsingular A.
  Vec phi_apply(const Vec& v) const;
  Vec phi_iterate(const Vec& v, unsigned times) const;

  /// Exact fixedness phi(v) = v of the given representative.
  bool is_hermitian_vector(const Vec& v) const;
  /// Projective variant: phi(v) in <v>; independent of the representative.
  bool is_hermitian_point(const Vec& v) const;

  /// Base change along an embedding of the coefficient field.
  QBicForm base_change(const Embedding& into) const;

 private:
  const Field* field_;
  unsigned q_;
  Matrix gram_;
  std::optional<Matrix> phi_;  // cached A^{-1} (A^(q))^T when invertible
};

/// Raw congruence invariants of a form (no candidate matching).
FormProfile form_profile(const QBicForm& form);

/**
 * Matches invariant profiles against every candidate normal form of a fixed
 * dimension. Candidate profiles are computed once, so bulk classification
 * (the orbit oracle classifies every Gram matrix of a dimension) stays cheap.
 */
class TypeMatcher {
 public:
  TypeMatcher(const Field& field, unsigned q, unsigned dim);

  /// Profile plus all matching candidates; `type` is set when unique.
  FormProfile classify(const QBicForm& form) const;
  const std::vector<FormType>& candidates() const { return types_; }

 private:
  std::vector<FormType> types_;
  std::vector<FormProfile> profiles_;
  std::size_t pad_len_ = 1;
};

/**
 * Full invariant profile plus type matching against every candidate normal
 * form of the same dimension. Ambiguity (no or several matches) is a result
 * state reported through `matches`, never an error.
 */
FormProfile classify_type(const QBicForm& form);

}  // namespace qbic
