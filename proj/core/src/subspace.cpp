#include "qbic/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qbic {

Subspace Subspace::span(const Matrix& rows) {
  Matrix m = rows;
  m.rref();
  m = m.drop_zero_rows();
  return Subspace(std::move(m));
}

Subspace Subspace::span_of(const Field& f, const std::vector<Vec>& rows) {
  if (rows.empty()) throw DimensionMismatchError("span_of needs the ambient dimension");
  return span(Matrix::from_rows(f, rows));
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(f, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  // reduce v against the RREF rows, O(dim * ambient)
  const Field& f = field();
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < ambient_dim() && basis_.at(i, piv) == 0) ++piv;
    if (piv == ambient_dim()) continue;
    if (w[piv] == 0) continue;
    Fe c = w[piv];  // pivot entries are 1 in RREF
    for (std::size_t j = piv; j < ambient_dim(); ++j) {
      w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
    }
  }
  return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis().row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.dim() == 0) return *this;
  if (dim() == 0) return other;
  return span(basis_.stacked_on(other.basis()));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // v in U cap W  <=>  v = U^T a = W^T b; kernel of [U^T | -W^T] gives (a, b)
  const Field& f = field();
  const std::size_t k = dim(), l = other.dim(), n = ambient_dim();
  if (k == 0 || l == 0) return Subspace(f, n);
  Matrix block(f, n, k + l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) block.at(i, j) = basis_.at(j, i);
    for (std::size_t j = 0; j < l; ++j) block.at(i, k + j) = f.neg(other.basis_.at(j, i));
  }
  Matrix ker = block.kernel();
  std::vector<Vec> vs;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(n, 0);
    for (std::size_t j = 0; j < k; ++j) {
      Fe c = ker.at(r, j);
      if (c == 0) continue;
      for (std::size_t t = 0; t < n; ++t) {
        v[t] = f.add(v[t], f.mul(c, basis_.at(j, t)));
      }
    }
    vs.push_back(std::move(v));
  }
  if (vs.empty()) return Subspace(f, n);
  return span(Matrix::from_rows(f, vs));
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  if (dim() == 0 || other.dim() == 0) return 0;
  std::size_t joint = basis_.stacked_on(other.basis_).rank();
  return dim() + other.dim() - joint;
}

Subspace Subspace::frobenius_image(std::uint64_t s) const {
  return span(basis_.frob_entries(s));
}

Subspace Subspace::frobenius_preimage(std::uint64_t s) const {
  return span(basis_.frob_root_entries(s));
}

Subspace Subspace::preimage_under(const Matrix& a) const {
  // {v : Av in rowspace}: kernel of [A | -B^T] projected to the v block
  const Field& f = field();
  const std::size_t n = a.cols(), m = a.rows(), k = dim();
  Matrix block(f, m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) block.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < k; ++j) block.at(i, n + j) = f.neg(basis_.at(j, i));
  }
  Matrix ker = block.kernel();
  if (ker.rows() == 0) return Subspace(f, n);
  return span(ker.take_columns(0, n));
}

// ---------------------------------------------------------------------------
// enumeration

EnumerationPlan make_enumeration_plan(const Field& f, std::size_t ambient_dim,
                                      std::size_t sub_dim) {
  if (sub_dim > ambient_dim) {
    throw DimensionMismatchError("subspace dimension exceeds ambient dimension");
  }
  EnumerationPlan plan;
  plan.ambient_dim = ambient_dim;
  plan.sub_dim = sub_dim;
  if (sub_dim == 0) {
    // the unique zero subspace: one empty pattern
    plan.patterns.push_back({{}, {}, 1});
    plan.total = 1;
    return plan;
  }
  std::vector<std::size_t> pivots(sub_dim);
  for (std::size_t i = 0; i < sub_dim; ++i) pivots[i] = i;
  for (;;) {
    EnumerationPlan::Pattern pat;
    pat.pivots = pivots;
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t i = 0; i < sub_dim; ++i) {
      for (std::size_t j = pivots[i] + 1; j < ambient_dim; ++j) {
        if (!is_pivot[j]) pat.free_slots.emplace_back(i, j);
      }
    }
    BigInt cnt = big_pow(BigInt(f.order()), static_cast<unsigned long>(pat.free_slots.size()));
    plan.total += cnt;
    pat.count = cnt > BigInt(UINT64_MAX) ? UINT64_MAX : cnt.convert_to<std::uint64_t>();
    plan.patterns.push_back(std::move(pat));
    // next combination in lexicographic order
    std::size_t i = sub_dim;
    while (i-- > 0) {
      if (pivots[i] + (sub_dim - i) < ambient_dim) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < sub_dim; ++j) pivots[j] = pivots[j - 1] + 1;
        break;
      }
      if (i == 0) return plan;
    }
  }
}

namespace {

// Writes the skeleton of the pattern (pivot ones, zeros elsewhere).
void fill_skeleton(Matrix& m, const EnumerationPlan::Pattern& pat) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = 0;
  for (std::size_t i = 0; i < pat.pivots.size(); ++i) {
    m.at(i, pat.pivots[i]) = m.field().one();
  }
}

// Decodes `rank` into the odometer digits (last free slot varies fastest) and
// writes them into the matrix.
void seek_odometer(Matrix& m, const EnumerationPlan::Pattern& pat,
                   std::vector<Fe>& digits, std::uint64_t rank,
                   std::uint64_t order) {
  for (std::size_t i = pat.free_slots.size(); i-- > 0;) {
    digits[i] = static_cast<Fe>(rank % order);
    rank /= order;
    m.at(pat.free_slots[i].first, pat.free_slots[i].second) = digits[i];
  }
}

// Advances the odometer by one; returns false on wrap-around.
bool step_odometer(Matrix& m, const EnumerationPlan::Pattern& pat,
                   std::vector<Fe>& digits, std::uint64_t order) {
  for (std::size_t i = pat.free_slots.size(); i-- > 0;) {
    if (++digits[i] < order) {
      m.at(pat.free_slots[i].first, pat.free_slots[i].second) = digits[i];
      return true;
    }
    digits[i] = 0;
    m.at(pat.free_slots[i].first, pat.free_slots[i].second) = 0;
  }
  return false;
}

}  // namespace

void for_each_subspace(const Field& f, std::size_t ambient_dim,
                       std::size_t sub_dim,
                       const std::function<bool(const Matrix&)>& visit,
                       std::uint64_t budget) {
  EnumerationPlan plan = make_enumeration_plan(f, ambient_dim, sub_dim);
  if (plan.total > BigInt(budget)) {
    throw BudgetExceededError("subspace enumeration exceeds the visit budget");
  }
  Matrix m(f, sub_dim, ambient_dim);
  for (const auto& pat : plan.patterns) {
    fill_skeleton(m, pat);
    std::vector<Fe> digits(pat.free_slots.size(), 0);
    for (std::uint64_t v = 0; v < pat.count; ++v) {
      if (!visit(m)) return;
      if (v + 1 < pat.count) step_odometer(m, pat, digits, f.order());
    }
  }
}

BigInt count_subspaces_if(const Field& f, std::size_t ambient_dim,
                          std::size_t sub_dim,
                          const std::function<bool(const Matrix&)>& pred,
                          const EnumerationOptions& opts) {
  EnumerationPlan plan = make_enumeration_plan(f, ambient_dim, sub_dim);
  if (plan.total > BigInt(opts.budget)) {
    throw BudgetExceededError("subspace enumeration exceeds the visit budget");
  }

  struct Task {
    std::size_t pattern;
    std::uint64_t begin, end;
  };
  constexpr std::uint64_t kChunk = 1 << 16;
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < plan.patterns.size(); ++pi) {
    std::uint64_t total = plan.patterns[pi].count;
    for (std::uint64_t b = 0; b < total; b += kChunk) {
      tasks.push_back({pi, b, std::min(total, b + kChunk)});
    }
  }

  std::vector<std::uint64_t> tally(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    Matrix m(f, sub_dim, ambient_dim);
    for (;;) {
      std::size_t ti = next.fetch_add(1);
      if (ti >= tasks.size()) return;
      const Task& t = tasks[ti];
      const auto& pat = plan.patterns[t.pattern];
      fill_skeleton(m, pat);
      std::vector<Fe> digits(pat.free_slots.size(), 0);
      seek_odometer(m, pat, digits, t.begin, f.order());
      std::uint64_t hits = 0;
      for (std::uint64_t v = t.begin; v < t.end; ++v) {
        if (pred(m)) ++hits;
        if (v + 1 < t.end) step_odometer(m, pat, digits, f.order());
      }
      tally[ti] = hits;
    }
  };

  unsigned workers = std::max(1u, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  BigInt total = 0;
  for (auto h : tally) total += h;
  return total;
}

std::vector<Subspace> enumerate_subspaces(const Field& f,
                                          std::size_t ambient_dim,
                                          std::size_t sub_dim,
                                          std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(
      f, ambient_dim, sub_dim,
      [&](const Matrix& m) {
        out.push_back(Subspace::span(m));
        return true;
      },
      budget);
  return out;
}

// ---------------------------------------------------------------------------
// form predicates

bool is_isotropic_basis(const QBicForm& form, const Matrix& rows) {
  // B^(q)T A B = 0, computed entrywise with early exit
  const Field& f = form.field();
  const Matrix& a = form.gram();
  const std::size_t k = rows.rows(), n = rows.cols();
  const unsigned q = form.q();
  for (std::size_t i = 0; i < k; ++i) {
    // w = row_i^(q) A
    Vec w(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      Fe ui = rows.at(i, t);
      if (ui == 0) continue;
      Fe uiq = f.pow(ui, q);
      for (std::size_t j = 0; j < n; ++j) {
        w[j] = f.add(w[j], f.mul(uiq, a.at(t, j)));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      Fe acc = 0;
      for (std::size_t t = 0; t < n; ++t) {
        acc = f.add(acc, f.mul(w[t], rows.at(j, t)));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

bool is_isotropic(const QBicForm& form, const Subspace& U) {
  if (U.ambient_dim() != form.dim()) {
    throw DimensionMismatchError("subspace does not live in the form's space");
  }
  if (U.dim() == 0) return true;
  return is_isotropic_basis(form, U.basis());
}

Field extension_field_for(const QBicForm& form, unsigned s) {
  if (s < 1) throw ParameterOutOfRangeError("extension exponent s must be >= 1");
  const Field& base = form.field();
  unsigned p = base.characteristic();
  // base order = q^2 * (its own tower); target order = (base order)^s
  return Field(p, base.degree() * s);
}

BigInt fano_count(const QBicForm& form, unsigned r, unsigned s,
                  const EnumerationOptions& opts) {
  if (s == 1) {
    return count_subspaces_if(
        form.field(), form.dim(), r + 1,
        [&](const Matrix& m) { return is_isotropic_basis(form, m); }, opts);
  }
  Field big = extension_field_for(form, s);
  Embedding e = embed(form.field(), big);
  QBicForm lifted = form.base_change(e);
  return count_subspaces_if(
      big, lifted.dim(), r + 1,
      [&](const Matrix& m) { return is_isotropic_basis(lifted, m); }, opts);
}

bool is_hermitian_subspace(const QBicForm& form, const Subspace& U) {
  const Matrix& phi = form.phi_matrix();  // throws SingularFormError if needed
  if (U.dim() == 0) return true;
  std::vector<Vec> images;
  images.reserve(U.dim());
  for (std::size_t i = 0; i < U.dim(); ++i) {
    images.push_back(phi.apply(frob_vec(form.field(), U.basis().row(i), form.q_squared())));
  }
  Subspace img = Subspace::span(Matrix::from_rows(form.field(), images));
  return img == U;
}

BigInt hermitian_fano_count(const QBicForm& form, unsigned k,
                            const EnumerationOptions& opts) {
  const Matrix& phi = form.phi_matrix();
  const Field& f = form.field();
  const unsigned qq = form.q_squared();
  return count_subspaces_if(
      f, form.dim(), k + 1,
      [&](const Matrix& m) {
        if (!is_isotropic_basis(form, m)) return false;
        std::vector<Vec> images;
        images.reserve(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
          images.push_back(phi.apply(frob_vec(f, m.row(i), qq)));
        }
        Matrix img = Matrix::from_rows(f, images);
        img.rref();
        return img.drop_zero_rows() == m;
      },
      opts);
}

bool filtration_member(const QBicForm& form, const Vec& v, unsigned k) {
  if (is_zero_vec(v)) throw ZeroVectorError("filtration membership of the zero vector");
  Vec w = v;
  for (unsigned i = 0; i <= k; ++i) {
    if (form.evaluate(w, v) != 0) return false;
    if (i < k) w = form.phi_apply(w);
  }
  return true;
}

BigInt filtration_count(const QBicForm& form, unsigned k, unsigned s,
                        const EnumerationOptions& opts) {
  auto count_over = [&](const QBicForm& f) {
    return count_subspaces_if(
        f.field(), f.dim(), 1,
        [&](const Matrix& m) { return filtration_member(f, m.row(0), k); }, opts);
  };
  if (s == 1) {
    form.phi_matrix();  // surface SingularFormError before enumerating
    return count_over(form);
  }
  Field big = extension_field_for(form, s);
  Embedding e = embed(form.field(), big);
  QBicForm lifted = form.base_change(e);
  lifted.phi_matrix();
  return count_over(lifted);
}

Subspace cyclic_span(const QBicForm& form, const Vec& v, unsigned k) {
  if (is_zero_vec(v)) throw ZeroVectorError("cyclic span of the zero vector");
  std::vector<Vec> rows;
  Vec w = v;
  for (unsigned i = 0; i <= k; ++i) {
    rows.push_back(w);
    if (i < k) w = form.phi_apply(w);
  }
  return Subspace::span(Matrix::from_rows(form.field(), rows));
}

bool is_cyclic_plane(const QBicForm& form, const Subspace& U) {
  const Matrix& phi = form.phi_matrix();
  if (U.dim() <= 1) return true;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < U.dim(); ++i) {
    images.push_back(phi.apply(frob_vec(form.field(), U.basis().row(i), form.q_squared())));
  }
  Subspace img = Subspace::span(Matrix::from_rows(form.field(), images));
  return U.intersection_dim(img) + 1 >= U.dim();
}

BigInt hypersurface_enumerated_count(const QBicForm& form, unsigned s,
                                     const EnumerationOptions& opts) {
  auto count_over = [&](const QBicForm& f) {
    return count_subspaces_if(
        f.field(), f.dim(), 1,
        [&](const Matrix& m) {
          Vec v = m.row(0);
          return f.evaluate(v, v) == 0;
        },
        opts);
  };
  if (s == 1) return count_over(form);
  Field big = extension_field_for(form, s);
  Embedding e = embed(form.field(), big);
  QBicForm lifted = form.base_change(e);
  return count_over(lifted);
}

BigInt hermitian_point_count_enumerated(const QBicForm& form, unsigned s,
                                        const EnumerationOptions& opts) {
  auto count_over = [&](const QBicForm& f) {
    return count_subspaces_if(
        f.field(), f.dim(), 1,
        [&](const Matrix& m) {
          Vec v = m.row(0);
          return f.evaluate(v, v) == 0 && f.is_hermitian_point(v);
        },
        opts);
  };
  if (s == 1) {
    form.phi_matrix();
    return count_over(form);
  }
  Field big = extension_field_for(form, s);
  Embedding e = embed(form.field(), big);
  QBicForm lifted = form.base_change(e);
  lifted.phi_matrix();
  return count_over(lifted);
}

}  // namespace qbic
