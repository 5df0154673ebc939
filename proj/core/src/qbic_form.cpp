#include "qbic/qbic_form.hpp"

#include <algorithm>
#include <sstream>

#include "qbic/subspace.hpp"

namespace qbic {

unsigned FormType::dimension() const {
  unsigned d = a;
  for (auto [m, b] : blocks) d += m * b;
  return d;
}

unsigned FormType::corank() const {
  unsigned c = 0;
  for (auto [m, b] : blocks) c += b;
  (void)a;
  return c;
}

std::string FormType::str() const {
  std::ostringstream os;
  os << "(" << a << ";";
  bool first = true;
  for (auto [m, b] : blocks) {
    os << (first ? " " : " + ") << "b_" << m << "=" << b;
    first = false;
  }
  if (blocks.empty()) os << " -";
  os << ")";
  return os.str();
}

bool FormType::operator<(const FormType& o) const {
  if (a != o.a) return a < o.a;
  return std::vector<std::pair<unsigned, unsigned>>(blocks.begin(), blocks.end()) <
         std::vector<std::pair<unsigned, unsigned>>(o.blocks.begin(), o.blocks.end());
}

namespace {

void collect_partitions(unsigned n, unsigned max_part,
                        std::map<unsigned, unsigned>& current,
                        std::vector<std::map<unsigned, unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    ++current[part];
    collect_partitions(n - part, part, current, out);
    if (--current[part] == 0) current.erase(part);
  }
}

}  // namespace

std::vector<FormType> all_form_types(unsigned dim) {
  std::vector<FormType> types;
  for (unsigned nil = 0; nil <= dim; ++nil) {
    std::vector<std::map<unsigned, unsigned>> parts;
    std::map<unsigned, unsigned> cur;
    collect_partitions(nil, nil == 0 ? 1 : nil, cur, parts);
    for (auto& p : parts) {
      FormType t;
      t.a = dim - nil;
      t.blocks = p;
      types.push_back(std::move(t));
    }
  }
  std::sort(types.begin(), types.end());
  return types;
}

bool FormProfile::invariants_equal(const FormProfile& o) const {
  return dim == o.dim && rank == o.rank && radical_dim == o.radical_dim &&
         right_chain == o.right_chain && left_chain == o.left_chain &&
         cross_dims == o.cross_dims;
}

QBicForm::QBicForm(const Field& field, unsigned q, Matrix gram)
    : field_(&field), q_(q), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) {
    throw DimensionMismatchError("Gram matrix must be square");
  }
  if (gram_.rows() == 0) throw DimensionMismatchError("empty Gram matrix");
  // q must be a power of the characteristic and the field order a power of q^2
  unsigned p = field.characteristic();
  unsigned t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (t != 1 || q < 2) {
    throw CharacteristicMismatchError("q must be a positive power of char(field)");
  }
  std::uint64_t qq = static_cast<std::uint64_t>(q) * q;
  std::uint64_t ord = field.order();
  while (ord > 1 && ord % qq == 0) ord /= qq;
  if (ord != 1) {
    throw CharacteristicMismatchError("field order must be q^(2s)");
  }
  if (auto inv = gram_.inverse()) {
    phi_ = inv->mul(gram_.frob_entries(q_).transpose());
  }
}

QBicForm QBicForm::fermat(const Field& field, unsigned q, std::size_t dim) {
  return QBicForm(field, q, Matrix::identity(field, dim));
}

bool QBicForm::has_hermitian_gram() const {
  return gram_ == gram_.frob_entries(q_).transpose();
}

QBicForm QBicForm::from_type(const Field& field, unsigned q, const FormType& type) {
  unsigned dim = type.dimension();
  if (dim == 0) throw DimensionMismatchError("type has dimension 0");
  Matrix g(field, dim, dim);
  std::size_t pos = 0;
  for (unsigned i = 0; i < type.a; ++i, ++pos) g.at(pos, pos) = field.one();
  for (auto [m, b] : type.blocks) {
    for (unsigned copy = 0; copy < b; ++copy) {
      for (unsigned i = 0; i + 1 < m; ++i) {
        g.at(pos + i, pos + i + 1) = field.one();
      }
      pos += m;
    }
  }
  return QBicForm(field, q, std::move(g));
}

Fe QBicForm::evaluate(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) {
    throw DimensionMismatchError("vector length does not match the form");
  }
  const Field& f = *field_;
  Fe acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    Fe uiq = f.pow(u[i], q_);
    Fe rowsum = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
      rowsum = f.add(rowsum, f.mul(gram_.at(i, j), v[j]));
    }
    acc = f.add(acc, f.mul(uiq, rowsum));
  }
  return acc;
}

QBicForm QBicForm::restrict_to(const Subspace& U) const {
  if (U.ambient_dim() != dim()) {
    throw DimensionMismatchError("subspace ambient dimension mismatch");
  }
  if (U.dim() == 0) throw DimensionMismatchError("cannot restrict to the zero space");
  const Matrix& rows = U.basis();  // rows are basis vectors
  Matrix g = rows.frob_entries(q_).mul(gram_).mul(rows.transpose());
  return QBicForm(*field_, q_, std::move(g));
}

Subspace QBicForm::right_kernel() const { return Subspace::span(gram_.kernel()); }

Subspace QBicForm::left_kernel() const {
  return Subspace::span(gram_.transpose().kernel());
}

Subspace QBicForm::radical() const {
  // {v : Av = 0} cap {v : A^T v^(q) = 0}; the second set is the q-th
  // Frobenius-root of ker A^T taken entrywise.
  Subspace right = right_kernel();
  Subspace left_descended = left_kernel().frobenius_preimage(q_);
  return right.intersect(left_descended);
}

bool QBicForm::is_smooth() const {
  if (is_zero_form()) throw ZeroFormError("smoothness is undefined for the zero form");
  return phi_.has_value();
}

Subspace QBicForm::singular_locus() const {
  if (is_zero_form()) throw ZeroFormError("singular locus of the zero form");
  return left_kernel();
}

bool QBicForm::is_cone() const { return radical().dim() > 0; }

const Matrix& QBicForm::phi_matrix() const {
  if (!phi_) throw SingularFormError("phi needs a nonsingular Gram matrix");
  return *phi_;
}

Vec QBicForm::phi_apply(const Vec& v) const {
  if (!phi_) throw SingularFormError("phi needs a nonsingular Gram matrix");
  return phi_->apply(frob_vec(*field_, v, q_squared()));
}

Vec QBicForm::phi_iterate(const Vec& v, unsigned times) const {
  Vec r = v;
  for (unsigned i = 0; i < times; ++i) r = phi_apply(r);
  return r;
}

bool QBicForm::is_hermitian_vector(const Vec& v) const {
  if (is_zero_vec(v)) throw ZeroVectorError("Hermitian test on the zero vector");
  return phi_apply(v) == v;
}

bool QBicForm::is_hermitian_point(const Vec& v) const {
  if (is_zero_vec(v)) throw ZeroVectorError("Hermitian test on the zero vector");
  return colinear(*field_, v, phi_apply(v));
}

QBicForm QBicForm::base_change(const Embedding& into) const {
  if (!(into.source() == *field_)) {
    throw NoEmbeddingError("embedding source is not the form's field");
  }
  const Field& big = into.target();
  Matrix g(big, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g.at(i, j) = into(gram_.at(i, j));
  return QBicForm(big, q_, std::move(g));
}

FormProfile QBicForm::kernels() const {
  FormProfile p;
  p.dim = dim();
  p.rank = gram_.rank();
  p.corank = p.dim - p.rank;
  p.radical_dim = radical().dim();
  return p;
}

namespace {

// Semilinear image A'(U) with A'(v) = (A^(q))^T v^(q^2): the span of the
// images of a basis (semilinear maps carry subspaces to subspaces).
Subspace adjoint_twist_image(const QBicForm& form, const Subspace& U) {
  const Field& f = form.field();
  Matrix aqt = form.gram().frob_entries(form.q()).transpose();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < U.dim(); ++i) {
    images.push_back(aqt.apply(frob_vec(f, U.basis().row(i), form.q_squared())));
  }
  if (images.empty()) return Subspace(f, U.ambient_dim());
  return Subspace::span(Matrix::from_rows(f, images));
}

// Image A(U).
Subspace matrix_image(const Matrix& a, const Subspace& U) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < U.dim(); ++i) {
    images.push_back(a.apply(U.basis().row(i)));
  }
  if (images.empty()) return Subspace(a.field(), a.rows());
  return Subspace::span(Matrix::from_rows(a.field(), images));
}

// {v : A'(v) in W} for the q^2-semilinear A' = (A^(q))^T Frob^2: substitute
// v = u^(1/q^2) in the linear condition (A^(q))^T u in W.
Subspace adjoint_twist_preimage(const QBicForm& form, const Subspace& W) {
  Matrix aqt = form.gram().frob_entries(form.q()).transpose();
  return W.preimage_under(aqt).frobenius_preimage(form.q_squared());
}

}  // namespace

// Raw congruence invariants: kernels, the two saturating chains and their
// pairwise intersection dimensions, without candidate matching.
FormProfile form_profile(const QBicForm& form) {
  const Matrix& a = form.gram();

  FormProfile prof = form.kernels();

  // Right chain: Q_1 = ker A, Q_{s+1} = Q_s + A^{-1}(A'(Q_s)).
  std::vector<Subspace> qchain;
  qchain.push_back(form.right_kernel());
  for (;;) {
    const Subspace& cur = qchain.back();
    Subspace next = cur.sum(adjoint_twist_image(form, cur).preimage_under(a));
    if (next.dim() == cur.dim()) break;
    qchain.push_back(std::move(next));
  }

  // Left chain, descended to source coordinates: D_1 = {v : A^T v^(q) = 0},
  // D_{s+1} = D_s + {v : A'(v) in A(D_s)}.
  std::vector<Subspace> dchain;
  dchain.push_back(form.left_kernel().frobenius_preimage(form.q()));
  for (;;) {
    const Subspace& cur = dchain.back();
    Subspace next = cur.sum(adjoint_twist_preimage(form, matrix_image(a, cur)));
    if (next.dim() == cur.dim()) break;
    dchain.push_back(std::move(next));
  }

  const std::size_t len = std::max(qchain.size(), dchain.size());
  auto at = [](const std::vector<Subspace>& chain, std::size_t i) -> const Subspace& {
    return chain[std::min(i, chain.size() - 1)];
  };
  for (std::size_t i = 0; i < len; ++i) {
    prof.right_chain.push_back(at(qchain, i).dim());
    prof.left_chain.push_back(at(dchain, i).dim());
  }
  prof.cross_dims.assign(len, std::vector<std::size_t>(len, 0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      prof.cross_dims[i][j] = at(qchain, i).intersection_dim(at(dchain, j));
    }
  }
  return prof;
}

namespace {

// Pads chains (they are eventually constant) so that profiles computed with
// different stabilization lengths compare consistently.
void pad_profile(FormProfile& p, std::size_t len) {
  while (p.right_chain.size() < len) p.right_chain.push_back(p.right_chain.back());
  while (p.left_chain.size() < len) p.left_chain.push_back(p.left_chain.back());
  std::vector<std::vector<std::size_t>> cross(len, std::vector<std::size_t>(len, 0));
  std::size_t old = p.cross_dims.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      cross[i][j] = p.cross_dims[std::min(i, old - 1)][std::min(j, old - 1)];
    }
  }
  p.cross_dims = std::move(cross);
}

}  // namespace

TypeMatcher::TypeMatcher(const Field& field, unsigned q, unsigned dim)
    : types_(all_form_types(dim)) {
  profiles_.reserve(types_.size());
  for (const auto& t : types_) {
    FormProfile cp = form_profile(QBicForm::from_type(field, q, t));
    pad_len_ = std::max(pad_len_, cp.right_chain.size());
    profiles_.push_back(std::move(cp));
  }
  // chains can lengthen by one more step than any single candidate's when
  // matched against arbitrary forms of the same dimension
  pad_len_ = std::max<std::size_t>(pad_len_, dim + 1);
  for (auto& p : profiles_) pad_profile(p, pad_len_);
}

FormProfile TypeMatcher::classify(const QBicForm& form) const {
  FormProfile prof = form_profile(form);
  pad_profile(prof, std::max(pad_len_, prof.right_chain.size()));
  for (std::size_t i = 0; i < types_.size(); ++i) {
    FormProfile cand = profiles_[i];
    if (cand.right_chain.size() < prof.right_chain.size()) {
      pad_profile(cand, prof.right_chain.size());
    }
    if (prof.invariants_equal(cand)) prof.matches.push_back(types_[i]);
  }
  if (prof.matches.size() == 1) prof.type = prof.matches.front();
  return prof;
}

FormProfile classify_type(const QBicForm& form) {
  TypeMatcher matcher(form.field(), form.q(), static_cast<unsigned>(form.dim()));
  return matcher.classify(form);
}

}  // namespace qbic
