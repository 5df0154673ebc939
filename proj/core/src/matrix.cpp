#include "qbic/matrix.hpp"

#include <algorithm>

namespace qbic {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::mul(const Matrix& other) const {
  Matrix r(*f_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Fe aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r.at(i, j) = f_->add(r.at(i, j), f_->mul(aik, other.at(k, j)));
      }
    }
  }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Fe acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = f_->add(acc, f_->mul(at(i, j), v[j]));
    }
    r[i] = acc;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::frob_entries(std::uint64_t s) const {
  Matrix r(*f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_->frobenius(a_[k], s);
  return r;
}

Matrix Matrix::frob_root_entries(std::uint64_t s) const {
  Matrix r(*f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_->frobenius_root(a_[k], s);
  return r;
}

Matrix Matrix::scaled(Fe c) const {
  Matrix r(*f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_->mul(a_[k], c);
  return r;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (at(i, c) != 0) { sel = i; break; }
    }
    if (sel == rows_) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    }
    Fe piv_inv = f_->inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f_->mul(at(r, j), piv_inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Fe factor = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) {
        at(i, j) = f_->sub(at(i, j), f_->mul(factor, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols_, 0);
    v[fc] = f_->one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f_->neg(m.at(r, fc));
    }
    basis.push_back(std::move(v));
  }
  Matrix k = Matrix::from_rows(*f_, basis);
  if (k.rows() > 0) k.rref();
  if (k.rows() == 0) k = Matrix(*f_, 0, cols_);
  return k;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(*f_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = f_->one();
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) {
    return std::nullopt;
  }
  return aug.take_columns(cols_, cols_);
}

Matrix Matrix::stacked_on(const Matrix& below) const {
  Matrix r(*f_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
  return r;
}

Matrix Matrix::take_columns(std::size_t first, std::size_t count) const {
  Matrix r(*f_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
  return r;
}

Matrix Matrix::drop_zero_rows() const {
  std::vector<Vec> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec v = row(i);
    if (!is_zero_vec(v)) keep.push_back(std::move(v));
  }
  Matrix r = Matrix::from_rows(*f_, keep);
  if (keep.empty()) r = Matrix(*f_, 0, cols_);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Fe x) { return x == 0; });
}

Fe dot(const Field& f, const Vec& a, const Vec& b) {
  Fe acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

Vec frob_vec(const Field& f, const Vec& v, std::uint64_t s) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.frobenius(v[i], s);
  return r;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fe x) { return x == 0; });
}

bool colinear(const Field& f, const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  std::size_t lead = u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) { lead = i; break; }
  }
  if (lead == u.size()) return is_zero_vec(v);
  if (v[lead] == 0) return false;
  Fe c = f.div(v[lead], u[lead]);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] != f.mul(c, u[i])) return false;
  }
  return true;
}

}  // namespace qbic
