#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qbic/finite_field.hpp"

namespace qbic {

using Vec = std::vector<Fe>;

/// Dense matrix over a table-driven finite field. Row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);

  const Field& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fe& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Fe at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  Matrix mul(const Matrix& other) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  Matrix frob_entries(std::uint64_t s) const;       // entrywise x -> x^s
  Matrix frob_root_entries(std::uint64_t s) const;  // entrywise s-th Frobenius root
  Matrix scaled(Fe c) const;

  // In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  // Basis of the right nullspace {v : Av = 0}, returned as RREF rows.
  Matrix kernel() const;

  std::optional<Matrix> inverse() const;

  Matrix stacked_on(const Matrix& below) const;
  Matrix take_columns(std::size_t first, std::size_t count) const;
  Matrix drop_zero_rows() const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fe> a_;
};

Fe dot(const Field& f, const Vec& a, const Vec& b);
Vec frob_vec(const Field& f, const Vec& v, std::uint64_t s);
bool is_zero_vec(const Vec& v);

// True when u and v span the same line (v nonzero scalar multiple of u).
bool colinear(const Field& f, const Vec& u, const Vec& v);

}  // namespace qbic
