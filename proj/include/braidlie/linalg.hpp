#pragma once

#include <optional>
#include <vector>

#include "braidlie/cyclotomic.hpp"

namespace braidlie {

/// Dense matrix over Q(zeta), for exact kernel and solving work. Rows and
/// columns are whatever the caller indexed; elimination skips zero entries,
/// which keeps the very sparse systems here (convolution solves, Leibniz
/// systems) cheap.
class Matrix {
 public:
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, CycScalar::zero()) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  CycScalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<size_t> rref();

 private:
  size_t rows_, cols_;
  std::vector<CycScalar> data_;
};

/// Basis of {x : A x = 0}, one vector per free column, ascending.
std::vector<std::vector<CycScalar>> kernel_basis(Matrix a);

/// Solves A x = b exactly. Returns nullopt when inconsistent; when the
/// system is underdetermined, `unique` (if given) is set to false and free
/// variables are zero.
std::optional<std::vector<CycScalar>> linear_solve(const Matrix& a,
                                                   const std::vector<CycScalar>& b,
                                                   bool* unique = nullptr);

/// Incrementally maintained row space for exact membership tests.
class Span {
 public:
  explicit Span(size_t dim) : dim_(dim) {}
  /// Returns true if the vector enlarged the span.
  bool add(std::vector<CycScalar> v);
  bool contains(std::vector<CycScalar> v) const;
  size_t rank() const { return rows_.size(); }

 private:
  std::vector<CycScalar> reduce(std::vector<CycScalar> v) const;
  size_t dim_;
  std::vector<std::pair<size_t, std::vector<CycScalar>>> rows_;  // (pivot, row)
};

}  // namespace braidlie
