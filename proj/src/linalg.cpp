#include "braidlie/linalg.hpp"

#include <algorithm>

#include "braidlie/errors.hpp"

namespace braidlie {

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pr = row;
    while (pr < rows_ && at(pr, col).is_zero()) ++pr;
    if (pr == rows_) continue;
    if (pr != row)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pr, c));
    CycScalar inv = at(row, col).inverse();
    for (size_t c = col; c < cols_; ++c)
      if (!at(row, c).is_zero()) at(row, c) = inv * at(row, c);
    for (size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      CycScalar f = at(r, col);
      for (size_t c = col; c < cols_; ++c) {
        if (at(row, c).is_zero()) continue;
        at(r, c) = at(r, c) - f * at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<CycScalar>> kernel_basis(Matrix a) {
  auto pivots = a.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<CycScalar>> basis;
  for (size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycScalar> v(a.cols(), CycScalar::zero());
    v[free] = CycScalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<CycScalar>> linear_solve(const Matrix& a,
                                                   const std::vector<CycScalar>& b,
                                                   bool* unique) {
  if (b.size() != a.rows()) throw Error("linear_solve: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  if (unique) *unique = pivots.size() == a.cols();
  std::vector<CycScalar> x(a.cols(), CycScalar::zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::vector<CycScalar> Span::reduce(std::vector<CycScalar> v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    CycScalar f = v[pivot];
    for (size_t c = pivot; c < dim_; ++c)
      if (!row[c].is_zero()) v[c] = v[c] - f * row[c];
  }
  return v;
}

bool Span::add(std::vector<CycScalar> v) {
  if (v.size() != dim_) throw Error("span: vector dimension mismatch");
  v = reduce(std::move(v));
  size_t pivot = dim_;
  for (size_t c = 0; c < dim_; ++c)
    if (!v[c].is_zero()) {
      pivot = c;
      break;
    }
  if (pivot == dim_) return false;
  CycScalar inv = v[pivot].inverse();
  for (size_t c = pivot; c < dim_; ++c)
    if (!v[c].is_zero()) v[c] = inv * v[c];
  rows_.emplace_back(pivot, std::move(v));
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return true;
}

bool Span::contains(std::vector<CycScalar> v) const {
  if (v.size() != dim_) throw Error("span: vector dimension mismatch");
  v = reduce(std::move(v));
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace braidlie
