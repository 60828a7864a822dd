#include "vmrank/exact_matrix.hpp"

#include <string>
#include <utility>

#include "vmrank/errors.hpp"

namespace vmrank {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InputError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                     std::to_string(entries_.size()) + " entries");
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InputError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b(k, c).is_zero()) continue;
        out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<GaussianRational> work = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> GaussianRational& { return work[r * cols + c]; };

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && at(found, c).is_zero()) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(found, j), at(pivot_row, j));
    }
    const GaussianRational scale = at(pivot_row, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!at(pivot_row, j).is_zero()) at(pivot_row, j) *= scale;
    }
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (at(r, c).is_zero()) continue;
      const GaussianRational factor = at(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        const GaussianRational& p = at(pivot_row, j);
        if (!p.is_zero()) at(r, j) -= factor * p;
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace vmrank
