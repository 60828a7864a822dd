#pragma once

#include <cstddef>
#include <vector>

#include "vmrank/gaussian_rational.hpp"

namespace vmrank {

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  // Throws InputError unless entries.size() == rows * cols.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<GaussianRational>& entries() const { return entries_; }

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  bool is_symmetric() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

// Rank over Q(i) by Gaussian elimination. The pivot in each column is the
// first nonzero entry among the rows not yet used; the pivot row is scaled
// to 1 before clearing the rows below it.
std::size_t rank(const ExactMatrix& m);

}  // namespace vmrank
