#pragma once

#include <cstddef>
#include <vector>

#include "oddsym/ints.hpp"

namespace oddsym {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat block_diag(const IntMat& a, const IntMat& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

  IntMat operator*(const IntMat& other) const;
  IntVec apply(const IntVec& v) const;  // matrix times column vector
  IntMat transposed() const;

  IntMat mod2() const;
  bool is_identity() const;
  bool is_zero() const;
  /// 0/1 matrix with exactly one 1 per row and per column.
  bool is_permutation_matrix() const;
  /// For a permutation matrix: perm[j] = i with entry (i, j) = 1.
  std::vector<std::size_t> permutation() const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const;

  friend bool operator==(const IntMat& a, const IntMat& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

}  // namespace oddsym
