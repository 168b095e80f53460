#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isorel/scalar.hpp"

namespace isorel {

// Dense row-major rational matrix. entries.size() == rows*cols always.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transposed() const;
  Matrix negated() const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  // m * v (v as column vector).
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_skew_symmetric() const;

  Scalar det() const;
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// Unique reduced row-echelon form, zero rows dropped; row space preserved.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// One solution of m x = rhs (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace isorel
