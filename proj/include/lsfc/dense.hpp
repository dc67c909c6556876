#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lsfc {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  DenseMatrix transposed() const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix& operator*=(double s);
  std::vector<double> operator*(std::span<const double> v) const;

  double trace() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j belongs to values[j]; empty unless requested
};

/// Full eigen-decomposition of a symmetric matrix: Householder reduction to
/// tridiagonal form followed by implicit-shift QL.
SymmetricEigen symmetric_eigen(const DenseMatrix& a, bool want_vectors);

}  // namespace lsfc
