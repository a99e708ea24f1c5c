#ifndef DSRATE_MATRIX_HPP
#define DSRATE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dsrate {

/// Dense real matrix, row-major. Small and value-semantic; all the
/// tables in this library are at most a few hundred rows or columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Matrix transposed() const;

  bool same_shape(const Matrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Thin singular value decomposition m = left · diag(singular_values) · right^T.
/// Singular values are non-increasing; both vector blocks have orthonormal
/// columns. Signs are fixed so that each left vector's largest-magnitude
/// entry (lowest index on ties) is positive, which makes the decomposition
/// byte-deterministic.
struct SvdResult {
  std::vector<double> singular_values;
  Matrix left_vectors;   // rows(m) x min(rows, cols)
  Matrix right_vectors;  // cols(m) x min(rows, cols)
};

/// One-sided Jacobi SVD. Throws InvalidInput on empty or non-finite input.
SvdResult svd(const Matrix& m);

/// Returns D_r^{-1/2} · m · D_c^{-1/2} for diagonal weights given as vectors.
/// Throws DegenerateWeight if any weight is zero or negative.
Matrix scale_rows_cols(const Matrix& m, std::span<const double> row_weights,
                       std::span<const double> col_weights);

}  // namespace dsrate

#endif  // DSRATE_MATRIX_HPP
