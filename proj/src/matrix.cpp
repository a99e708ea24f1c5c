#include "dsrate/matrix.hpp"

#include <cmath>
#include <string>

#include "dsrate/errors.hpp"

namespace dsrate {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) {
      throw InvalidInput("ragged initializer: row " + std::to_string(i + 1) +
                         " has " + std::to_string(row.size()) + " entries");
    }
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix scale_rows_cols(const Matrix& m, std::span<const double> row_weights,
                       std::span<const double> col_weights) {
  if (row_weights.size() != m.rows() || col_weights.size() != m.cols()) {
    throw InvalidInput("weight lengths (" + std::to_string(row_weights.size()) +
                       ", " + std::to_string(col_weights.size()) +
                       ") do not match matrix shape " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  for (std::size_t i = 0; i < row_weights.size(); ++i) {
    if (!(row_weights[i] > 0.0))
      throw DegenerateWeight("row weight " + std::to_string(i + 1) +
                             " is not positive");
  }
  for (std::size_t j = 0; j < col_weights.size(); ++j) {
    if (!(col_weights[j] > 0.0))
      throw DegenerateWeight("column weight " + std::to_string(j + 1) +
                             " is not positive");
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double ri = 1.0 / std::sqrt(row_weights[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j) * ri / std::sqrt(col_weights[j]);
    }
  }
  return out;
}

namespace detail {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out;
}

}  // namespace detail

}  // namespace dsrate
