#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "dsrate/errors.hpp"
#include "dsrate/matrix.hpp"

namespace dsrate {

namespace {

// Convergence threshold for one column pair: rotate while
// |<w_i, w_j>| > kOrthTol * ||w_i|| * ||w_j||.
constexpr double kOrthTol = 1e-15;
constexpr int kMaxSweeps = 100;

double column_dot(const Matrix& w, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i) s += w(i, a) * w(i, b);
  return s;
}

void rotate_columns(Matrix& m, std::size_t a, std::size_t b, double cs, double sn) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double x = m(i, a);
    const double y = m(i, b);
    m(i, a) = cs * x - sn * y;
    m(i, b) = sn * x + cs * y;
  }
}

// Cyclic one-sided Jacobi on the columns of w (m x n, m >= n).
// On return the columns of w are mutually orthogonal and w = U' with
// U' = U diag(sigma); v accumulates the right-hand rotations.
void jacobi_orthogonalize(Matrix& w, Matrix& v) {
  const std::size_t n = w.cols();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double a = column_dot(w, i, i);
        const double b = column_dot(w, j, j);
        const double c = column_dot(w, i, j);
        if (a == 0.0 || b == 0.0) continue;
        if (std::abs(c) <= kOrthTol * std::sqrt(a) * std::sqrt(b)) continue;
        const double zeta = (b - a) / (2.0 * c);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate_columns(w, i, j, cs, sn);
        rotate_columns(v, i, j, cs, sn);
        rotated = true;
      }
    }
    if (!rotated) break;
  }
}

// Replaces near-null columns of u with an orthonormal completion drawn
// from the standard basis: per column, the basis vector with the largest
// residual after Gram-Schmidt against everything kept so far.
void complete_null_columns(Matrix& u, const std::vector<std::size_t>& null_cols) {
  const std::size_t m = u.rows();
  auto residual = [&](std::size_t basis, std::size_t skip, std::vector<double>& e) {
    std::fill(e.begin(), e.end(), 0.0);
    e[basis] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < u.cols(); ++k) {
        if (k == skip) continue;
        double proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += e[i] * u(i, k);
        for (std::size_t i = 0; i < m; ++i) e[i] -= proj * u(i, k);
      }
    }
    return std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0));
  };
  std::vector<double> e(m), best_e(m);
  for (std::size_t col : null_cols) {
    double best_norm = -1.0;
    for (std::size_t basis = 0; basis < m; ++basis) {
      const double norm = residual(basis, col, e);
      if (norm > best_norm) {
        best_norm = norm;
        best_e = e;
      }
    }
    for (std::size_t i = 0; i < m; ++i) u(i, col) = best_e[i] / best_norm;
  }
}

void apply_sign_convention(SvdResult& r) {
  for (std::size_t k = 0; k < r.singular_values.size(); ++k) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < r.left_vectors.rows(); ++i) {
      const double mag = std::abs(r.left_vectors(i, k));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (r.left_vectors(arg, k) < 0.0) {
      for (std::size_t i = 0; i < r.left_vectors.rows(); ++i)
        r.left_vectors(i, k) = -r.left_vectors(i, k);
      for (std::size_t i = 0; i < r.right_vectors.rows(); ++i)
        r.right_vectors(i, k) = -r.right_vectors(i, k);
    }
  }
}

}  // namespace

SvdResult svd(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw InvalidInput("svd requires at least one row and one column");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j)))
        throw InvalidInput("non-finite entry at row " + std::to_string(i + 1) +
                           ", column " + std::to_string(j + 1));

  if (m.rows() < m.cols()) {
    SvdResult t = svd(m.transposed());
    std::swap(t.left_vectors, t.right_vectors);
    apply_sign_convention(t);
    return t;
  }

  Matrix w = m;
  Matrix v = Matrix::identity(m.cols());
  jacobi_orthogonalize(w, v);

  const std::size_t n = m.cols();
  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j)
    sigma[j] = std::sqrt(column_dot(w, j, j));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  SvdResult out;
  out.singular_values.resize(n);
  out.left_vectors = Matrix(m.rows(), n);
  out.right_vectors = Matrix(n, n);

  const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
  // Below this a column norm carries no reliable direction; the left
  // vector is rebuilt by completion instead of normalizing noise.
  const double null_tol = sigma_max * 1e-13;

  std::vector<std::size_t> null_cols;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.singular_values[k] = sigma[src];
    for (std::size_t i = 0; i < n; ++i) out.right_vectors(i, k) = v(i, src);
    if (sigma[src] <= null_tol || sigma[src] == 0.0) {
      null_cols.push_back(k);
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.left_vectors(i, k) = w(i, src) / sigma[src];
  }
  complete_null_columns(out.left_vectors, null_cols);
  apply_sign_convention(out);
  return out;
}

}  // namespace dsrate
