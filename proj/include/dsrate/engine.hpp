#ifndef DSRATE_ENGINE_HPP
#define DSRATE_ENGINE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsrate/matrix.hpp"
#include "dsrate/recode.hpp"

namespace dsrate {

enum class WeightMode { MarginDerived, FixedDiagonal };
enum class Centering { MarginCentering, NoCentering };

/// Diagonal row/column weights and the grand total used by solve().
/// MarginDerived weights are the margins of the analyzed matrix and go
/// with margin centering; FixedDiagonal carries the constant weights of
/// the dominance path (p(p-1) per row, n(p-1) per column) and no centering.
struct WeightModel {
  WeightMode mode = WeightMode::MarginDerived;
  std::vector<double> row_weights;
  std::vector<double> col_weights;
  double total = 0.0;
  Centering centering = Centering::MarginCentering;
};

/// Margin weights of a non-negative recoded matrix. Throws DegenerateRow /
/// DegenerateColumn naming every zero-margin label.
WeightModel derive_weights(const RecodedMatrix& f);

/// The constant weights prescribed for the dominance matrix, whose own
/// margins are zero and unusable.
WeightModel fixed_dominance_weights(std::size_t n, std::size_t p);

/// Row and column scores of one weighted-SVD run.
///
/// Standard coordinates X, Y satisfy X^T D_r X = Y^T D_c Y = I_k;
/// principal coordinates are G = X Lambda_k and H = Y Lambda_k. The
/// singular value spectrum is kept in full; `explained` holds the squared
/// proportion per dimension over all nonzero singular values.
struct ScalingSolution {
  std::vector<double> singular_values;
  Matrix row_standard;   // X, rows x k
  Matrix col_standard;   // Y, cols x k
  Matrix row_principal;  // G
  Matrix col_principal;  // H
  std::vector<double> explained;
  std::vector<double> cumulative_explained;
  std::size_t k = 0;
  WeightModel weights;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

/// Weighted SVD of `f` under the weight model: with margin centering the
/// decomposed matrix is D_r^{-1/2} (F - r c^T / s) D_c^{-1/2}, without it
/// D_r^{-1/2} F D_c^{-1/2}. Throws RankExceeded when k is larger than the
/// numerical rank (singular values below 1e-10 x max(sigma_max, 1) count
/// as zero).
ScalingSolution solve(const Matrix& f, const WeightModel& w, std::size_t k,
                      std::vector<std::string> row_labels = {},
                      std::vector<std::string> col_labels = {});

ScalingSolution solve(const RecodedMatrix& f, const WeightModel& w, std::size_t k);

/// Per-dimension and cumulative explained-variance proportions. Throws
/// DegenerateSolution if every singular value is zero.
std::pair<std::vector<double>, std::vector<double>> explained_variance(
    const ScalingSolution& sol);

}  // namespace dsrate

#endif  // DSRATE_ENGINE_HPP
