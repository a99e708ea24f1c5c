#include "dsrate/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsrate/errors.hpp"

namespace dsrate {

namespace {

constexpr double kRankTolerance = 1e-10;

double rank_threshold(const std::vector<double>& sigma) {
  const double largest = sigma.empty() ? 0.0 : sigma.front();
  return kRankTolerance * std::max(largest, 1.0);
}

}  // namespace

WeightModel derive_weights(const RecodedMatrix& f) {
  if (f.kind == RecodeKind::Dominance)
    throw InvalidInput("margin weights are undefined for a dominance matrix");
  WeightModel w;
  w.mode = WeightMode::MarginDerived;
  w.centering = Centering::MarginCentering;
  w.row_weights.assign(f.data.rows(), 0.0);
  w.col_weights.assign(f.data.cols(), 0.0);
  for (std::size_t i = 0; i < f.data.rows(); ++i) {
    for (std::size_t j = 0; j < f.data.cols(); ++j) {
      const double v = f.data(i, j);
      w.row_weights[i] += v;
      w.col_weights[j] += v;
      w.total += v;
    }
  }
  std::vector<std::string> offenders;
  for (std::size_t i = 0; i < w.row_weights.size(); ++i)
    if (w.row_weights[i] <= 0.0) offenders.push_back(f.row_labels[i]);
  if (!offenders.empty()) throw DegenerateRow(offenders);
  for (std::size_t j = 0; j < w.col_weights.size(); ++j)
    if (w.col_weights[j] <= 0.0) offenders.push_back(f.col_labels[j]);
  if (!offenders.empty()) throw DegenerateColumn(offenders);
  return w;
}

WeightModel fixed_dominance_weights(std::size_t n, std::size_t p) {
  WeightModel w;
  w.mode = WeightMode::FixedDiagonal;
  w.centering = Centering::NoCentering;
  const double row = static_cast<double>(p) * static_cast<double>(p - 1);
  const double col = static_cast<double>(n) * static_cast<double>(p - 1);
  w.row_weights.assign(n, row);
  w.col_weights.assign(p, col);
  w.total = static_cast<double>(n) * row;  // n * p(p-1), the dominance mass
  return w;
}

ScalingSolution solve(const Matrix& f, const WeightModel& w, std::size_t k,
                      std::vector<std::string> row_labels,
                      std::vector<std::string> col_labels) {
  if (k < 1) throw InvalidInput("dimensionality k must be at least 1");
  if (w.row_weights.size() != f.rows() || w.col_weights.size() != f.cols())
    throw InvalidInput("weight model does not match matrix shape");

  Matrix centered = f;
  if (w.centering == Centering::MarginCentering) {
    if (!(w.total > 0.0)) throw DegenerateWeight("total mass is not positive");
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j)
        centered(i, j) -= w.row_weights[i] * w.col_weights[j] / w.total;
  }

  const Matrix scaled = scale_rows_cols(centered, w.row_weights, w.col_weights);
  const SvdResult dec = svd(scaled);

  const double threshold = rank_threshold(dec.singular_values);
  std::size_t rank = 0;
  while (rank < dec.singular_values.size() &&
         dec.singular_values[rank] > threshold)
    ++rank;
  if (k > rank) throw RankExceeded(rank, k);

  ScalingSolution sol;
  sol.k = k;
  sol.weights = w;
  sol.singular_values = dec.singular_values;
  sol.row_labels = std::move(row_labels);
  sol.col_labels = std::move(col_labels);

  sol.row_standard = Matrix(f.rows(), k);
  sol.row_principal = Matrix(f.rows(), k);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    const double d = 1.0 / std::sqrt(w.row_weights[i]);
    for (std::size_t m = 0; m < k; ++m) {
      sol.row_standard(i, m) = dec.left_vectors(i, m) * d;
      sol.row_principal(i, m) = sol.row_standard(i, m) * dec.singular_values[m];
    }
  }
  sol.col_standard = Matrix(f.cols(), k);
  sol.col_principal = Matrix(f.cols(), k);
  for (std::size_t j = 0; j < f.cols(); ++j) {
    const double d = 1.0 / std::sqrt(w.col_weights[j]);
    for (std::size_t m = 0; m < k; ++m) {
      sol.col_standard(j, m) = dec.right_vectors(j, m) * d;
      sol.col_principal(j, m) = sol.col_standard(j, m) * dec.singular_values[m];
    }
  }

  double total = 0.0;
  for (std::size_t m = 0; m < rank; ++m)
    total += dec.singular_values[m] * dec.singular_values[m];
  sol.explained.assign(dec.singular_values.size(), 0.0);
  sol.cumulative_explained.assign(dec.singular_values.size(), 0.0);
  double running = 0.0;
  for (std::size_t m = 0; m < dec.singular_values.size(); ++m) {
    if (m < rank)
      sol.explained[m] = dec.singular_values[m] * dec.singular_values[m] / total;
    running += sol.explained[m];
    sol.cumulative_explained[m] = running;
  }
  return sol;
}

ScalingSolution solve(const RecodedMatrix& f, const WeightModel& w, std::size_t k) {
  return solve(f.data, w, k, f.row_labels, f.col_labels);
}

std::pair<std::vector<double>, std::vector<double>> explained_variance(
    const ScalingSolution& sol) {
  const double threshold = rank_threshold(sol.singular_values);
  bool any = false;
  for (double s : sol.singular_values)
    if (s > threshold) any = true;
  if (!any)
    throw DegenerateSolution("every singular value is zero");
  return {sol.explained, sol.cumulative_explained};
}

}  // namespace dsrate
