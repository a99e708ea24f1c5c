#ifndef DSRATE_TESTS_HELPERS_HPP
#define DSRATE_TESTS_HELPERS_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dsrate/matrix.hpp"

namespace testutil {

inline std::string test_dir() { return DSRATE_TEST_DIR; }

inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(test_dir() + "/fixtures/oracle.json");
    nlohmann::json j;
    in >> j;
    return j;
  }();
  return data;
}

inline dsrate::Matrix to_matrix(const nlohmann::json& rows) {
  dsrate::Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j].get<double>();
  return m;
}

inline double max_abs_diff(const dsrate::Matrix& a, const dsrate::Matrix& b) {
  if (!a.same_shape(b)) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

// Largest residual of A vs B when each column of B may be negated as a
// whole; the sign is read off B's largest-magnitude entry per column.
inline double diff_up_to_dimension_signs(const dsrate::Matrix& a,
                                         const dsrate::Matrix& b) {
  if (!a.same_shape(b)) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t m = 0; m < a.cols(); ++m) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (std::abs(b(i, m)) > best) {
        best = std::abs(b(i, m));
        arg = i;
      }
    const double sign = (a(arg, m) < 0.0) == (b(arg, m) < 0.0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      worst = std::max(worst, std::abs(a(i, m) - sign * b(i, m)));
  }
  return worst;
}

inline dsrate::Matrix random_matrix(std::mt19937& rng, std::size_t rows,
                                    std::size_t cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  dsrate::Matrix m(rows, cols);
  for (double& v : m.data()) v = dist(rng);
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace testutil

#endif  // DSRATE_TESTS_HELPERS_HPP
