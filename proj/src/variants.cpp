#include "dsrate/variants.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dsrate/errors.hpp"

namespace dsrate {

namespace {

// A centered matrix of rank zero means the data carry no contrast at all;
// report that as a degenerate solution rather than a dimension bound.
ScalingSolution solve_checked(const RecodedMatrix& f, const WeightModel& w,
                              std::size_t k) {
  try {
    return solve(f, w, k);
  } catch (const RankExceeded& e) {
    if (e.actual_rank() == 0)
      throw DegenerateSolution("all singular values are zero: the recoded "
                               "matrix has no variation left after weighting");
    throw;
  }
}

Matrix take_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

CoordinateView object_view(const ScalingSolution& sol, bool optimal) {
  return CoordinateView{sol.col_labels, sol.col_standard, sol.col_principal,
                        optimal};
}

CoordinateView individual_view(const ScalingSolution& sol,
                               const std::vector<std::string>& labels,
                               std::size_t n, bool optimal) {
  return CoordinateView{labels, take_rows(sol.row_standard, n),
                        take_rows(sol.row_principal, n), optimal};
}

// Respondents whose shifted or reversed counts vanish entirely (all
// ratings at 1 or all at q) produce a zero row in the row-doubled matrix.
std::vector<std::size_t> degenerate_respondents(const RatingMatrix& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.n; ++i) {
    bool all_min = true, all_max = true;
    for (std::size_t j = 0; j < r.p; ++j) {
      all_min = all_min && r.at(i, j) == 1;
      all_max = all_max && r.at(i, j) == r.q;
    }
    if (all_min || all_max) out.push_back(i);
  }
  return out;
}

// Objects rated 1 by everyone (zero "+" column) or q by everyone (zero
// "-" column).
std::vector<std::size_t> degenerate_objects(const RatingMatrix& r) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < r.p; ++j) {
    bool all_min = true, all_max = true;
    for (std::size_t i = 0; i < r.n; ++i) {
      all_min = all_min && r.at(i, j) == 1;
      all_max = all_max && r.at(i, j) == r.q;
    }
    if (all_min || all_max) out.push_back(j);
  }
  return out;
}

RatingMatrix drop_respondents(const RatingMatrix& r,
                              const std::vector<std::size_t>& rows) {
  std::vector<int> ratings;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r.n; ++i) {
    if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
    labels.push_back(r.row_labels[i]);
    for (std::size_t j = 0; j < r.p; ++j) ratings.push_back(r.at(i, j));
  }
  return make_rating_matrix(r.n - rows.size(), r.p, r.q, std::move(ratings),
                            std::move(labels), r.col_labels,
                            r.source + ":reduced");
}

RatingMatrix drop_objects(const RatingMatrix& r,
                          const std::vector<std::size_t>& cols) {
  std::vector<int> ratings;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < r.p; ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end())
      labels.push_back(r.col_labels[j]);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.p; ++j)
      if (std::find(cols.begin(), cols.end(), j) == cols.end())
        ratings.push_back(r.at(i, j));
  return make_rating_matrix(r.n, r.p - cols.size(), r.q, std::move(ratings),
                            r.row_labels, std::move(labels),
                            r.source + ":reduced");
}

}  // namespace

Variant variant_from_flag(std::string_view flag) {
  if (flag == "ds1") return Variant::DS1;
  if (flag == "ds1e") return Variant::DS1Dominance;
  if (flag == "ds2") return Variant::DS2;
  if (flag == "ds3") return Variant::DS3;
  if (flag == "car") return Variant::CAr;
  throw InvalidInput("unknown variant '" + std::string(flag) +
                     "' (expected ds1, ds1e, ds2, ds3 or car)");
}

std::string_view variant_flag(Variant v) {
  switch (v) {
    case Variant::DS1: return "ds1";
    case Variant::DS1Dominance: return "ds1e";
    case Variant::DS2: return "ds2";
    case Variant::DS3: return "ds3";
    case Variant::CAr: return "car";
  }
  return "?";
}

VariantResult run_ds1(const RatingMatrix& r, const VariantConfig& cfg) {
  auto [tstar, sstar] = rank_rows(r);
  RecodedMatrix doubled = double_rows(tstar, sstar);
  const WeightModel w = derive_weights(doubled);

  VariantResult res;
  res.solution = solve_checked(doubled, w, cfg.k);
  res.objects_view = object_view(res.solution, true);
  res.individuals_view = individual_view(res.solution, r.row_labels, r.n, false);
  res.recodings = {std::move(tstar), std::move(sstar), std::move(doubled)};
  res.config = cfg;
  res.config.variant = Variant::DS1;
  res.q = r.q;
  res.row_doubled = true;
  return res;
}

VariantResult run_ds1_dominance(const RatingMatrix& r, const VariantConfig& cfg) {
  auto [tstar, sstar] = rank_rows(r);
  RecodedMatrix dom = dominance(tstar, sstar);
  const WeightModel w = fixed_dominance_weights(r.n, r.p);

  VariantResult res;
  res.solution = solve_checked(dom, w, cfg.k);
  res.objects_view = object_view(res.solution, true);
  res.individuals_view = individual_view(res.solution, r.row_labels, r.n, false);
  res.recodings = {std::move(tstar), std::move(sstar), std::move(dom)};
  res.config = cfg;
  res.config.variant = Variant::DS1Dominance;
  res.q = r.q;
  res.row_doubled = false;
  return res;
}

VariantResult run_ds2(const RatingMatrix& r, const VariantConfig& cfg) {
  RecodedMatrix scd = successive_categories(r);
  auto [tstar, sstar] = scd_to_rank_pair(scd);
  RecodedMatrix doubled = double_rows(tstar, sstar);
  const WeightModel w = derive_weights(doubled);

  VariantResult res;
  res.solution = solve_checked(doubled, w, cfg.k);
  res.objects_view = object_view(res.solution, true);
  res.individuals_view = individual_view(res.solution, r.row_labels, r.n, false);
  res.recodings = {std::move(scd), std::move(tstar), std::move(sstar),
                   std::move(doubled)};
  res.config = cfg;
  res.config.variant = Variant::DS2;
  res.q = r.q;
  res.row_doubled = true;
  return res;
}

VariantResult run_ds3(const RatingMatrix& r, const VariantConfig& cfg) {
  std::vector<std::string> dropped;
  const RatingMatrix* data = &r;
  RatingMatrix reduced;
  if (cfg.drop_degenerate) {
    const auto rows = degenerate_respondents(r);
    if (!rows.empty()) {
      for (std::size_t i : rows) dropped.push_back(r.row_labels[i]);
      reduced = drop_respondents(r, rows);
      data = &reduced;
    }
  }
  RecodedMatrix shifted = shift_counts(*data);
  RecodedMatrix reversed = reverse_counts(shifted);
  RecodedMatrix doubled = double_rows(shifted, reversed);
  const WeightModel w = derive_weights(doubled);

  VariantResult res;
  res.solution = solve_checked(doubled, w, cfg.k);
  res.objects_view = object_view(res.solution, true);
  res.individuals_view =
      individual_view(res.solution, data->row_labels, data->n, false);
  res.recodings = {std::move(shifted), std::move(reversed), std::move(doubled)};
  res.dropped = std::move(dropped);
  res.config = cfg;
  res.config.variant = Variant::DS3;
  res.q = r.q;
  res.row_doubled = true;
  return res;
}

VariantResult run_car(const RatingMatrix& r, const VariantConfig& cfg) {
  std::vector<std::string> dropped;
  const RatingMatrix* data = &r;
  RatingMatrix reduced;
  if (cfg.drop_degenerate) {
    const auto cols = degenerate_objects(r);
    if (!cols.empty()) {
      for (std::size_t j : cols) dropped.push_back(r.col_labels[j]);
      reduced = drop_objects(r, cols);
      data = &reduced;
    }
  }
  RecodedMatrix shifted = shift_counts(*data);
  RecodedMatrix reversed = reverse_counts(shifted);
  RecodedMatrix doubled = double_columns(shifted, reversed);
  const WeightModel w = derive_weights(doubled);

  VariantResult res;
  res.solution = solve_checked(doubled, w, cfg.k);
  res.objects_view = object_view(res.solution, false);
  res.individuals_view =
      individual_view(res.solution, data->row_labels, data->n, true);
  res.recodings = {std::move(shifted), std::move(reversed), std::move(doubled)};
  res.dropped = std::move(dropped);
  res.config = cfg;
  res.config.variant = Variant::CAr;
  res.q = r.q;
  res.row_doubled = false;
  return res;
}

VariantResult run_variant(const RatingMatrix& r, const VariantConfig& cfg) {
  switch (cfg.variant) {
    case Variant::DS1: return run_ds1(r, cfg);
    case Variant::DS1Dominance: return run_ds1_dominance(r, cfg);
    case Variant::DS2: return run_ds2(r, cfg);
    case Variant::DS3: return run_ds3(r, cfg);
    case Variant::CAr: return run_car(r, cfg);
  }
  throw InvalidInput("unknown variant");
}

std::vector<MeanRating> estimate_mean_ratings(const VariantResult& res) {
  if (res.config.variant != Variant::CAr)
    throw InvalidInput("mean-rating estimates require a column-doubled "
                       "(car) result");
  const auto& cw = res.solution.weights.col_weights;
  const std::size_t p = cw.size() / 2;
  std::vector<MeanRating> out;
  out.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    const double plus = cw[j];
    const double minus = cw[j + p];
    const double t = plus / (plus + minus);
    std::string label = res.solution.col_labels[j];
    if (!label.empty() && label.back() == '+') label.pop_back();
    out.push_back({std::move(label), t,
                   1.0 + static_cast<double>(res.q - 1) * t});
  }
  return out;
}

}  // namespace dsrate
