#ifndef DSRATE_VARIANTS_HPP
#define DSRATE_VARIANTS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dsrate/engine.hpp"
#include "dsrate/recode.hpp"

namespace dsrate {

/// The analysis pipelines. DS1 ranks the ratings per respondent and
/// row-doubles; DS1Dominance is the equivalent dominance-matrix route with
/// fixed weights; DS2 jointly ranks ratings and category boundaries; DS3
/// row-doubles the shifted counts directly; CAr column-doubles them.
enum class Variant { DS1, DS1Dominance, DS2, DS3, CAr };

/// Maps the CLI spellings ds1, ds1e, ds2, ds3, car. Throws InvalidInput.
Variant variant_from_flag(std::string_view flag);
std::string_view variant_flag(Variant v);

struct VariantConfig {
  Variant variant = Variant::DS3;
  std::size_t k = 2;
  bool drop_degenerate = false;
};

/// One coordinate set (objects or individuals) of a variant run.
/// `optimal_scaling` marks the side whose standard coordinates are the
/// optimal scaling values: objects for the DS variants, individuals for CAr.
struct CoordinateView {
  std::vector<std::string> labels;
  Matrix standard;
  Matrix principal;
  bool optimal_scaling = false;
};

struct VariantResult {
  ScalingSolution solution;
  std::vector<RecodedMatrix> recodings;  // intermediate chain, in order
  CoordinateView objects_view;
  CoordinateView individuals_view;  // first n rows only when row-doubled
  std::vector<std::string> dropped;
  VariantConfig config;
  int q = 0;
  bool row_doubled = false;  // solution rows n..2n-1 mirror rows 0..n-1
};

VariantResult run_ds1(const RatingMatrix& r, const VariantConfig& cfg = {});
VariantResult run_ds1_dominance(const RatingMatrix& r, const VariantConfig& cfg = {});
VariantResult run_ds2(const RatingMatrix& r, const VariantConfig& cfg = {});
VariantResult run_ds3(const RatingMatrix& r, const VariantConfig& cfg = {});
VariantResult run_car(const RatingMatrix& r, const VariantConfig& cfg = {});

/// Dispatches on cfg.variant.
VariantResult run_variant(const RatingMatrix& r, const VariantConfig& cfg);

/// Inferred mean rating of one object in a column-doubled solution, read
/// off the doubled-pair axis: the origin divides the segment from the "-"
/// to the "+" point at parameter t = c+ / (c+ + c-), which on a 1..q scale
/// is the rating 1 + (q-1) t. Equals the arithmetic column mean exactly.
struct MeanRating {
  std::string object;
  double t;     // position of the origin along the "-" to "+" segment
  double mean;  // 1 + (q-1) * t
};

/// Per-object mean ratings of a CAr result. Throws InvalidInput for other
/// variants.
std::vector<MeanRating> estimate_mean_ratings(const VariantResult& res);

}  // namespace dsrate

#endif  // DSRATE_VARIANTS_HPP
