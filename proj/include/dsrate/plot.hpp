#ifndef DSRATE_PLOT_HPP
#define DSRATE_PLOT_HPP

#include <string>
#include <utility>
#include <vector>

#include "dsrate/variants.hpp"

namespace dsrate {

enum class PointRole { Objects, Individuals };
enum class CoordinateScaling { Standard, Principal };

struct PlotPoint {
  std::string label;
  double x = 0.0, y = 0.0;
  int color = -1;       // palette index; -1 draws black
  bool filled = true;   // "-" endpoints are hollow
};

struct PointSet {
  PointRole role;
  CoordinateScaling scaling;
  std::vector<PlotPoint> points;
};

/// The segment joining one object's reversed-scale point to its
/// original-scale point. It carries `ticks` = q equally spaced rating
/// marks; the origin lies on it at parameter mean_t.
struct PairAxis {
  std::string object;
  int color = 0;
  double x_minus = 0.0, y_minus = 0.0;
  double x_plus = 0.0, y_plus = 0.0;
  int ticks = 0;
  double mean_t = 0.0;
};

struct MeanMarker {
  std::string object;
  double x = 0.0, y = 0.0;
  double rating = 0.0;  // value read off the tick scale at the marker
  double t = 0.0;
};

struct BiplotSpec {
  std::vector<PointSet> point_sets;
  std::vector<PairAxis> axes;          // column-doubled variants only
  std::vector<MeanMarker> mean_markers;
  double width = 720.0;
  double height = 720.0;
  bool show_origin = true;
};

/// Position of rating tick m (1..q) on an axis: the "-" endpoint carries
/// rating 1, the "+" endpoint rating q, and the marks are equally spaced.
std::pair<double, double> axis_tick_position(const PairAxis& axis, int m);

/// First two dimensions of the object-side coordinates; for column-doubled
/// results this adds the doubled-pair axes, rating ticks and inferred-mean
/// markers. Throws NeedTwoDimensions when the solution has k < 2.
BiplotSpec build_object_map(const VariantResult& res, CoordinateScaling scaling);

/// Individual points only; the mirrored block of row-doubled solutions is
/// not drawn.
BiplotSpec build_individual_map(const VariantResult& res, CoordinateScaling scaling);

/// Joint map with objects in standard and individuals in principal
/// coordinates.
BiplotSpec build_biplot(const VariantResult& res);

/// Renders deterministic SVG 1.1: fixed element order, 6-decimal
/// coordinates, equal axis scaling.
std::string render_svg(const BiplotSpec& spec);

void emit_svg(const BiplotSpec& spec, const std::string& path);

}  // namespace dsrate

#endif  // DSRATE_PLOT_HPP
