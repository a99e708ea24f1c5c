#include "dsrate/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"

namespace dsrate {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                          "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

const char* palette(int color) {
  if (color < 0) return "#000000";
  return kPalette[color % kPaletteSize];
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void require_two_dims(const VariantResult& res) {
  if (res.solution.k < 2)
    throw NeedTwoDimensions("plotting needs a solution with k >= 2, got k = " +
                            std::to_string(res.solution.k));
}

const Matrix& pick(const CoordinateView& view, CoordinateScaling scaling) {
  return scaling == CoordinateScaling::Standard ? view.standard : view.principal;
}

PointSet object_points(const VariantResult& res, CoordinateScaling scaling) {
  PointSet set{PointRole::Objects, scaling, {}};
  const Matrix& coords = pick(res.objects_view, scaling);
  const auto& labels = res.objects_view.labels;
  const bool doubled = res.config.variant == Variant::CAr;
  const std::size_t base = doubled ? labels.size() / 2 : labels.size();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    PlotPoint pt;
    pt.label = labels[j];
    pt.x = coords(j, 0);
    pt.y = coords(j, 1);
    pt.color = static_cast<int>(j % base);
    pt.filled = !doubled || j < base;  // "-" block drawn hollow
    set.points.push_back(std::move(pt));
  }
  return set;
}

PointSet individual_points(const VariantResult& res, CoordinateScaling scaling) {
  PointSet set{PointRole::Individuals, scaling, {}};
  const Matrix& coords = pick(res.individuals_view, scaling);
  for (std::size_t i = 0; i < res.individuals_view.labels.size(); ++i) {
    set.points.push_back(
        {res.individuals_view.labels[i], coords(i, 0), coords(i, 1), -1, true});
  }
  return set;
}

void add_pair_axes(BiplotSpec& spec, const VariantResult& res,
                   CoordinateScaling scaling) {
  const Matrix& coords = pick(res.objects_view, scaling);
  const std::size_t p = res.objects_view.labels.size() / 2;
  const auto means = estimate_mean_ratings(res);
  for (std::size_t j = 0; j < p; ++j) {
    PairAxis axis;
    axis.object = means[j].object;
    axis.color = static_cast<int>(j);
    axis.x_plus = coords(j, 0);
    axis.y_plus = coords(j, 1);
    axis.x_minus = coords(j + p, 0);
    axis.y_minus = coords(j + p, 1);
    axis.ticks = res.q;
    axis.mean_t = means[j].t;
    spec.axes.push_back(axis);

    MeanMarker marker;
    marker.object = means[j].object;
    marker.t = means[j].t;
    marker.rating = means[j].mean;
    marker.x = axis.x_minus + means[j].t * (axis.x_plus - axis.x_minus);
    marker.y = axis.y_minus + means[j].t * (axis.y_plus - axis.y_minus);
    spec.mean_markers.push_back(marker);
  }
}

struct Transform {
  double scale = 1.0;
  double cx = 0.0, cy = 0.0;  // data-space center
  double ox = 0.0, oy = 0.0;  // screen-space center
  double sx(double x) const { return ox + (x - cx) * scale; }
  double sy(double y) const { return oy - (y - cy) * scale; }
};

Transform fit_transform(const BiplotSpec& spec) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = !spec.show_origin;  // origin participates in the bounds
  auto grow = [&](double x, double y) {
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  };
  for (const auto& set : spec.point_sets)
    for (const auto& pt : set.points) grow(pt.x, pt.y);
  for (const auto& axis : spec.axes) {
    grow(axis.x_minus, axis.y_minus);
    grow(axis.x_plus, axis.y_plus);
  }

  const double margin = 48.0;
  double xrange = xmax - xmin;
  double yrange = ymax - ymin;
  if (xrange <= 0.0) xrange = 1.0;
  if (yrange <= 0.0) yrange = 1.0;
  Transform t;
  t.scale = std::min((spec.width - 2.0 * margin) / xrange,
                     (spec.height - 2.0 * margin) / yrange);
  t.cx = (xmin + xmax) / 2.0;
  t.cy = (ymin + ymax) / 2.0;
  t.ox = spec.width / 2.0;
  t.oy = spec.height / 2.0;
  return t;
}

}  // namespace

std::pair<double, double> axis_tick_position(const PairAxis& axis, int m) {
  if (m == axis.ticks) return {axis.x_plus, axis.y_plus};
  const double u = static_cast<double>(m - 1) / static_cast<double>(axis.ticks - 1);
  return {axis.x_minus + u * (axis.x_plus - axis.x_minus),
          axis.y_minus + u * (axis.y_plus - axis.y_minus)};
}

BiplotSpec build_object_map(const VariantResult& res, CoordinateScaling scaling) {
  require_two_dims(res);
  BiplotSpec spec;
  spec.point_sets.push_back(object_points(res, scaling));
  if (res.config.variant == Variant::CAr) add_pair_axes(spec, res, scaling);
  return spec;
}

BiplotSpec build_individual_map(const VariantResult& res,
                                CoordinateScaling scaling) {
  require_two_dims(res);
  BiplotSpec spec;
  spec.point_sets.push_back(individual_points(res, scaling));
  return spec;
}

BiplotSpec build_biplot(const VariantResult& res) {
  require_two_dims(res);
  BiplotSpec spec;
  spec.point_sets.push_back(object_points(res, CoordinateScaling::Standard));
  spec.point_sets.push_back(
      individual_points(res, CoordinateScaling::Principal));
  if (res.config.variant == Variant::CAr)
    add_pair_axes(spec, res, CoordinateScaling::Standard);
  return spec;
}

std::string render_svg(const BiplotSpec& spec) {
  const Transform t = fit_transform(spec);
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(spec.width) + "\" height=\"" + fmt(spec.height) +
         "\" viewBox=\"0 0 " + fmt(spec.width) + " " + fmt(spec.height) + "\">\n";

  if (spec.show_origin) {
    const double x0 = t.sx(0.0), y0 = t.sy(0.0);
    svg += "<line class=\"origin\" x1=\"0\" y1=\"" + fmt(y0) + "\" x2=\"" +
           fmt(spec.width) + "\" y2=\"" + fmt(y0) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg += "<line class=\"origin\" x1=\"" + fmt(x0) + "\" y1=\"0\" x2=\"" +
           fmt(x0) + "\" y2=\"" + fmt(spec.height) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  for (const auto& axis : spec.axes) {
    svg += "<polyline class=\"axis\" points=\"" + fmt(t.sx(axis.x_minus)) + "," +
           fmt(t.sy(axis.y_minus)) + " " + fmt(t.sx(axis.x_plus)) + "," +
           fmt(t.sy(axis.y_plus)) + "\" fill=\"none\" stroke=\"" +
           palette(axis.color) + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& axis : spec.axes) {
    // tick direction: unit normal of the segment in screen space
    const double dx = t.sx(axis.x_plus) - t.sx(axis.x_minus);
    const double dy = t.sy(axis.y_plus) - t.sy(axis.y_minus);
    const double len = std::hypot(dx, dy);
    const double nx = len > 0.0 ? -dy / len : 0.0;
    const double ny = len > 0.0 ? dx / len : 1.0;
    for (int m = 1; m <= axis.ticks; ++m) {
      const auto [px, py] = axis_tick_position(axis, m);
      const double sx = t.sx(px), sy = t.sy(py);
      svg += "<line class=\"tick\" x1=\"" + fmt(sx - 3.0 * nx) + "\" y1=\"" +
             fmt(sy - 3.0 * ny) + "\" x2=\"" + fmt(sx + 3.0 * nx) + "\" y2=\"" +
             fmt(sy + 3.0 * ny) + "\" stroke=\"" + palette(axis.color) +
             "\" stroke-width=\"1\"/>\n";
    }
  }
  for (const auto& marker : spec.mean_markers) {
    const double sx = t.sx(marker.x), sy = t.sy(marker.y);
    svg += "<path class=\"mean\" d=\"M " + fmt(sx - 4.0) + " " + fmt(sy) +
           " L " + fmt(sx + 4.0) + " " + fmt(sy) + " M " + fmt(sx) + " " +
           fmt(sy - 4.0) + " L " + fmt(sx) + " " + fmt(sy + 4.0) +
           "\" stroke=\"#333333\" stroke-width=\"1\" fill=\"none\"/>\n";
  }
  for (const auto& set : spec.point_sets) {
    for (const auto& pt : set.points) {
      const std::string color = palette(pt.color);
      svg += "<circle class=\"pt\" cx=\"" + fmt(t.sx(pt.x)) + "\" cy=\"" +
             fmt(t.sy(pt.y)) + "\" r=\"3.5\" ";
      if (pt.filled)
        svg += "fill=\"" + color + "\" stroke=\"none\"/>\n";
      else
        svg += "fill=\"#ffffff\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& set : spec.point_sets) {
    for (const auto& pt : set.points) {
      svg += "<text class=\"lbl\" x=\"" + fmt(t.sx(pt.x) + 5.0) + "\" y=\"" +
             fmt(t.sy(pt.y) - 5.0) + "\" font-family=\"sans-serif\" "
             "font-size=\"11\">" + xml_escape(pt.label) + "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg(const BiplotSpec& spec, const std::string& path) {
  write_file_atomic(path, render_svg(spec));
}

}  // namespace dsrate
