#include <cmath>
#include <cstddef>
#include <string>

#include <doctest.h>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"
#include "dsrate/plot.hpp"
#include "dsrate/variants.hpp"
#include "helpers.hpp"

using dsrate::BiplotSpec;
using dsrate::CoordinateScaling;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

double point_segment_distance(double px, double py, const dsrate::PairAxis& a) {
  const double dx = a.x_plus - a.x_minus;
  const double dy = a.y_plus - a.y_minus;
  const double len2 = dx * dx + dy * dy;
  const double t = ((px - a.x_minus) * dx + (py - a.y_minus) * dy) / len2;
  const double cx = a.x_minus + t * dx;
  const double cy = a.y_minus + t * dy;
  return std::hypot(px - cx, py - cy);
}

}  // namespace

TEST_CASE("object maps") {
  SUBCASE("ds3 crime map has one point per crime and no axes") {
    const auto res = dsrate::run_ds3(dsrate::builtin("crimes_no_homicide"));
    const auto spec = dsrate::build_object_map(res, CoordinateScaling::Standard);
    REQUIRE(spec.point_sets.size() == 1);
    CHECK(spec.point_sets[0].points.size() == 7);
    CHECK(spec.axes.empty());
    CHECK(spec.mean_markers.empty());
  }
  SUBCASE("car crime map carries doubled points, axes, ticks and means") {
    const auto res = dsrate::run_car(dsrate::builtin("crimes_no_homicide"));
    const auto spec = dsrate::build_object_map(res, CoordinateScaling::Principal);
    REQUIRE(spec.point_sets.size() == 1);
    CHECK(spec.point_sets[0].points.size() == 14);
    CHECK(spec.axes.size() == 7);
    for (const auto& axis : spec.axes) CHECK(axis.ticks == 4);
    CHECK(spec.mean_markers.size() == 7);
    // "+" block filled, "-" block hollow, pairs share a color
    CHECK(spec.point_sets[0].points[0].filled);
    CHECK_FALSE(spec.point_sets[0].points[7].filled);
    CHECK(spec.point_sets[0].points[0].color ==
          spec.point_sets[0].points[7].color);
  }
  SUBCASE("the origin sits on every doubled-pair segment") {
    const auto res = dsrate::run_car(dsrate::builtin("toy"));
    for (const auto scaling :
         {CoordinateScaling::Principal, CoordinateScaling::Standard}) {
      const auto spec = dsrate::build_object_map(res, scaling);
      for (const auto& axis : spec.axes) {
        CHECK(point_segment_distance(0.0, 0.0, axis) < 1e-8);
        CHECK(axis.mean_t > 0.0);
        CHECK(axis.mean_t < 1.0);
      }
    }
  }
}

TEST_CASE("tick and mean-marker geometry") {
  const auto res = dsrate::run_car(dsrate::builtin("toy"));
  const auto spec = dsrate::build_object_map(res, CoordinateScaling::Principal);
  const auto means = dsrate::estimate_mean_ratings(res);

  for (std::size_t j = 0; j < spec.axes.size(); ++j) {
    const auto& axis = spec.axes[j];
    const auto [x1, y1] = dsrate::axis_tick_position(axis, 1);
    CHECK(x1 == axis.x_minus);
    CHECK(y1 == axis.y_minus);
    const auto [xq, yq] = dsrate::axis_tick_position(axis, axis.ticks);
    CHECK(xq == axis.x_plus);
    CHECK(yq == axis.y_plus);
    // equal spacing
    for (int m = 1; m + 2 <= axis.ticks; ++m) {
      const auto [ax, ay] = dsrate::axis_tick_position(axis, m);
      const auto [bx, by] = dsrate::axis_tick_position(axis, m + 1);
      const auto [cx, cy] = dsrate::axis_tick_position(axis, m + 2);
      CHECK(std::abs((bx - ax) - (cx - bx)) < 1e-12);
      CHECK(std::abs((by - ay) - (cy - by)) < 1e-12);
    }
    // the rating read at the marker is the estimated mean
    const auto& marker = spec.mean_markers[j];
    const double rating_at_marker = 1.0 + (axis.ticks - 1) * marker.t;
    CHECK(std::abs(rating_at_marker - means[j].mean) < 1e-10);
    CHECK(std::abs(marker.x - (axis.x_minus + marker.t * (axis.x_plus - axis.x_minus))) < 1e-14);
  }
}

TEST_CASE("individual maps") {
  const auto ds3 = dsrate::run_ds3(dsrate::builtin("crimes_no_homicide"));
  const auto spec = dsrate::build_individual_map(ds3, CoordinateScaling::Principal);
  REQUIRE(spec.point_sets.size() == 1);
  CHECK(spec.point_sets[0].points.size() == 17);  // mirrored block excluded
  CHECK(spec.point_sets[0].points[0].label == "ind_1");

  const auto car = dsrate::run_car(dsrate::builtin("crimes_no_homicide"));
  const auto spec2 = dsrate::build_individual_map(car, CoordinateScaling::Standard);
  CHECK(spec2.point_sets[0].points.size() == 17);
}

TEST_CASE("biplots") {
  const auto ds3 = dsrate::run_ds3(dsrate::builtin("crimes_no_homicide"));
  const auto spec = dsrate::build_biplot(ds3);
  REQUIRE(spec.point_sets.size() == 2);
  CHECK(spec.point_sets[0].role == dsrate::PointRole::Objects);
  CHECK(spec.point_sets[0].scaling == CoordinateScaling::Standard);
  CHECK(spec.point_sets[0].points.size() == 7);
  CHECK(spec.point_sets[1].role == dsrate::PointRole::Individuals);
  CHECK(spec.point_sets[1].scaling == CoordinateScaling::Principal);
  CHECK(spec.point_sets[1].points.size() == 17);

  const auto car = dsrate::run_car(dsrate::builtin("crimes_no_homicide"));
  const auto spec2 = dsrate::build_biplot(car);
  CHECK(spec2.point_sets[0].points.size() == 14);
  CHECK(spec2.point_sets[1].points.size() == 17);
  for (const auto& set : spec2.point_sets)
    for (const auto& pt : set.points) {
      CHECK(std::isfinite(pt.x));
      CHECK(std::isfinite(pt.y));
    }
}

TEST_CASE("one dimension is not enough to plot") {
  dsrate::VariantConfig cfg;
  cfg.k = 1;
  const auto res = dsrate::run_ds3(dsrate::builtin("toy"), cfg);
  CHECK_THROWS_AS(dsrate::build_object_map(res, CoordinateScaling::Standard),
                  dsrate::NeedTwoDimensions);
  CHECK_THROWS_AS(dsrate::build_individual_map(res, CoordinateScaling::Standard),
                  dsrate::NeedTwoDimensions);
  CHECK_THROWS_AS(dsrate::build_biplot(res), dsrate::NeedTwoDimensions);
}

TEST_CASE("svg rendering") {
  const auto res = dsrate::run_car(dsrate::builtin("crimes_no_homicide"));
  const auto spec = dsrate::build_object_map(res, CoordinateScaling::Principal);
  const auto svg = dsrate::render_svg(spec);

  SUBCASE("element counts follow the spec contents") {
    CHECK(count_occurrences(svg, "<circle") == 14);
    CHECK(count_occurrences(svg, "<polyline") == 7);
    CHECK(count_occurrences(svg, "class=\"tick\"") == 28);
    CHECK(count_occurrences(svg, "class=\"mean\"") == 7);
    CHECK(count_occurrences(svg, "<text") == 14);
    CHECK(count_occurrences(svg, "class=\"origin\"") == 2);
  }
  SUBCASE("rendering is deterministic") {
    CHECK(svg == dsrate::render_svg(spec));
  }
  SUBCASE("points-only maps have no axis furniture") {
    const auto ds3 = dsrate::run_ds3(dsrate::builtin("crimes_no_homicide"));
    const auto map = dsrate::build_object_map(ds3, CoordinateScaling::Standard);
    const auto plain = dsrate::render_svg(map);
    CHECK(count_occurrences(plain, "<circle") == 7);
    CHECK(count_occurrences(plain, "<polyline") == 0);
  }
}

TEST_CASE("equal aspect ratio") {
  BiplotSpec spec;
  spec.show_origin = false;
  dsrate::PointSet set{dsrate::PointRole::Objects, CoordinateScaling::Standard, {}};
  set.points.push_back({"o", 0.0, 0.0, 0, true});
  set.points.push_back({"x", 1.0, 0.0, 1, true});
  set.points.push_back({"y", 0.0, 1.0, 2, true});
  set.points.push_back({"far", 5.0, 0.0, 3, true});  // stretch x only
  spec.point_sets.push_back(set);
  const auto svg = dsrate::render_svg(spec);

  // pull cx/cy back out of the circle elements
  std::vector<std::pair<double, double>> pts;
  std::size_t pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    const auto cx = svg.find("cx=\"", pos) + 4;
    const auto cy = svg.find("cy=\"", pos) + 4;
    pts.emplace_back(std::stod(svg.substr(cx)), std::stod(svg.substr(cy)));
    pos = cy;
  }
  REQUIRE(pts.size() == 4);
  const double unit_x = std::abs(pts[1].first - pts[0].first);
  const double unit_y = std::abs(pts[2].second - pts[0].second);
  CHECK(unit_x == doctest::Approx(unit_y).epsilon(1e-9));
}

TEST_CASE("svg files are written atomically and identically") {
  const auto res = dsrate::run_car(dsrate::builtin("toy"));
  const auto spec = dsrate::build_object_map(res, CoordinateScaling::Principal);
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "dsrate_plot_a.svg").string();
  const auto b = (dir / "dsrate_plot_b.svg").string();
  dsrate::emit_svg(spec, a);
  dsrate::emit_svg(spec, b);
  CHECK(testutil::read_file(a) == testutil::read_file(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
