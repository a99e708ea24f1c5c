#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"
#include "dsrate/plot.hpp"
#include "dsrate/variants.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

struct DataArgs {
  std::string data;
  int scale_max = 0;
  bool has_header = false;
  std::string id_column;
};

void add_data_options(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.data,
                  "ratings source: a CSV path or builtin:<name>")
      ->required();
  cmd->add_option("--scale-max", args.scale_max,
                  "scale maximum q for CSV input (ratings are 1..q)");
  cmd->add_flag("--has-header", args.has_header,
                "first CSV row holds object names");
  cmd->add_option("--id-column", args.id_column,
                  "header column holding respondent identifiers");
}

dsrate::RatingMatrix load_ratings(const DataArgs& args) {
  constexpr std::string_view prefix = "builtin:";
  if (args.data.rfind(prefix, 0) == 0)
    return dsrate::builtin(args.data.substr(prefix.size()));
  if (args.scale_max < 2)
    throw CLI::ValidationError("--scale-max",
                               "CSV input needs --scale-max of at least 2");
  std::optional<std::string> id;
  if (!args.id_column.empty()) id = args.id_column;
  return dsrate::load_csv(args.data, args.scale_max,
                          args.has_header || id.has_value(), id);
}

dsrate::CoordinateScaling default_scaling(const dsrate::CoordinateView& view) {
  // the optimal-scaling side is shown in standard coordinates, the
  // other side in principal coordinates
  return view.optimal_scaling ? dsrate::CoordinateScaling::Standard
                              : dsrate::CoordinateScaling::Principal;
}

dsrate::BiplotSpec build_plot(const dsrate::VariantResult& res,
                              const std::string& kind,
                              const std::string& scaling_flag) {
  auto pick = [&](const dsrate::CoordinateView& view) {
    if (scaling_flag == "standard") return dsrate::CoordinateScaling::Standard;
    if (scaling_flag == "principal") return dsrate::CoordinateScaling::Principal;
    return default_scaling(view);
  };
  if (kind == "objects")
    return dsrate::build_object_map(res, pick(res.objects_view));
  if (kind == "individuals")
    return dsrate::build_individual_map(res, pick(res.individuals_view));
  return dsrate::build_biplot(res);
}

void print_summary(const dsrate::VariantResult& res) {
  const auto& cum = res.solution.cumulative_explained;
  const double value = res.solution.k <= cum.size() ? cum[res.solution.k - 1] : 0.0;
  std::printf("%s k=%zu cumulative explained %.0f%%\n",
              std::string(dsrate::variant_flag(res.config.variant)).c_str(),
              res.solution.k, value * 100.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual scaling and correspondence analysis of rating data"};
  app.require_subcommand(1);

  DataArgs analyze_data, recode_data, plot_data;
  std::string variant = "ds3", format = "json", out, svg_path;
  std::string svg_kind = "objects", plot_kind = "objects", plot_scaling = "auto";
  std::size_t dims = 2;
  bool drop_degenerate = false;

  CLI::App* analyze = app.add_subcommand("analyze", "run one analysis variant");
  add_data_options(analyze, analyze_data);
  analyze->add_option("--variant", variant, "ds1, ds1e, ds2, ds3 or car")
      ->check(CLI::IsMember({"ds1", "ds1e", "ds2", "ds3", "car"}));
  analyze->add_option("--dims", dims, "retained dimensionality (default 2)")
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--drop-degenerate", drop_degenerate,
                    "drop zero-margin respondents/objects instead of failing");
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", out, "result file")->required();
  analyze->add_option("--svg", svg_path, "also write a map to this SVG file");
  analyze->add_option("--svg-kind", svg_kind, "which map the SVG shows")
      ->check(CLI::IsMember({"objects", "individuals", "biplot"}));

  CLI::App* recode = app.add_subcommand("recode", "write one re-coded matrix as CSV");
  add_data_options(recode, recode_data);
  std::string recode_kind;
  recode->add_option("--kind", recode_kind,
                     "t, s, fc, fr, rank, dominance or scd")
      ->required()
      ->check(CLI::IsMember({"t", "s", "fc", "fr", "rank", "dominance", "scd"}));
  std::string recode_out;
  recode->add_option("--out", recode_out, "output CSV file")->required();

  CLI::App* plot = app.add_subcommand("plot", "write an SVG map for one variant");
  add_data_options(plot, plot_data);
  plot->add_option("--variant", variant, "ds1, ds1e, ds2, ds3 or car")
      ->check(CLI::IsMember({"ds1", "ds1e", "ds2", "ds3", "car"}));
  plot->add_option("--dims", dims)->check(CLI::PositiveNumber);
  plot->add_flag("--drop-degenerate", drop_degenerate);
  plot->add_option("--kind", plot_kind, "objects, individuals or biplot")
      ->check(CLI::IsMember({"objects", "individuals", "biplot"}));
  plot->add_option("--scaling", plot_scaling, "coordinate scaling")
      ->check(CLI::IsMember({"auto", "standard", "principal"}));
  std::string plot_out;
  plot->add_option("--out", plot_out, "output SVG file")->required();

  CLI::App* datasets = app.add_subcommand("datasets", "list builtin datasets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      const dsrate::RatingMatrix ratings = load_ratings(analyze_data);
      dsrate::VariantConfig cfg{dsrate::variant_from_flag(variant), dims,
                                drop_degenerate};
      const dsrate::VariantResult res = dsrate::run_variant(ratings, cfg);
      const auto bytes = dsrate::serialize_result(
          res, format == "csv" ? dsrate::OutputFormat::Csv
                               : dsrate::OutputFormat::Json);
      std::string svg;
      if (!svg_path.empty())
        svg = dsrate::render_svg(build_plot(res, svg_kind, "auto"));
      dsrate::write_file_atomic(out, bytes);
      if (!svg_path.empty()) dsrate::write_file_atomic(svg_path, svg);
      print_summary(res);
      return kExitOk;
    }
    if (*recode) {
      const dsrate::RatingMatrix ratings = load_ratings(recode_data);
      dsrate::RecodedMatrix matrix = [&] {
        using dsrate::shift_counts;
        if (recode_kind == "t") return shift_counts(ratings);
        if (recode_kind == "s") return dsrate::reverse_counts(shift_counts(ratings));
        if (recode_kind == "fc") {
          auto t = shift_counts(ratings);
          return dsrate::double_columns(t, dsrate::reverse_counts(t));
        }
        if (recode_kind == "fr") {
          auto [tstar, sstar] = dsrate::rank_rows(ratings);
          return dsrate::double_rows(tstar, sstar);
        }
        if (recode_kind == "rank") return dsrate::rank_rows(ratings).first;
        if (recode_kind == "dominance") {
          auto [tstar, sstar] = dsrate::rank_rows(ratings);
          return dsrate::dominance(tstar, sstar);
        }
        return dsrate::successive_categories(ratings);
      }();
      dsrate::write_file_atomic(recode_out, dsrate::recoded_to_csv(matrix));
      return kExitOk;
    }
    if (*plot) {
      const dsrate::RatingMatrix ratings = load_ratings(plot_data);
      dsrate::VariantConfig cfg{dsrate::variant_from_flag(variant), dims,
                                drop_degenerate};
      const dsrate::VariantResult res = dsrate::run_variant(ratings, cfg);
      const std::string svg =
          dsrate::render_svg(build_plot(res, plot_kind, plot_scaling));
      dsrate::write_file_atomic(plot_out, svg);
      return kExitOk;
    }
    if (*datasets) {
      for (const auto& name : dsrate::builtin_names()) {
        const auto r = dsrate::builtin(name);
        std::printf("%s %zux%zu q=%d\n", name.c_str(), r.n, r.p, r.q);
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const dsrate::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
