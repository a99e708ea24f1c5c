#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"
#include "dsrate/plot.hpp"
#include "dsrate/variants.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> to_numpy(const dsrate::Matrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
  return out;
}

py::array_t<int> ratings_to_numpy(const dsrate::RatingMatrix& r) {
  py::array_t<int> out({r.n, r.p});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.p; ++j) buf(i, j) = r.at(i, j);
  return out;
}

dsrate::RatingMatrix make_from_array(
    py::array_t<std::int64_t, py::array::c_style | py::array::forcecast> data,
    int q, std::vector<std::string> row_labels,
    std::vector<std::string> col_labels, std::string name) {
  if (data.ndim() != 2)
    throw dsrate::InvalidInput("ratings must be a 2-D array");
  const auto n = static_cast<std::size_t>(data.shape(0));
  const auto p = static_cast<std::size_t>(data.shape(1));
  std::vector<int> ratings;
  ratings.reserve(n * p);
  auto buf = data.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j)
      ratings.push_back(static_cast<int>(buf(i, j)));
  return dsrate::make_rating_matrix(n, p, q, std::move(ratings),
                                    std::move(row_labels),
                                    std::move(col_labels), std::move(name));
}

dsrate::RecodedMatrix row_doubled(const dsrate::RatingMatrix& r,
                                  const std::string& recoding) {
  if (recoding == "counts") {
    auto t = dsrate::shift_counts(r);
    auto s = dsrate::reverse_counts(t);
    return dsrate::double_rows(t, s);
  }
  if (recoding == "ranks") {
    auto [tstar, sstar] = dsrate::rank_rows(r);
    return dsrate::double_rows(tstar, sstar);
  }
  if (recoding == "successive") {
    auto [tstar, sstar] = dsrate::scd_to_rank_pair(dsrate::successive_categories(r));
    return dsrate::double_rows(tstar, sstar);
  }
  throw dsrate::InvalidInput("recoding must be counts, ranks or successive");
}

void write_svg(const dsrate::VariantResult& res, const std::string& path,
               const std::string& kind, const std::string& scaling) {
  auto pick = [&](const dsrate::CoordinateView& view) {
    if (scaling == "standard") return dsrate::CoordinateScaling::Standard;
    if (scaling == "principal") return dsrate::CoordinateScaling::Principal;
    return view.optimal_scaling ? dsrate::CoordinateScaling::Standard
                                : dsrate::CoordinateScaling::Principal;
  };
  dsrate::BiplotSpec spec;
  if (kind == "objects")
    spec = dsrate::build_object_map(res, pick(res.objects_view));
  else if (kind == "individuals")
    spec = dsrate::build_individual_map(res, pick(res.individuals_view));
  else if (kind == "biplot")
    spec = dsrate::build_biplot(res);
  else
    throw dsrate::InvalidInput("kind must be objects, individuals or biplot");
  dsrate::emit_svg(spec, path);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dual scaling and correspondence analysis of rating data";

  static py::exception<dsrate::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dsrate::Error& e) {
      const std::string msg = e.name() + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<dsrate::RatingMatrix>(m, "RatingMatrix")
      .def_readonly("n", &dsrate::RatingMatrix::n)
      .def_readonly("p", &dsrate::RatingMatrix::p)
      .def_readonly("q", &dsrate::RatingMatrix::q)
      .def_readonly("row_labels", &dsrate::RatingMatrix::row_labels)
      .def_readonly("col_labels", &dsrate::RatingMatrix::col_labels)
      .def_property_readonly("ratings", &ratings_to_numpy)
      .def("__repr__", [](const dsrate::RatingMatrix& r) {
        return "<RatingMatrix " + std::to_string(r.n) + "x" +
               std::to_string(r.p) + " q=" + std::to_string(r.q) + ">";
      });

  py::class_<dsrate::RecodedMatrix>(m, "Recoded")
      .def_property_readonly("kind",
                             [](const dsrate::RecodedMatrix& r) {
                               return std::string(dsrate::to_string(r.kind));
                             })
      .def_property_readonly("data",
                             [](const dsrate::RecodedMatrix& r) {
                               return to_numpy(r.data);
                             })
      .def_readonly("row_labels", &dsrate::RecodedMatrix::row_labels)
      .def_readonly("col_labels", &dsrate::RecodedMatrix::col_labels);

  py::class_<dsrate::CoordinateView>(m, "View")
      .def_readonly("labels", &dsrate::CoordinateView::labels)
      .def_readonly("optimal_scaling", &dsrate::CoordinateView::optimal_scaling)
      .def_property_readonly("standard",
                             [](const dsrate::CoordinateView& v) {
                               return to_numpy(v.standard);
                             })
      .def_property_readonly("principal", [](const dsrate::CoordinateView& v) {
        return to_numpy(v.principal);
      });

  py::class_<dsrate::MeanRating>(m, "MeanRating")
      .def_readonly("object", &dsrate::MeanRating::object)
      .def_readonly("t", &dsrate::MeanRating::t)
      .def_readonly("mean", &dsrate::MeanRating::mean)
      .def("__repr__", [](const dsrate::MeanRating& v) {
        return "<MeanRating " + v.object + " " + dsrate::format_real(v.mean) + ">";
      });

  py::class_<dsrate::VariantResult>(m, "Result")
      .def_property_readonly("variant",
                             [](const dsrate::VariantResult& r) {
                               return std::string(
                                   dsrate::variant_flag(r.config.variant));
                             })
      .def_property_readonly("k",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.k;
                             })
      .def_readonly("q", &dsrate::VariantResult::q)
      .def_readonly("dropped", &dsrate::VariantResult::dropped)
      .def_readonly("row_doubled", &dsrate::VariantResult::row_doubled)
      .def_readonly("objects", &dsrate::VariantResult::objects_view)
      .def_readonly("individuals", &dsrate::VariantResult::individuals_view)
      .def_property_readonly("recodings",
                             [](const dsrate::VariantResult& r) {
                               std::vector<std::string> kinds;
                               for (const auto& rec : r.recodings)
                                 kinds.emplace_back(dsrate::to_string(rec.kind));
                               return kinds;
                             })
      .def_property_readonly("singular_values",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.singular_values;
                             })
      .def_property_readonly("explained",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.explained;
                             })
      .def_property_readonly("cumulative_explained",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.cumulative_explained;
                             })
      .def_property_readonly("row_labels",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.row_labels;
                             })
      .def_property_readonly("col_labels",
                             [](const dsrate::VariantResult& r) {
                               return r.solution.col_labels;
                             })
      .def_property_readonly("rows_standard",
                             [](const dsrate::VariantResult& r) {
                               return to_numpy(r.solution.row_standard);
                             })
      .def_property_readonly("rows_principal",
                             [](const dsrate::VariantResult& r) {
                               return to_numpy(r.solution.row_principal);
                             })
      .def_property_readonly("cols_standard",
                             [](const dsrate::VariantResult& r) {
                               return to_numpy(r.solution.col_standard);
                             })
      .def_property_readonly("cols_principal",
                             [](const dsrate::VariantResult& r) {
                               return to_numpy(r.solution.col_principal);
                             });

  m.def("rating_matrix", &make_from_array, py::arg("ratings"), py::arg("q"),
        py::arg("row_labels") = std::vector<std::string>{},
        py::arg("col_labels") = std::vector<std::string>{},
        py::arg("name") = std::string{},
        "Build a RatingMatrix from an integer array on a 1..q scale");
  m.def("builtin", &dsrate::builtin, py::arg("name"));
  m.def("builtin_names", &dsrate::builtin_names);
  m.def(
      "load_csv",
      [](const std::string& path, int q, bool has_header,
         const std::optional<std::string>& id_column) {
        return dsrate::load_csv(path, q, has_header, id_column);
      },
      py::arg("path"), py::arg("q"), py::arg("has_header") = false,
      py::arg("id_column") = std::nullopt);
  m.def("reverse_scale", &dsrate::reverse_scale, py::arg("ratings"));

  m.def(
      "shifted_counts",
      [](const dsrate::RatingMatrix& r) {
        auto t = dsrate::shift_counts(r);
        auto s = dsrate::reverse_counts(t);
        return py::make_tuple(std::move(t), std::move(s));
      },
      py::arg("ratings"), "Returns (T, S): shifted and reversed-scale counts");
  m.def(
      "rank_order",
      [](const dsrate::RatingMatrix& r) {
        auto [tstar, sstar] = dsrate::rank_rows(r);
        return py::make_tuple(std::move(tstar), std::move(sstar));
      },
      py::arg("ratings"), "Returns (T*, S*): midrank re-codings per row");
  m.def(
      "dominance_matrix",
      [](const dsrate::RatingMatrix& r) {
        auto [tstar, sstar] = dsrate::rank_rows(r);
        return dsrate::dominance(tstar, sstar);
      },
      py::arg("ratings"));
  m.def("successive_categories", &dsrate::successive_categories,
        py::arg("ratings"));
  m.def("double_rows", &row_doubled, py::arg("ratings"),
        py::arg("recoding") = "counts",
        "Row-wise doubled matrix; recoding is counts, ranks or successive");
  m.def(
      "double_columns",
      [](const dsrate::RatingMatrix& r) {
        auto t = dsrate::shift_counts(r);
        auto s = dsrate::reverse_counts(t);
        return dsrate::double_columns(t, s);
      },
      py::arg("ratings"));

  m.def(
      "run",
      [](const std::string& variant, const dsrate::RatingMatrix& r,
         std::size_t k, bool drop_degenerate) {
        dsrate::VariantConfig cfg{dsrate::variant_from_flag(variant), k,
                                  drop_degenerate};
        return dsrate::run_variant(r, cfg);
      },
      py::arg("variant"), py::arg("ratings"), py::arg("k") = 2,
      py::arg("drop_degenerate") = false,
      "Run one of the variants: ds1, ds1e, ds2, ds3, car");
  m.def("estimate_mean_ratings", &dsrate::estimate_mean_ratings,
        py::arg("result"));
  m.def(
      "serialize",
      [](const dsrate::VariantResult& res, const std::string& format) {
        return dsrate::serialize_result(res, format == "csv"
                                                 ? dsrate::OutputFormat::Csv
                                                 : dsrate::OutputFormat::Json);
      },
      py::arg("result"), py::arg("format") = "json");
  m.def("write_svg", &write_svg, py::arg("result"), py::arg("path"),
        py::arg("kind") = "objects", py::arg("scaling") = "auto");

  m.attr("__version__") = "0.1.0";
}
