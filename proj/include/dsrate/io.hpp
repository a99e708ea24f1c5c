#ifndef DSRATE_IO_HPP
#define DSRATE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsrate/recode.hpp"
#include "dsrate/variants.hpp"

namespace dsrate {

enum class DatasetSource { BuiltIn, FilePath };

struct DatasetDescriptor {
  std::string name;  // builtin name, or a path when source == FilePath
  DatasetSource source = DatasetSource::FilePath;
  int scale_max = 0;
  bool has_header = false;
  std::optional<std::string> id_column;
};

/// Parses a comma-separated ratings file. With a header row the column
/// names become object labels; `id_column` names the header column that
/// holds respondent identifiers. All data cells must be integers in 1..q.
RatingMatrix load_csv(const std::string& path, int q, bool has_header,
                      const std::optional<std::string>& id_column = {});

/// Bundled datasets: "toy" (4x3 ratings on 1..5), "crimes" (17 respondents
/// rating 8 crimes on 1..4) and "crimes_no_homicide" (the same table
/// without its constant column).
RatingMatrix builtin(const std::string& name);
std::vector<std::string> builtin_names();

RatingMatrix load_dataset(const DatasetDescriptor& d);

enum class OutputFormat { Json, Csv };

/// Serializes a variant result. JSON carries the config echo, spectrum,
/// explained proportions, all four labeled coordinate tables, dropped
/// labels and the recoding chain; CSV carries one row per coordinate
/// record with a `set` discriminator column. Reals are printed with 17
/// significant digits so parsing them back is bit-exact.
std::string serialize_result(const VariantResult& res, OutputFormat format);

std::string ratings_to_csv(const RatingMatrix& r);
std::string recoded_to_csv(const RecodedMatrix& m);

/// Shortest-possible-surprise float formatting: %.17g.
std::string format_real(double v);

/// Writes via a temp file in the same directory, renaming on success, so
/// failed runs never leave a partial output behind.
void write_file_atomic(const std::string& path, std::string_view bytes);

}  // namespace dsrate

#endif  // DSRATE_IO_HPP
