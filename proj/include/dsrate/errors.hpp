#ifndef DSRATE_ERRORS_HPP
#define DSRATE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsrate {

/// Base class for all domain errors. `name()` is the stable error
/// identifier used by the CLI and the Python bindings; `what()` carries
/// the human-readable detail (offending labels, indices, values).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("InvalidInput", msg) {}
};

struct DegenerateWeight : Error {
  explicit DegenerateWeight(const std::string& msg)
      : Error("DegenerateWeight", msg) {}
};

struct MismatchedRecodings : Error {
  explicit MismatchedRecodings(const std::string& msg)
      : Error("MismatchedRecodings", msg) {}
};

namespace detail {
std::string join_labels(const std::vector<std::string>& labels);
}

/// A row of the analyzed matrix sums to zero, so its weight would be
/// singular. Carries every offending row label.
class DegenerateRow : public Error {
 public:
  explicit DegenerateRow(std::vector<std::string> labels)
      : Error("DegenerateRow", "zero row margin: " + detail::join_labels(labels)),
        labels_(std::move(labels)) {}

  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

class DegenerateColumn : public Error {
 public:
  explicit DegenerateColumn(std::vector<std::string> labels)
      : Error("DegenerateColumn",
              "zero column margin: " + detail::join_labels(labels)),
        labels_(std::move(labels)) {}

  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Requested dimensionality exceeds the numerical rank of the scaled,
/// centered matrix.
class RankExceeded : public Error {
 public:
  RankExceeded(std::size_t actual_rank, std::size_t requested)
      : Error("RankExceeded",
              "requested " + std::to_string(requested) +
                  " dimensions but numerical rank is " +
                  std::to_string(actual_rank)),
        actual_rank_(actual_rank) {}

  std::size_t actual_rank() const noexcept { return actual_rank_; }

 private:
  std::size_t actual_rank_;
};

struct DegenerateSolution : Error {
  explicit DegenerateSolution(const std::string& msg)
      : Error("DegenerateSolution", msg) {}
};

class RatingOutOfRange : public Error {
 public:
  RatingOutOfRange(std::size_t row, std::size_t col, int value, int q)
      : Error("RatingOutOfRange",
              "rating " + std::to_string(value) + " at row " +
                  std::to_string(row + 1) + ", column " +
                  std::to_string(col + 1) + " is outside 1.." +
                  std::to_string(q)),
        row_(row), col_(col), value_(value) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  int value() const noexcept { return value_; }

 private:
  std::size_t row_, col_;
  int value_;
};

class MalformedCsv : public Error {
 public:
  MalformedCsv(std::size_t line, const std::string& detail)
      : Error("MalformedCsv",
              "line " + std::to_string(line) + ": " + detail),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct UnknownDataset : Error {
  explicit UnknownDataset(const std::string& name)
      : Error("UnknownDataset", "unknown builtin dataset: " + name) {}
};

struct NeedTwoDimensions : Error {
  explicit NeedTwoDimensions(const std::string& msg)
      : Error("NeedTwoDimensions", msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

}  // namespace dsrate

#endif  // DSRATE_ERRORS_HPP
