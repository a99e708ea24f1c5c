#include "dsrate/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "dsrate/errors.hpp"

namespace dsrate {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

int parse_int(const std::string& field, std::size_t line_no) {
  int value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw MalformedCsv(line_no, "cell '" + field + "' is not an integer");
  return value;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_real_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_real(values[i]);
  }
  out += ']';
}

void append_coord_records(std::string& out, const std::vector<std::string>& labels,
                          const Matrix& coords) {
  out += '[';
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    if (i) out += ',';
    out += "\n      {\"label\":\"" + json_escape(labels[i]) + "\",\"dims\":[";
    for (std::size_t m = 0; m < coords.cols(); ++m) {
      if (m) out += ',';
      out += format_real(coords(i, m));
    }
    out += "]}";
  }
  out += "\n    ]";
}

void append_csv_records(std::string& out, std::string_view set_name,
                        const std::vector<std::string>& labels,
                        const Matrix& coords) {
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    out += set_name;
    out += ',';
    out += labels[i];
    for (std::size_t m = 0; m < coords.cols(); ++m) {
      out += ',';
      out += format_real(coords(i, m));
    }
    out += '\n';
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RatingMatrix load_csv(const std::string& path, int q, bool has_header,
                      const std::optional<std::string>& id_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();

  std::vector<std::string> lines;
  std::string line;
  for (char c : content) {
    if (c == '\n') {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw MalformedCsv(1, "file is empty");

  std::size_t id_index = static_cast<std::size_t>(-1);
  std::vector<std::string> col_labels;
  std::size_t first_data_line = 0;
  if (has_header) {
    const auto header = split_fields(lines[0]);
    if (id_column) {
      for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == *id_column) id_index = j;
      if (id_index == static_cast<std::size_t>(-1))
        throw MalformedCsv(1, "id column '" + *id_column + "' not in header");
    }
    for (std::size_t j = 0; j < header.size(); ++j)
      if (j != id_index) col_labels.push_back(header[j]);
    first_data_line = 1;
  } else if (id_column) {
    throw InvalidInput("an id column requires a header row");
  }

  if (lines.size() <= first_data_line)
    throw MalformedCsv(lines.size(), "no data rows");

  std::vector<int> ratings;
  std::vector<std::string> row_labels;
  std::size_t width = 0;
  for (std::size_t li = first_data_line; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (lines[li].empty()) throw MalformedCsv(line_no, "blank line");
    const auto fields = split_fields(lines[li]);
    if (width == 0) width = fields.size();
    if (fields.size() != width)
      throw MalformedCsv(line_no, "expected " + std::to_string(width) +
                                      " fields, got " +
                                      std::to_string(fields.size()));
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (j == id_index) {
        row_labels.push_back(fields[j]);
      } else {
        ratings.push_back(parse_int(fields[j], line_no));
      }
    }
  }

  const std::size_t p = width - (id_index != static_cast<std::size_t>(-1) ? 1 : 0);
  const std::size_t n = lines.size() - first_data_line;
  if (has_header && col_labels.size() != p)
    throw MalformedCsv(1, "header width does not match data width");
  return make_rating_matrix(n, p, q, std::move(ratings), std::move(row_labels),
                            std::move(col_labels),
                            std::filesystem::path(path).filename().string());
}

RatingMatrix load_dataset(const DatasetDescriptor& d) {
  if (d.source == DatasetSource::BuiltIn) return builtin(d.name);
  return load_csv(d.name, d.scale_max, d.has_header, d.id_column);
}

std::string ratings_to_csv(const RatingMatrix& r) {
  std::string out = "id";
  for (const auto& c : r.col_labels) out += "," + c;
  out += '\n';
  for (std::size_t i = 0; i < r.n; ++i) {
    out += r.row_labels[i];
    for (std::size_t j = 0; j < r.p; ++j)
      out += "," + std::to_string(r.at(i, j));
    out += '\n';
  }
  return out;
}

std::string recoded_to_csv(const RecodedMatrix& m) {
  std::string out = "id";
  for (const auto& c : m.col_labels) out += "," + c;
  out += '\n';
  for (std::size_t i = 0; i < m.data.rows(); ++i) {
    out += m.row_labels[i];
    for (std::size_t j = 0; j < m.data.cols(); ++j)
      out += "," + format_real(m.data(i, j));
    out += '\n';
  }
  return out;
}

std::string serialize_result(const VariantResult& res, OutputFormat format) {
  const auto& sol = res.solution;
  if (format == OutputFormat::Csv) {
    std::string out = "set,label";
    for (std::size_t m = 1; m <= sol.k; ++m)
      out += ",dim_" + std::to_string(m);
    out += '\n';
    append_csv_records(out, "rows_standard", sol.row_labels, sol.row_standard);
    append_csv_records(out, "rows_principal", sol.row_labels, sol.row_principal);
    append_csv_records(out, "cols_standard", sol.col_labels, sol.col_standard);
    append_csv_records(out, "cols_principal", sol.col_labels, sol.col_principal);
    return out;
  }

  std::string out = "{\n";
  out += "  \"variant\":\"" + std::string(variant_flag(res.config.variant)) + "\",\n";
  out += "  \"k\":" + std::to_string(sol.k) + ",\n";
  out += "  \"q\":" + std::to_string(res.q) + ",\n";
  out += "  \"dropped\":[";
  for (std::size_t i = 0; i < res.dropped.size(); ++i) {
    if (i) out += ',';
    out += '"' + json_escape(res.dropped[i]) + '"';
  }
  out += "],\n";
  out += "  \"singular_values\":";
  append_real_array(out, sol.singular_values);
  out += ",\n  \"explained\":";
  append_real_array(out, sol.explained);
  out += ",\n  \"cumulative\":";
  append_real_array(out, sol.cumulative_explained);
  out += ",\n  \"recodings\":[";
  for (std::size_t i = 0; i < res.recodings.size(); ++i) {
    if (i) out += ',';
    out += '"' + std::string(to_string(res.recodings[i].kind)) + '"';
  }
  out += "],\n";
  out += "  \"coordinates\":{\n";
  out += "    \"rows_standard\":";
  append_coord_records(out, sol.row_labels, sol.row_standard);
  out += ",\n    \"rows_principal\":";
  append_coord_records(out, sol.row_labels, sol.row_principal);
  out += ",\n    \"cols_standard\":";
  append_coord_records(out, sol.col_labels, sol.col_standard);
  out += ",\n    \"cols_principal\":";
  append_coord_records(out, sol.col_labels, sol.col_principal);
  out += "\n  }\n}\n";
  return out;
}

void write_file_atomic(const std::string& path, std::string_view bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed while writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ec2;
    fs::remove(tmp, ec2);
    throw IoError("cannot move " + tmp.string() + " to " + path + ": " +
                  ec.message());
  }
}

}  // namespace dsrate
