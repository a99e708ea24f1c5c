#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"
#include "dsrate/variants.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string canonical(const dsrate::RatingMatrix& r) {
  std::string out = r.source + ";" + std::to_string(r.n) + "x" +
                    std::to_string(r.p) + ";q=" + std::to_string(r.q) + ";";
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.p; ++j) {
      if (i || j) out += ",";
      out += std::to_string(r.at(i, j));
    }
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dsrate_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("builtin datasets") {
  const auto toy = dsrate::builtin("toy");
  CHECK(toy.n == 4);
  CHECK(toy.p == 3);
  CHECK(toy.q == 5);
  CHECK(toy.at(3, 0) == 1);
  CHECK(toy.at(3, 1) == 5);
  CHECK(toy.at(3, 2) == 3);

  const auto crimes = dsrate::builtin("crimes");
  CHECK(crimes.n == 17);
  CHECK(crimes.p == 8);
  CHECK(crimes.col_labels[4] == "Homicide");
  for (std::size_t i = 0; i < crimes.n; ++i) CHECK(crimes.at(i, 4) == 4);

  const auto reduced = dsrate::builtin("crimes_no_homicide");
  CHECK(reduced.p == 7);
  CHECK(reduced.col_labels[4] == "Kidnapping");

  CHECK(dsrate::builtin_names().size() == 3);
  CHECK_THROWS_AS(dsrate::builtin("nope"), dsrate::UnknownDataset);
}

TEST_CASE("builtin fixtures are checksum-pinned") {
  CHECK(fnv1a(canonical(dsrate::builtin("toy"))) == 0x5332bf2a730804ceull);
  CHECK(fnv1a(canonical(dsrate::builtin("crimes"))) == 0x4780fa5efe31fe7dull);
  CHECK(fnv1a(canonical(dsrate::builtin("crimes_no_homicide"))) ==
        0xc80122269b93954dull);
}

TEST_CASE("csv round trip") {
  TempDir dir;
  const auto crimes = dsrate::builtin("crimes");
  dsrate::write_file_atomic(dir.file("crimes.csv"), dsrate::ratings_to_csv(crimes));
  const auto back = dsrate::load_csv(dir.file("crimes.csv"), 4, true, "id");
  CHECK(back.n == crimes.n);
  CHECK(back.p == crimes.p);
  CHECK(back.ratings == crimes.ratings);
  CHECK(back.row_labels == crimes.row_labels);
  CHECK(back.col_labels == crimes.col_labels);
}

TEST_CASE("csv validation") {
  TempDir dir;

  SUBCASE("out of range cell") {
    std::ofstream(dir.file("bad.csv")) << "1,2\n5,1\n";
    CHECK_THROWS_AS(dsrate::load_csv(dir.file("bad.csv"), 4, false),
                    dsrate::RatingOutOfRange);
  }
  SUBCASE("ragged rows name the line") {
    std::ofstream(dir.file("ragged.csv")) << "1,2\n1,2,3\n";
    try {
      dsrate::load_csv(dir.file("ragged.csv"), 4, false);
      FAIL("expected MalformedCsv");
    } catch (const dsrate::MalformedCsv& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("non-integer cells") {
    std::ofstream(dir.file("float.csv")) << "1,2\n1,2.5\n";
    CHECK_THROWS_AS(dsrate::load_csv(dir.file("float.csv"), 4, false),
                    dsrate::MalformedCsv);
  }
  SUBCASE("a single column is not analyzable") {
    std::ofstream(dir.file("one.csv")) << "1\n2\n";
    CHECK_THROWS_AS(dsrate::load_csv(dir.file("one.csv"), 4, false),
                    dsrate::InvalidInput);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(dsrate::load_csv(dir.file("absent.csv"), 4, false),
                    dsrate::IoError);
  }
  SUBCASE("header without the requested id column") {
    std::ofstream(dir.file("noid.csv")) << "a,b\n1,2\n2,1\n";
    CHECK_THROWS_AS(dsrate::load_csv(dir.file("noid.csv"), 4, true, "id"),
                    dsrate::MalformedCsv);
  }
  SUBCASE("CRLF line endings parse like LF") {
    std::ofstream(dir.file("crlf.csv"), std::ios::binary)
        << "a,b\r\n1,2\r\n2,1\r\n";
    const auto r = dsrate::load_csv(dir.file("crlf.csv"), 4, true);
    CHECK(r.n == 2);
    CHECK(r.col_labels == std::vector<std::string>{"a", "b"});
    CHECK(r.at(0, 1) == 2);
  }
  SUBCASE("missing trailing newline is tolerated") {
    std::ofstream(dir.file("eof.csv"), std::ios::binary) << "1,2\n2,1";
    CHECK(dsrate::load_csv(dir.file("eof.csv"), 4, false).n == 2);
  }
}

TEST_CASE("json serialization") {
  const auto res = dsrate::run_ds3(dsrate::builtin("toy"));
  const auto text = dsrate::serialize_result(res, dsrate::OutputFormat::Json);
  const auto doc = nlohmann::json::parse(text);

  CHECK(doc["variant"] == "ds3");
  CHECK(doc["k"] == 2);
  CHECK(doc["q"] == 5);
  CHECK(doc["dropped"].empty());
  CHECK(doc["recodings"] ==
        nlohmann::json({"ShiftedCounts", "ReversedCounts", "RowDoubled"}));
  for (const char* set : {"rows_standard", "rows_principal"})
    CHECK(doc["coordinates"][set].size() == 8);
  for (const char* set : {"cols_standard", "cols_principal"})
    CHECK(doc["coordinates"][set].size() == 3);
  CHECK(doc["coordinates"]["rows_standard"][0]["dims"].size() == 2);

  SUBCASE("reals survive the round trip bit-for-bit") {
    for (std::size_t m = 0; m < res.solution.singular_values.size(); ++m)
      CHECK(doc["singular_values"][m].get<double>() ==
            res.solution.singular_values[m]);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t m = 0; m < 2; ++m)
        CHECK(doc["coordinates"]["rows_standard"][i]["dims"][m].get<double>() ==
              res.solution.row_standard(i, m));
  }
  SUBCASE("labels are preserved") {
    CHECK(doc["coordinates"]["rows_standard"][0]["label"] == "ind_1+");
    CHECK(doc["coordinates"]["rows_standard"][4]["label"] == "ind_1-");
    CHECK(doc["coordinates"]["cols_standard"][2]["label"] == "obj_3");
  }
}

TEST_CASE("csv serialization") {
  dsrate::VariantConfig cfg;
  cfg.variant = dsrate::Variant::CAr;
  cfg.drop_degenerate = true;
  const auto res = dsrate::run_variant(dsrate::builtin("crimes"), cfg);
  const auto text = dsrate::serialize_result(res, dsrate::OutputFormat::Csv);

  std::size_t cols_standard = 0, rows_standard = 0;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "set,label,dim_1,dim_2");
  while (std::getline(lines, line)) {
    if (line.rfind("cols_standard,", 0) == 0) ++cols_standard;
    if (line.rfind("rows_standard,", 0) == 0) ++rows_standard;
  }
  CHECK(cols_standard == 14);  // 7 objects, doubled
  CHECK(rows_standard == 17);
}

TEST_CASE("recoded csv matches the golden transcriptions") {
  const auto toy = dsrate::builtin("toy");
  const auto t = dsrate::shift_counts(toy);
  CHECK(dsrate::recoded_to_csv(t) ==
        testutil::read_file(testutil::test_dir() + "/golden/toy_t.csv"));
  const auto scd = dsrate::successive_categories(toy);
  CHECK(dsrate::recoded_to_csv(scd) ==
        testutil::read_file(testutil::test_dir() + "/golden/toy_scd.csv"));
}

TEST_CASE("atomic writes") {
  TempDir dir;
  dsrate::write_file_atomic(dir.file("out.txt"), "payload");
  CHECK(testutil::read_file(dir.file("out.txt")) == "payload");
  CHECK_FALSE(fs::exists(dir.file("out.txt.tmp")));

  SUBCASE("overwrite is clean") {
    dsrate::write_file_atomic(dir.file("out.txt"), "second");
    CHECK(testutil::read_file(dir.file("out.txt")) == "second");
  }
  SUBCASE("unwritable directory reports IoError") {
    CHECK_THROWS_AS(
        dsrate::write_file_atomic(dir.file("missing/dir/out.txt"), "x"),
        dsrate::IoError);
  }
}

TEST_CASE("dataset descriptors") {
  dsrate::DatasetDescriptor d;
  d.name = "toy";
  d.source = dsrate::DatasetSource::BuiltIn;
  CHECK(dsrate::load_dataset(d).n == 4);
}
