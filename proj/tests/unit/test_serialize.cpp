#include "polyhahn/domain.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/serialize.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyhahn;
namespace fs = std::filesystem;

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), OutOfRange);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("1/2") == "1/2");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("domain round trip through JSON") {
  const LatticeDomain v(check_admissible(2, 3, MultiIndex{2, 2, 2}));
  const auto j = nlohmann::json::parse(to_json(v));
  REQUIRE(j.contains("points"));
  CHECK(j["points"].size() == 7);
  const std::string csv = to_csv(v);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);  // header plus seven rows
}

TEST_CASE("spectra JSON keeps exact eigenvalues") {
  const auto r = verify_spectra(check_admissible(2, 3, MultiIndex{2, 2, 2}));
  const std::string text = to_json(r);
  CHECK(text.find("\"10\"") != std::string::npos);
  CHECK(nlohmann::json::accept(text));
}

TEST_CASE("atomic writes") {
  const fs::path dir = fs::temp_directory_path() / "polyhahn_serialize_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path target = dir / "out.json";
  write_atomic(target, "first");
  write_atomic(target, "second");
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);  // no leftover temporaries
  CHECK_THROWS(write_atomic(dir / "missing" / "out.json", "x"));
  fs::remove_all(dir);
}
