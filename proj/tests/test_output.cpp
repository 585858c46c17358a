#include "doctest.h"

#include <cmath>
#include <sstream>

#include "nanobeam/error.hpp"
#include "nanobeam/output.hpp"

using namespace nanobeam;

namespace {
Table sample_table() {
  Table t{{"E", "label", "count"}, {}};
  t.add_row({1e-7, std::string("ok"), std::int64_t{3}});
  t.add_row({std::nan(""), std::string("empty DS"), std::int64_t{0}});
  t.add_row({-2.1234567891e-7, std::string("a,b"), std::int64_t{-1}});
  return t;
}

Provenance prov() { return make_provenance(nlohmann::json{{"seed", 1}}, 1, "test"); }
}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1e-7) == "1.0000000e-07");
  CHECK(format_number(-2.1234567891e-7) == "-2.1234568e-07");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(rounded(-2.1234567891e-7) == -2.1234568e-07);
}

TEST_CASE("provenance header") {
  const Provenance p = prov();
  CHECK(p.config_hash.size() == 16);
  CHECK(p.config_hash == make_provenance(nlohmann::json{{"seed", 1}}, 1, "test").config_hash);
  CHECK(p.config_hash != make_provenance(nlohmann::json{{"seed", 2}}, 2, "test").config_hash);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  const std::string csv = to_csv(sample_table(), p);
  CHECK(csv.rfind("# nanobeam ", 0) == 0);
  CHECK(csv.find("# config_hash " + p.config_hash) != std::string::npos);
  CHECK(csv.find("# seed 1\n") != std::string::npos);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
}

TEST_CASE("CSV and JSON agree field for field") {
  const Table t = sample_table();
  const nlohmann::json j = to_json(t, prov());
  CHECK(j["meta"]["seed"] == 1);
  REQUIRE(j["rows"].size() == 3);
  std::istringstream csv(to_csv(t, prov()));
  std::string line;
  std::vector<std::string> data;
  while (std::getline(csv, line)) {
    if (!line.empty() && line[0] != '#') data.push_back(line);
  }
  REQUIRE(data.size() == 4);
  CHECK(data[0] == "E,label,count");
  CHECK(data[1] == "1.0000000e-07,ok,3");
  CHECK(j["rows"][0]["E"].get<double>() == std::stod("1.0000000e-07"));
  CHECK(j["rows"][1]["E"].is_null());
  CHECK(data[2].rfind("nan,", 0) == 0);
  CHECK(j["rows"][2]["E"].get<double>() == std::stod("-2.1234568e-07"));
  CHECK(j["rows"][2]["label"] == "a,b");
  CHECK(j["rows"][2]["count"] == -1);
}

TEST_CASE("table row width is checked") {
  Table t{{"a", "b"}, {}};
  CHECK_THROWS_AS(t.add_row({1.0}), InvalidParameter);
}

TEST_CASE("output formats") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("both") == OutputFormat::Both);
  CHECK_THROWS_AS(parse_format("xml"), InvalidParameter);
}

TEST_CASE("svg plot") {
  const std::string svg = svg_line_plot({0, 1, 2}, {{0, 1, 0}}, "K(t)", "t");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("K(t)") != std::string::npos);
}
