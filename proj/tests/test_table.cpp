#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include "cimono/table.hpp"

using namespace cimono;

TEST_CASE("csv rendering and quoting") {
  Table t({"name", "value", "flag", "count", "missing"});
  t.add_row({std::string("plain"), 1.5, true, std::int64_t(7), std::monostate{}});
  t.add_row({std::string("needs,quote"), 0.1, false, std::int64_t(-2),
             std::monostate{}});
  t.add_row({std::string("has \"inner\""), 3.0, true, std::int64_t(0),
             std::monostate{}});
  const std::string csv = render_csv(t);
  CHECK(csv.find("name,value,flag,count,missing\n") == 0);
  CHECK(csv.find("plain,1.5,true,7,\n") != std::string::npos);
  CHECK(csv.find("\"needs,quote\"") != std::string::npos);
  CHECK(csv.find("\"has \"\"inner\"\"\"") != std::string::npos);

  CHECK_THROWS_AS(t.add_row({std::string("short row")}), std::invalid_argument);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("yaml"), std::domain_error);
}

TEST_CASE("doubles render round-trip safe") {
  for (double v : {1.0 / 3.0, 0.71533186295916162, 1e-300, 6.02214076e23,
                   -0.0001220703125}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("csv and json carry identical numeric values") {
  Table t({"n", "x"});
  t.add_row({std::int64_t(1), 0.1234567890123456789});
  t.add_row({std::int64_t(2), 19.495725746223673});
  t.add_row({std::int64_t(3), std::monostate{}});

  const auto parsed = nlohmann::json::parse(render_json(t));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["x"].get<double>() == 0.1234567890123456789);
  CHECK(parsed[1]["x"].get<double>() == 19.495725746223673);
  CHECK(parsed[2]["x"].is_null());

  // CSV line 2 column 2 parses to the same bits as the JSON number
  const std::string csv = render_csv(t);
  const auto line_start = csv.find("\n2,") + 3;
  const double from_csv = std::strtod(csv.c_str() + line_start, nullptr);
  CHECK(from_csv == parsed[1]["x"].get<double>());
}
