#include <sstream>

#include "doctest.h"
#include "hyperratio/report_io.hpp"
#include "json.hpp"

using namespace hyperratio;

TEST_CASE("doubles keep 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(io::format_double(1.0 / 3)) == 1.0 / 3);
  CHECK(io::format_double(std::nan("")) == "nan");
  CHECK(io::format_double(-HUGE_VAL) == "-inf");
}

TEST_CASE("csv and json writers") {
  io::Table t{{"id", "n", "ok", "v", "p"}, {}};
  t.rows.push_back({std::string("a,\"b\""), 3LL, true, 0.5, Params{1, 2}});
  t.rows.push_back({std::string("c"), 4LL, false, std::nan(""), Params{}});
  std::ostringstream csv;
  io::write(t, io::Format::Csv, csv);
  CHECK(csv.str() == "id,n,ok,v,p\n\"a,\"\"b\"\"\",3,true,0.5,1;2\nc,4,false,nan,\n");
  std::ostringstream js;
  io::write(t, io::Format::Json, js);
  const auto j = nlohmann::json::parse(js.str());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["id"] == "a,\"b\"");
  CHECK(j[0]["p"] == nlohmann::json::array({1.0, 2.0}));
  CHECK(j[1]["v"] == "nan");
  CHECK(io::parse_format("json") == io::Format::Json);
  CHECK_THROWS_AS(io::parse_format("xml"), Error);
}

TEST_CASE("grid files") {
  const Grid a = io::parse_grid_json(R"({"params": [[1.5], [2]], "x": [-1, 0, 1]})");
  CHECK(a.params.size() == 2);
  CHECK(a.xs == std::vector<double>{-1, 0, 1});
  const Grid b = io::parse_grid_json(R"({"params": [[1, 2]], "x": {"lo": 0.01, "hi": 100, "count": 5, "sampling": "log"}})");
  REQUIRE(b.xs.size() == 5);
  CHECK(b.xs[2] == doctest::Approx(1.0));
  for (const char* bad : {"{", R"({"params": []})", R"({"params": [], "x": [1]})", R"({"params": [[1]], "x": []})",
                          R"({"params": [[1]], "x": {"lo": 0, "hi": 1, "count": 3, "sampling": "cubic"}})",
                          R"({"params": [["a"]], "x": [1]})"}) {
    CAPTURE(bad);
    try {
      io::parse_grid_json(bad);
      FAIL("accepted a bad grid");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Config);
    }
  }
  CHECK_THROWS_AS(io::read_grid_file("/nonexistent/grid.json"), Error);
}

TEST_CASE("verification table rows") {
  const auto rep = verify_bound(find_bound("pcf.b21"), Grid{{{1.0}}, {0.0, 1.0}});
  const io::Table t = io::verification_table({rep});
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].size() == t.columns.size());
  CHECK(std::get<std::string>(t.rows[0].back()) == "PASS");
}
