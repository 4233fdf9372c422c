#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "honeymirror/report.hpp"

using namespace hm;

namespace {

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::size_t k = 0;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c{"mirror", 2, 2, 1, 64, "json"};
  CHECK_NOTHROW(validate_config(c));
  c.n = 4;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c.command = "build";
  CHECK_NOTHROW(validate_config(c));
  c.format = "obj";
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = RunConfig{"nope", 2, 2, 1, 64, "json"};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = RunConfig{"acyclic", 2, 2, 1, 3, "json"};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}

TEST_CASE("reports carry the schema and are deterministic") {
  const RunConfig c{"build", 2, 1, 1, 64, "json"};
  const Report a = run_report(c);
  const Report b = run_report(c);
  CHECK(a.json == b.json);
  CHECK(a.verdict == Verdict::Match);
  CHECK(a.json.find("\"schema\": \"honeymirror/1\"") != std::string::npos);
  CHECK(a.json.find("\"verdict\": \"match\"") != std::string::npos);
}

TEST_CASE("vertex coordinates are exact rationals") {
  const Report r = run_report(RunConfig{"build", 2, 1, 1, 64, "json"});
  CHECK(r.json.find("\"1/3\"") != std::string::npos);
}

TEST_CASE("OBJ export of a hexagon window") {
  const std::string obj = window_obj(2, 1);
  CHECK(count_lines(obj, "l ") == 12);  // six spokes and six ring edges
  CHECK(count_lines(obj, "v ") == 12);
  CHECK(obj == window_obj(2, 1));
}

TEST_CASE("OBJ export of a three-dimensional window") {
  const std::string obj = window_obj(3, 1);
  CHECK(count_lines(obj, "f ") > 0);
  std::istringstream in(obj);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("f ", 0) != 0) continue;
    const std::size_t verts = std::count(line.begin(), line.end(), ' ');
    CHECK((verts == 4 || verts == 6));
  }
}

TEST_CASE("B-side table lists both twist readings") {
  const Report r = run_report(RunConfig{"bside-hom", 2, 2, 1, 64, "json"});
  CHECK(r.verdict == Verdict::Match);
  CHECK(r.json.find("negated_weight_reading") != std::string::npos);
}
