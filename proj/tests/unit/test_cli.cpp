#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "eulersub/cli.hpp"
#include "schema_check.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = eulersub::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json schema_for(const std::string& name) {
  return schema::load(std::string(EULERSUB_SCHEMA_DIR) + "/" + name + ".json");
}

void check_schema(const std::string& name, const std::string& text) {
  const auto value = nlohmann::json::parse(text);
  const auto errors = schema::validate(schema_for(name), value);
  for (const auto& e : errors) MESSAGE(name << e);
  CHECK(errors.empty());
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("eulersub_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("classify json") {
  const Run r = run({"classify", "-a", "-1", "-b", "0", "-c", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "Ellipse");
  CHECK(j["discriminant"] == "4");
  CHECK(j["canonical"]["q"] == "1");
  check_schema("classify", r.out);

  const Run parabola = run({"classify", "-a", "0", "-b", "1", "-c", "0", "--format", "json"});
  REQUIRE(parabola.code == 0);
  CHECK(nlohmann::json::parse(parabola.out)["canonical"].is_null());
  check_schema("classify", parabola.out);
}

TEST_CASE("classify text") {
  const Run r = run({"classify", "-a", "1", "-b", "0", "-c", "-1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("class: HyperbolaVerticesOnXAxis") != std::string::npos);
  CHECK(r.out.find("M1: none") != std::string::npos);
}

TEST_CASE("parametrize euler4+") {
  const Run r = run({"parametrize", "-a", "1", "-b", "0", "-c", "1", "-m", "euler4+"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("x(t) = (-2*t) / (t^2 - 1)") != std::string::npos);
  CHECK(r.out.find("y(t) = (-t^2 - 1) / (t^2 - 1)") != std::string::npos);
  CHECK(r.out.find("dx/dt = (2*t^2 + 2) / (t^4 - 2*t^2 + 1)") != std::string::npos);

  for (const char* m : {"euler1+", "euler4-", "tau", "trig", "original", "point:1/2:-"}) {
    CAPTURE(m);
    const Run j = run({"parametrize", "-a", "1", "-b", "0", "-c", "1", "-m", m, "--format", "json"});
    REQUIRE(j.code == 0);
    check_schema("parametrize", j.out);
  }
  const Run inexact = run({"parametrize", "-a", "2", "-b", "0", "-c", "1", "-m", "trig", "--format", "json"});
  REQUIRE(inexact.code == 0);
  CHECK(nlohmann::json::parse(inexact.out)["exact"] == false);
  check_schema("parametrize", inexact.out);
}

TEST_CASE("substitute") {
  const Run r = run({"substitute", "-a", "1", "-b", "0", "-c", "1", "-m", "euler4+", "-e", "1/y", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["integrand"] == "(-2) / (t^2 - 1)");
  check_schema("substitute", r.out);
}

TEST_CASE("integrate") {
  const Run r = run({"integrate", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "1/y", "--from", "0", "--to", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("substituted: 0.881373587") != std::string::npos);
  CHECK(r.out.find("deviation: ") != std::string::npos);

  const Run j = run({"integrate", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "1/y", "--from", "0", "--to",
                     "1", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto v = nlohmann::json::parse(j.out);
  CHECK(std::abs(v["substituted"].get<double>() - 0.8813735870195430) < 1e-9);
  CHECK(v["deviation"].get<double>() < 1e-9);
  check_schema("integrate", j.out);

  const Run dec = run({"integrate", "-a", "1", "-b", "0", "-c", "-1", "-m", "euler1-", "-e", "1/y", "--from", "2",
                       "--to", "3.0"});
  CHECK(dec.code == 0);
}

TEST_CASE("check") {
  const Run r = run({"check", "-a", "1", "-b", "0", "-c", "-1", "-e", "1/y", "--from", "2", "--to", "3", "--format",
                     "json"});
  REQUIRE(r.code == 0);
  check_schema("check", r.out);
  const auto v = nlohmann::json::parse(r.out);
  CHECK(v["methods"]["euler2+"]["error"] == "PreconditionViolated");
  CHECK(v["max_deviation"].get<double>() < 1e-9);

  const Run picked = run({"check", "-a", "1", "-b", "0", "-c", "1", "-e", "1/y", "--from", "0", "--to", "1", "-m",
                          "euler1+", "-m", "trig"});
  REQUIRE(picked.code == 0);
  CHECK(count(picked.out, "\n") == 5);  // direct, two methods, two deviations
}

TEST_CASE("plot") {
  const std::string path = temp_path("fig.svg");
  const Run r = run({"plot", "-a", "1", "-b", "0", "-c", "1", "-m", "euler4+", "-o", path, "--format", "json"});
  REQUIRE(r.code == 0);
  check_schema("plot", r.out);
  const std::string svg = slurp(path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // t = +-1 are poles of euler4 on this conic, leaving four chords
  const auto meta = nlohmann::json::parse(r.out);
  CHECK(meta["chords"] == 4);
  CHECK(meta["notices"].size() == 2);
  CHECK(count(svg, "<path class=\"chord\"") == 4);
  CHECK(count(svg, "<svg") == count(svg, "</svg>"));

  const std::string again = temp_path("fig2.svg");
  REQUIRE(run({"plot", "-a", "1", "-b", "0", "-c", "1", "-m", "euler4+", "-o", again}).code == 0);
  CHECK(slurp(again) == svg);
  std::filesystem::remove(path);
  std::filesystem::remove(again);

  const Run to_stdout = run({"plot", "-a", "1", "-b", "0", "-c", "1", "-m", "euler4+"});
  CHECK(to_stdout.out == svg);
}

TEST_CASE("exit codes") {
  // domain errors
  Run r = run({"parametrize", "-a", "1", "-b", "0", "-c", "-1", "-m", "euler4+"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: PreconditionViolated: ", 0) == 0);
  r = run({"integrate", "-a", "-1", "-b", "0", "-c", "-1", "-m", "trig", "-e", "1", "--from", "0", "--to", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NoRealPoints") != std::string::npos);
  r = run({"integrate", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "1/y", "--from", "0", "--to", "1",
           "--tolerance", "1e-30"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ToleranceExceeded") != std::string::npos);

  // usage errors
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"classify", "-a", "1", "-b", "0"},
           {"classify", "-a", "x", "-b", "0", "-c", "1"},
           {"classify", "-a", "1/0", "-b", "0", "-c", "1"},
           {"classify", "-a", "1", "-b", "0", "-c", "1", "--format", "xml"},
           {"parametrize", "-a", "1", "-b", "0", "-c", "1", "-m", "euler5"},
           {"substitute", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "x^"},
           {"integrate", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "1/y", "--from", "0", "--to", "1",
            "--branch", "up"},
           {"integrate", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "1/y", "--from", "0", "--to", "1",
            "--nodes", "1"},
       }) {
    CAPTURE(args.size());
    const Run u = run(args);
    CHECK(u.code == 2);
    CHECK(u.err.rfind("usage error: ", 0) == 0);
  }
  const Run caret = run({"substitute", "-a", "1", "-b", "0", "-c", "1", "-m", "euler1+", "-e", "x^"});
  CHECK(caret.err.find("column 3") != std::string::npos);
}
