#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sphharm/json_io.hpp"

using sphharm::Json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string workdir_file(const std::string& name) { return std::string(SPHHARM_TEST_WORKDIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

Result run(const std::string& args) {
  const std::string err_path = workdir_file("cli_stderr.txt");
  const std::string cmd = std::string("\"") + SPHHARM_CLI_PATH + "\" " + args + " 2>\"" + err_path + "\"";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

}  // namespace

TEST_CASE("dim") {
  CHECK(run("dim --d 3 --n 5").out == "11\n");
  CHECK(run("dim --d 4 --n 2 --space sphere").out == "14\n");
  CHECK(run("dim --d 3 --n 4 --space homogeneous").out == "15\n");
  CHECK(run("dim --d 2 --n 0").out == "1\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("dim --n 3").code == 2);
  CHECK(run("dim --d 3 --n 3 --bogus").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("").code == 2);
  const Result z = run("zonal --d 3 --n 2 --t 3");
  CHECK(z.code == 2);
  CHECK(z.err.find("--t") != std::string::npos);
  CHECK(run("basis --d 3 --n 2 --kind d2").code == 2);
}

TEST_CASE("quad weights sum to the surface area") {
  const Result r = run("quad --d 3 --degree 6");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["d"] == 3);
  CHECK(j["exact_degree"].get<int>() >= 6);
  double s = 0.0;
  for (const auto& w : j["weights"]) s += w.get<double>();
  CHECK(std::abs(s - 4 * std::numbers::pi) <= 1e-12);
  CHECK(j["points"].size() == j["weights"].size());
}

TEST_CASE("zonal and funk-hecke values") {
  const Json z = Json::parse(run("zonal --d 3 --n 2 --t 1").out);
  CHECK(std::abs(z["value"].get<double>() - 5.0) <= 1e-12);
  const Json fh = Json::parse(run("funk-hecke --d 3 --n 1 --named monomial:1").out);
  CHECK(std::abs(fh["lambda"].get<double>() - 4 * std::numbers::pi / 3) <= 1e-10);
}

TEST_CASE("project") {
  const std::string in = workdir_file("cli_project_in.json");
  write_file(in, R"({"d": 3, "terms": [{"alpha": [2, 0, 0], "num": "1"}]})");
  const Result r = run("project --input \"" + in + "\"");
  REQUIRE(r.code == 0);
  const Json expected = Json::parse(R"({"d": 3, "terms": [
      {"alpha": [0, 0, 2], "num": "-1", "den": "3"},
      {"alpha": [0, 2, 0], "num": "-1", "den": "3"},
      {"alpha": [2, 0, 0], "num": "2", "den": "3"}]})");
  const auto got = sphharm::poly_from_json(Json::parse(r.out));
  CHECK(got == sphharm::poly_from_json(expected));

  const Result r0 = run("project --n 0 --input \"" + in + "\"");
  REQUIRE(r0.code == 0);
  const auto mean = sphharm::poly_from_json(Json::parse(r0.out));
  CHECK(mean.coefficient(sphharm::MultiIndex::zero(3)) == sphharm::frac(1, 3));

  write_file(in, R"({"d": 3, "terms": [{"alpha": [2, 0], "num": "1"}]})");
  const Result bad = run("project --input \"" + in + "\"");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("alpha") != std::string::npos);
  write_file(in, "{not json");
  CHECK(run("project --input \"" + in + "\"").code == 2);
  CHECK(run("project --input \"" + workdir_file("missing_file.json") + "\"").code == 2);
}

TEST_CASE("basis formats") {
  const Result j = run("basis --d 3 --n 2");
  REQUIRE(j.code == 0);
  const Json b = Json::parse(j.out);
  CHECK(b["elements"].size() == 5);
  const Result c = run("basis --d 3 --n 1 --kind maxwell --format csv");
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("element,tag,scale,alpha,num,den\r\n", 0) == 0);
}

TEST_CASE("output file") {
  const std::string path = workdir_file("cli_out.json");
  std::remove(path.c_str());
  const Result r = run("zonal --d 4 --n 3 --t 0.5 -o \"" + path + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == run("zonal --d 4 --n 3 --t 0.5").out);
}

TEST_CASE("interp and fundsys") {
  const Json fs = Json::parse(run("fundsys --d 3 --n 2 --seed 5").out);
  CHECK(fs["points"].size() == 5);
  const std::string values = workdir_file("cli_values.json");
  write_file(values, "[1,0,0,0,0]");
  const Result r = run("interp --d 3 --n 2 --seed 5 --samples 3 --values \"" + values + "\"");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["samples"].size() == 3);
  write_file(values, "[1,0]");
  CHECK(run("interp --d 3 --n 2 --values \"" + values + "\"").code == 2);
}

TEST_CASE("check is deterministic") {
  const Result a = run("check --d 3 --nmax 3 --seed 7");
  const Result b = run("check --d 3 --nmax 3 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["status"] == "pass");
}
