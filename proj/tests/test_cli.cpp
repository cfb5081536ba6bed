#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NBHO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

const char* kProductSystem = R"({
  "dimension": 3,
  "masses": [1, 2, 3],
  "two_body": [
    {"i": 1, "j": 2, "g": 4},
    {"i": 1, "j": 3, "g": 6},
    {"i": 2, "j": 3, "g": 12}
  ],
  "states": [{"n": [0, 0]}, {"n": [1, 0]}]
})";

}  // namespace

TEST_CASE("frequencies picks the analytic path on a product-coupling system") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const RunResult r = run_cli("frequencies " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out["method"] == "analytic");
  REQUIRE(out["omega"].size() == 2);
  for (const auto& w : out["omega"])
    CHECK(w.get<double>() == doctest::Approx(std::sqrt(24.0)).epsilon(1e-11));
}

TEST_CASE("--numeric agrees with the analytic path") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const json a = json::parse(run_cli("frequencies " + path).out);
  const json n = json::parse(run_cli("frequencies --numeric " + path).out);
  CHECK(n["method"] == "numeric");
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(a["omega"][i].get<double>() ==
          doctest::Approx(n["omega"][i].get<double>()).epsilon(1e-10));
}

TEST_CASE("energy evaluates the states in the file") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const RunResult r = run_cli("energy " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  REQUIRE(out["energies"].size() == 2);
  const double w = std::sqrt(24.0);
  CHECK(out["energies"][0].get<double>() ==
        doctest::Approx(3.0 * w).epsilon(1e-11));
  CHECK(out["energies"][1].get<double>() ==
        doctest::Approx(5.0 * w).epsilon(1e-11));
}

TEST_CASE("levels respects the cutoff") {
  const std::string path = write_temp(
      "nbho_cli_pair.json",
      R"({"dimension": 3, "masses": [1, 1], "two_body": [{"i": 1, "j": 2, "g": 0.5}]})");
  const RunResult r = run_cli("levels --emax 5 " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  REQUIRE(out.size() == 3);  // sqrt(2)*(3/2, 5/2, 7/2) all below 5
  CHECK(out[0]["degeneracy"] == 1);
  CHECK(out[1]["degeneracy"] == 3);
  CHECK(out[2]["degeneracy"] == 6);
}

TEST_CASE("detect reports rho and beta") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const json out = json::parse(run_cli("detect " + path).out);
  CHECK(out["one_body_rho"].get<double>() == 0.0);
  CHECK(out["product_beta"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("verify passes on a healthy system") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const RunResult r = run_cli("verify " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out["pass"] == true);
  CHECK(out["max_relative_deviation"].get<double>() <= 1e-10);
}

TEST_CASE("verify --random runs a reproducible batch") {
  const json out = json::parse(run_cli("verify --random 20 --seed 7").out);
  CHECK(out["pass"] == true);
  CHECK(out["failures"] == 0);
  CHECK(out["systems"] == 20);
}

TEST_CASE("zero couplings exit 1 with an UnstableSystem error") {
  const std::string path =
      write_temp("nbho_cli_free.json", R"({"dimension": 3, "masses": [1, 2]})");
  const RunResult r = run_cli("frequencies " + path);
  CHECK(r.exit_code == 1);
  const json out = json::parse(r.out);
  CHECK(out["error"] == "UnstableSystem");
}

TEST_CASE("input errors exit 2") {
  const std::string bad =
      write_temp("nbho_cli_bad.json", R"({"dimension": 3})");
  CHECK(run_cli("frequencies " + bad).exit_code == 2);
  CHECK(run_cli("frequencies /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("csv output carries one row per mode") {
  const std::string path = write_temp("nbho_cli_prod.json", kProductSystem);
  const RunResult r = run_cli("frequencies --format csv " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("mode,omega,d\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}
