#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ptspec/oracles.hpp"

namespace {

std::string cli_bin() {
  const char* env = std::getenv("PTSPEC_CLI_BIN");
  REQUIRE(env != nullptr);
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + cli_bin() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("spectrum on the analytic rectangular well") {
  const RunResult r =
      run("spectrum --potential rect --v1 20 --v2 0 --a 2 --method analytic");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"eigenvalues\": [") != std::string::npos);
  CHECK(r.out.find("\"manifest\"") != std::string::npos);
  // the six square-well levels appear with their leading digits
  const std::vector<double> oracle =
      ptspec::oracles::square_well_levels(20.0, 2.0, 1e-12);
  REQUIRE(oracle.size() == 6);
  char leading[32];
  std::snprintf(leading, sizeof(leading), "%.6g", oracle.front());
  CHECK(r.out.find(std::string(leading).substr(0, 7)) != std::string::npos);
}

TEST_CASE("empty spectrum is a success with an empty list") {
  const RunResult r = run(
      "spectrum --potential gaussian --v1 50 --v2 70 --method shooting "
      "--L 10 --step 0.002 --e-scan 800");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"eigenvalues\": []") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("spectrum --potential rect --v1 20 --v2 3 --method wc-pencil")
            .exit_code == 2);
  CHECK(run("spectrum --potential nosuch --v1 20 --v2 3").exit_code == 2);
  CHECK(run("spectrum --v1 20 --v2 3").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("sweep --potential rect --v1 20 --v2-max 1").exit_code == 2);
  CHECK(run("spectrum --potential rect --v1 -4 --v2 0").exit_code == 2);
}

TEST_CASE("sweep writes deterministic csv and json") {
  const std::string base = "/tmp/ptspec_cli_test";
  const std::string args =
      "sweep --potential rect --v1 40 --a 2 --method analytic "
      "--v2-min 0 --v2-max 1.4 --steps 40 --out-csv " +
      base + ".csv --out-json " + base + ".json --out-svg " + base +
      ".svg --reproducible";
  REQUIRE(run(args).exit_code == 0);
  const std::string csv1 = slurp(base + ".csv");
  const std::string json1 = slurp(base + ".json");
  const std::string svg1 = slurp(base + ".svg");
  REQUIRE(run(args).exit_code == 0);
  CHECK(slurp(base + ".csv") == csv1);
  CHECK(slurp(base + ".json") == json1);
  CHECK(slurp(base + ".svg") == svg1);

  CHECK(csv1.rfind("v2,branch_label,energy\n", 0) == 0);
  CHECK(json1.find("\"eps\": [") != std::string::npos);
  CHECK(json1.find("\"manifest\"") != std::string::npos);
  CHECK(svg1.find("<svg") != std::string::npos);

  // the first coalescence of the published evolution sits inside the range
  CHECK(json1.find("\"v2c\": 0.9") != std::string::npos);
}

TEST_CASE("sweep with unwritable output fails") {
  const RunResult r = run(
      "sweep --potential rect --v1 40 --method analytic --v2-max 0.5 "
      "--steps 10 --out-csv /nonexistent-dir/x.csv --out-json /tmp/x.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("eps and crossings commands emit json to stdout") {
  const RunResult eps = run(
      "eps --potential rect --v1 40 --method analytic --v2-min 0 "
      "--v2-max 1.4 --steps 40");
  REQUIRE(eps.exit_code == 0);
  CHECK(eps.out.find("\"eps\": [") != std::string::npos);
  CHECK(eps.out.find("\"v2c\": 0.9") != std::string::npos);

  const RunResult cr = run(
      "crossings --potential rect --v1 40 --method analytic --v2-min 0 "
      "--v2-max 1.4 --steps 40");
  REQUIRE(cr.exit_code == 0);
  CHECK(cr.out.find("\"crossings\": []") != std::string::npos);
}

TEST_CASE("validate --fast passes and the fault hook trips it") {
  const RunResult ok = run("validate --fast");
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.out.find("all passed") != std::string::npos);

  const RunResult bad = run("validate --fast", "PTSPEC_FAULT=me_gauss ");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("[FAIL] matrix-elements-vs-quadrature") !=
        std::string::npos);
}
