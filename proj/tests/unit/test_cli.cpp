#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "sphrect/cli.hpp"
#include "sphrect/constants.hpp"

using namespace sphrect;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sphrect_test_" + name);
}

}  // namespace

TEST_CASE("constants") {
  const auto r = run_cli({"constants"});
  REQUIRE(r.code == cli::kSuccess);
  const json j = json::parse(r.out);
  CHECK(j["lambda"].get<double>() == doctest::Approx(0.1076539192).epsilon(1e-10));
  CHECK(j["kappa_prime_crit"].get<double>() == doctest::Approx(0.9089085575).epsilon(1e-10));
  CHECK(std::abs(j["k_crit"].get<double>() - 2.4305) < 5e-5);
  CHECK(j["b1"].get<double>() == 1.40952316266);
}

TEST_CASE("solve") {
  auto r = run_cli({"solve", "--k", "2"});
  REQUIRE(r.code == cli::kSuccess);
  json j = json::parse(r.out);
  CHECK(std::abs(j["alpha"].get<double>() - 0.5) < 1e-6);
  CHECK(std::abs(j["modulus"].get<double>() - 0.63963) < 1e-5);
  CHECK(j["family"] == "first");

  r = run_cli({"solve", "--k", "3"});
  REQUIRE(r.code == cli::kSuccess);
  j = json::parse(r.out);
  CHECK(j["family"] == "second");
  CHECK(j["c"].get<double>() > 1.0);
  CHECK(j["c"].get<double>() < 3.0);

  r = run_cli({"solve", "--k", "1.0"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("forbidden interval") != std::string::npos);
  CHECK(run_cli({"solve"}).code == cli::kUsage);
  CHECK(run_cli({"solve", "--k", "abc"}).code == cli::kUsage);
}

TEST_CASE("nonconvergence exit code") {
  // a panel budget this small cannot be met
  CHECK(run_cli({"--tol-quad", "1e-300", "solve", "--k", "2"}).code == cli::kNonconvergence);
}

TEST_CASE("sweep CSV round trip") {
  const auto path = temp_file("sweep.csv");
  const auto r = run_cli({"sweep", "--k-min", "1.1", "--k-max", "2.4", "--steps", "14", "--out", path.string()});
  REQUIRE(r.code == cli::kSuccess);
  const auto rows = cli::read_sweep_csv(path.string());
  REQUIRE(rows.size() == 14);
  const auto expected = cli::sweep(cli::sweep_grid(1.1, 2.4, 14));
  CHECK(rows == expected);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].c > rows[i - 1].c);
    CHECK(rows[i].modulus > rows[i - 1].modulus);
    CHECK(rows[i].modulus < critical_constants().K_crit);
  }
  std::filesystem::remove(path);
}

TEST_CASE("sweep skips the forbidden zone") {
  const double kc = k_crit();
  std::vector<double> skipped;
  const auto grid = cli::sweep_grid(kc - 1e-7, kc + 2e-7, 4, &skipped);
  CHECK(grid.size() + skipped.size() == 4);
  CHECK(skipped.size() == 4);
  const auto path = temp_file("sweep_skip.csv");
  char lo[32], hi[32];
  std::snprintf(lo, sizeof lo, "%.17g", kc - 0.2);
  std::snprintf(hi, sizeof hi, "%.17g", kc + 0.2);
  const auto r = run_cli({"sweep", "--k-min", lo, "--k-max", hi, "--steps", "3", "--out", path.string()});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.err.find("skipping") != std::string::npos);
  const auto rows = cli::read_sweep_csv(path.string());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].family == Family::First);
  CHECK(rows[1].family == Family::Second);
  std::filesystem::remove(path);
}

TEST_CASE("row format") {
  const cli::SweepRow row{2.0, 0.1 + 0.2, 1.0 / 3.0, 0.6396307855855032, -1.2e-13, Family::Second};
  const std::string line = cli::format_row(row);
  CHECK(line.find("0.30000000000000004") != std::string::npos);
  CHECK(cli::parse_row(line) == row);
  CHECK_THROWS(cli::parse_row("1,2,3"));
  CHECK_THROWS(cli::parse_row("1,2,3,4,5,third"));
}

TEST_CASE("unwritable sweep path") {
  const auto r = run_cli({"sweep", "--k-min", "1.1", "--k-max", "1.2", "--steps", "2", "--out",
                          "/nonexistent-dir/x.csv"});
  CHECK(r.code == cli::kIoFailure);
}

TEST_CASE("modulus both directions") {
  auto r = run_cli({"modulus", "--k", "2"});
  REQUIRE(r.code == cli::kSuccess);
  json j = json::parse(r.out);
  CHECK(std::abs(j["modulus"].get<double>() - 0.63963) < 1e-5);
  CHECK(j["reciprocal"].get<double>() == doctest::Approx(1.0 / j["modulus"].get<double>()));
  CHECK(j["k_round_trip"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  r = run_cli({"modulus", "--K", "0.63963"});
  REQUIRE(r.code == cli::kSuccess);
  j = json::parse(r.out);
  CHECK(std::abs(j["k"].get<double>() - 2.0) < 1e-4);
  CHECK(run_cli({"modulus"}).code == cli::kUsage);
  CHECK(run_cli({"modulus", "--k", "2", "--K", "0.6"}).code == cli::kUsage);
}

TEST_CASE("belyi") {
  for (const char* n : {"1", "2", "3"}) {
    const auto r = run_cli({"belyi", "--example", n, "--strict"});
    REQUIRE(r.code == cli::kSuccess);
    const json j = json::parse(r.out);
    CHECK(j["belyi"] == true);
    CHECK(j["verified"] == true);
    CHECK(j["riemann_hurwitz"] == true);
  }
  const json j2 = json::parse(run_cli({"belyi", "--example", "2"}).out);
  CHECK(j2["printed_variant"]["conditions_hold"] == false);
  CHECK(j2["printed_variant"]["variant"] == "printed");
  CHECK(run_cli({"belyi", "--example", "4"}).code == cli::kUsage);
  CHECK(run_cli({"belyi", "--example", "1", "--printed-t"}).code == cli::kUsage);
  const auto printed = run_cli({"belyi", "--example", "2", "--printed-t", "--strict"});
  CHECK(printed.code == cli::kVerificationFailure);
  CHECK(json::parse(printed.out)["corrected_variant"]["conditions_hold"] == true);
  CHECK(run_cli({"belyi", "--example", "2", "--printed-t"}).code == cli::kSuccess);
}

TEST_CASE("boundary with svg") {
  const auto svg = temp_file("boundary.svg");
  const auto r = run_cli({"boundary", "--k", "2", "--samples", "40", "--svg", svg.string()});
  REQUIRE(r.code == cli::kSuccess);
  const json j = json::parse(r.out);
  CHECK(j["max_distance"].get<double>() < 1e-6);
  CHECK(j["unit_circle_pair_opposite"] == true);
  std::ifstream f(svg);
  std::string first;
  std::getline(f, first);
  CHECK(first.find("<svg") != std::string::npos);
  std::filesystem::remove(svg);
}

TEST_CASE("process exit codes") {
  const std::string exe = SPHRECT_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("constants") == 0);
  CHECK(status("") == 2);
  CHECK(status("solve --k 0.5") == 2);
  CHECK(status("--tol-quad 1e-300 solve --k 2") == 3);
  CHECK(status("belyi --example 1 --strict") == 0);
  CHECK(status("belyi --example 2 --printed-t --strict") == 4);
}
