#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lommel/cli.hpp"

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " LOMMEL_CLI_PATH " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) o.out.append(buffer, n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("eval at a point with a degenerate prefactor") {
  const auto o = run_cli("eval --mu -0.5 --nu -0.5 --x 1");
  CHECK(o.status == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "x,lambda,Lambda,L,S,lambda_error_bound,Lambda_error_bound");
  CHECK(rows[1].rfind("1.0000000000000000e+00,1.1752011936438014e+00,", 0) == 0);
  CHECK(rows[1].find(",,,") != std::string::npos);
}

TEST_CASE("eval at zero and JSON nulls") {
  const auto o = run_cli("eval --mu -0.5 --nu -0.5 --x 0 --format json");
  CHECK(o.status == 0);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["lambda"] == 1.0);
  CHECK(j[0]["Lambda"] == 1.0);
  CHECK(j[0]["L"].is_null());
}

TEST_CASE("usage and parameter errors exit with 2") {
  CHECK(run_cli("eval --mu -0.5 --nu -2.5 --x 1").status == 2);
  CHECK(run_cli("verify --check thm9").status == 2);
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("eval --mu 0.5 --nu 0.5 --x 1", "LOMMEL_TOL=abc").status == 2);
  CHECK(run_cli("eval --mu 0.5 --nu 0.5 --x 1 --tol -1").status == 2);
  CHECK(run_cli("verify --check thm3.5 --mu 0.5 --x-min 0.1 --x-max 4.5 --points 16").status == 2);
}

TEST_CASE("zeros command") {
  const auto o = run_cli("zeros --mu 0.5 --n-max 5");
  CHECK(o.status == 0);
  CHECK(lines(o.out).size() == 6);

  const auto one = run_cli("zeros --mu 1 --n-max 3");
  CHECK(one.status == 0);
  const auto rows = lines(one.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].size() - 2) == ",2");

  const auto miss = run_cli("zeros --mu 2 --n-max 3");
  CHECK(miss.status == 3);
  CHECK(lines(miss.out).size() == 1);  // header of the empty partial table
}

TEST_CASE("rayleigh command") {
  const auto o = run_cli("rayleigh --mu 0.5 --big-m 3 --n-max 50 --format json");
  CHECK(o.status == 0);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["alpha_newton_girard"].get<double>() == doctest::Approx(1.0 / 8.75).epsilon(1e-15));
  CHECK(j[0]["abs_diff"].get<double>() <= j[0]["tail_width"].get<double>());
}

TEST_CASE("verify rows and exit status") {
  const auto na = run_cli("verify --check thm2.1.i --mu 1 --nu 0 --mu1 0 --nu1 2");
  CHECK(na.status == 0);
  CHECK(na.out.find("not_applicable") != std::string::npos);

  const auto r = run_cli("verify --check thm3.3 --mu 1 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "pass");
  CHECK(std::fabs(j[0]["limit_lo"].get<double>()) <= 1e-6);
  CHECK(j[0]["limit_hi"].get<double>() == doctest::Approx(1.644934).epsilon(1e-6));
}

TEST_CASE("table command and output file") {
  const std::string path = "cli_table_test.csv";
  const auto o = run_cli("table --mu 0.5 --points 11 --out " + path);
  CHECK(o.status == 0);
  CHECK(o.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("in-process run maps errors to exit codes") {
  lommel::cli::RunConfig cfg;
  cfg.command = lommel::cli::Command::zeros;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(lommel::cli::run(cfg, out, err) == lommel::cli::kUsage);  // --mu missing
  cfg.mu = {2.0};
  cfg.n_max = 2;
  CHECK(lommel::cli::run(cfg, out, err) == lommel::cli::kNumerical);
  CHECK(err.str().find("numerical failure") != std::string::npos);
}
