// lommel: evaluate Lommel functions, tabulate zeros and power sums, and run
// the inequality verification suite.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "lommel/cli.hpp"

namespace {

using lommel::cli::Command;
using lommel::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mu", cfg.mu, "mu values (comma separated)")->delimiter(',');
  sub->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, lommel::Format>{{"csv", lommel::Format::csv},
                                                {"json", lommel::Format::json}}));
  sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
  sub->add_option("--tol", cfg.tol, "tolerance override (also LOMMEL_TOL)");
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--x-min", cfg.x_min);
  sub->add_option("--x-max", cfg.x_max);
  sub->add_option("--points", cfg.points)->check(CLI::Range(3, 1000000));
  sub->add_option("--spacing", cfg.spacing, "uniform or chebyshev")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, lommel::Spacing>{{"uniform", lommel::Spacing::uniform},
                                                 {"chebyshev", lommel::Spacing::chebyshev}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lommel and modified Lommel function numerics"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* eval = app.add_subcommand("eval", "lambda, Lambda, L, S on a grid");
  add_common(eval, cfg);
  add_grid(eval, cfg);
  eval->add_option("--nu", cfg.nu)->delimiter(',');
  eval->add_option("--x", cfg.x, "single evaluation point");

  auto* zeros = app.add_subcommand("zeros", "positive zeros of Lambda_{mu-1/2,1/2}");
  add_common(zeros, cfg);
  zeros->add_option("--n-max", cfg.n_max);

  auto* rayleigh = app.add_subcommand("rayleigh", "power sums of reciprocal squared zeros");
  add_common(rayleigh, cfg);
  rayleigh->add_option("--n-max", cfg.n_max);
  rayleigh->add_option("--big-m", cfg.big_m)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "grid certification of the inequalities");
  add_common(verify, cfg);
  add_grid(verify, cfg);
  verify->add_option("--nu", cfg.nu)->delimiter(',');
  verify->add_option("--mu1", cfg.mu1, "comparison mu for thm2.1.i");
  verify->add_option("--nu1", cfg.nu1, "comparison nu for thm2.1.i");
  verify->add_option("--check", cfg.check, "check name or all");

  auto* table = app.add_subcommand("table", "Hadamard product against the series");
  add_common(table, cfg);
  add_grid(table, cfg);
  table->add_option("--n-max", cfg.n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lommel::cli::kUsage;
  }

  if (eval->parsed()) cfg.command = Command::eval;
  if (zeros->parsed()) cfg.command = Command::zeros;
  if (rayleigh->parsed()) cfg.command = Command::rayleigh;
  if (verify->parsed()) cfg.command = Command::verify;
  if (table->parsed()) cfg.command = Command::table;
  return lommel::cli::run(cfg, std::cout, std::cerr);
}
