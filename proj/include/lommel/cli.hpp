#pragma once

// Commands behind the `lommel` executable. Each returns the process exit
// status: 0 all pass (or not_applicable), 1 some check failed, 2 usage or
// parameter error, 3 numerical failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lommel/grid.hpp"
#include "lommel/report.hpp"

namespace lommel::cli {

enum class Command { eval, zeros, rayleigh, verify, table };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  Command command = Command::eval;
  std::vector<double> mu;
  std::vector<double> nu;
  std::optional<double> mu1;
  std::optional<double> nu1;
  std::optional<double> x;  // single evaluation point for eval
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<int> points;
  Spacing spacing = Spacing::uniform;
  std::optional<int> n_max;
  int big_m = 3;
  std::string check = "all";
  Format format = Format::csv;
  std::string out_path;  // empty: the `out` stream passed to run
  std::optional<double> tol;
};

/// Fills `tol` from LOMMEL_TOL when not set; rejects non-positive values.
void apply_environment(RunConfig& cfg);

int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_zeros(const RunConfig& cfg, std::ostream& out);
int cmd_rayleigh(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);

/// Dispatches cfg.command, writing to cfg.out_path or `out`, and maps
/// library errors to exit codes with a message on `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lommel::cli
