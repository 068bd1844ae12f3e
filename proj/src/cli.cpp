#include "lommel/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lommel/rayleigh.hpp"
#include "lommel/series.hpp"
#include "lommel/verify.hpp"
#include "lommel/zeros.hpp"

namespace lommel::cli {

namespace {

constexpr double kDefaultZeroTol = 1e-12;

double first_or_throw(const std::vector<double>& v, const char* flag) {
  if (v.empty()) throw InvalidParameter(std::string(flag) + " is required for this command");
  return v.front();
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

// Value of fn, or null if the prefactor degenerates or x is outside its domain.
template <typename Fn>
Cell guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const DegeneratePrefactor&) {
    return std::monostate{};
  } catch (const InvalidParameter&) {
    return std::monostate{};
  }
}

Eigen::ArrayXd eval_nodes(const RunConfig& cfg, double lo, double hi, int points) {
  if (cfg.x) return Eigen::ArrayXd::Constant(1, *cfg.x);
  return GridSpec(cfg.x_min.value_or(lo), cfg.x_max.value_or(hi), cfg.points.value_or(points),
                  cfg.spacing)
      .nodes();
}

void write_zero_rows(const ZeroTable& t, std::ostream& out, Format format) {
  Table table;
  table.columns = {"n", "eta", "bracket_lo", "bracket_hi", "residual", "local_scale",
                   "multiplicity"};
  const HalfIntFamily f(t.mu);
  const bool localized = t.mu > 0.0 && t.mu < 1.0;
  const auto brackets = localized ? bracket_intervals(t.mu, t.size()) : std::vector<BracketInterval>{};
  for (int i = 0; i < t.size(); ++i) {
    const double eta = t.zeros(i);
    std::optional<double> lo;
    std::optional<double> hi;
    BracketInterval local{eta - 0.5, eta + 0.5, i + 1};
    if (localized) {
      lo = brackets[i].lower;
      hi = brackets[i].upper;
      local = brackets[i];
    }
    table.rows.push_back({static_cast<long long>(i + 1), eta, optional_cell(lo), optional_cell(hi),
                          eval_capital_lambda(f, eta).value, bracket_scale(f, local),
                          static_cast<long long>(t.multiplicity(i))});
  }
  write_table(out, table, format);
}

}  // namespace

void apply_environment(RunConfig& cfg) {
  if (!cfg.tol) {
    if (const char* env = std::getenv("LOMMEL_TOL"); env && *env) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw InvalidParameter("LOMMEL_TOL is not a number");
      cfg.tol = v;
    }
  }
  if (cfg.tol && !(*cfg.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Params p(first_or_throw(cfg.mu, "--mu"), first_or_throw(cfg.nu, "--nu"));
  const Eigen::ArrayXd x = eval_nodes(cfg, 0.0, 10.0, 101);
  Table table;
  table.columns = {"x", "lambda", "Lambda", "L", "S", "lambda_error_bound", "Lambda_error_bound"};
  for (double v : x) {
    const auto lam = eval_lambda(p, v);
    const auto cap = eval_capital_lambda(p, v);
    table.rows.push_back({v, lam.value, cap.value, guarded([&] { return eval_modified_L(p, v); }),
                          guarded([&] { return eval_lommel_S(p, v); }), lam.error_bound,
                          cap.error_bound});
  }
  write_table(out, table, cfg.format);
  return kOk;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
  const double mu = first_or_throw(cfg.mu, "--mu");
  try {
    const ZeroTable t = find_zeros(mu, cfg.n_max.value_or(10), cfg.tol.value_or(kDefaultZeroTol));
    write_zero_rows(t, out, cfg.format);
  } catch (const ScanMiss& miss) {
    write_zero_rows(miss.partial(), out, cfg.format);
    throw;
  }
  return kOk;
}

int cmd_rayleigh(const RunConfig& cfg, std::ostream& out) {
  const HalfIntFamily f(first_or_throw(cfg.mu, "--mu"));
  const RayleighTable ng = rayleigh_newton_girard(f, cfg.big_m);
  Table table;
  table.columns = {"m", "alpha_newton_girard", "alpha_zeros", "abs_diff", "tail_width"};
  const auto emit = [&](const RayleighTable* zs) {
    for (int m = 1; m <= cfg.big_m; ++m) {
      std::vector<Cell> row{static_cast<long long>(m), ng.sums(m - 1)};
      if (zs) {
        row.emplace_back(zs->sums(m - 1));
        row.emplace_back(std::fabs(zs->sums(m - 1) - ng.sums(m - 1)));
        row.emplace_back(zs->widths(m - 1));
      } else {
        row.insert(row.end(), 3, std::monostate{});
      }
      table.rows.push_back(std::move(row));
    }
    write_table(out, table, cfg.format);
  };
  try {
    const ZeroTable t = find_zeros(f.mu(), cfg.n_max.value_or(200), cfg.tol.value_or(kDefaultZeroTol));
    const RayleighTable zs = rayleigh_from_zeros_table(t, cfg.big_m);
    emit(&zs);
  } catch (const ScanMiss&) {
    emit(nullptr);
    throw;
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const HalfIntFamily f(first_or_throw(cfg.mu, "--mu"));
  const ZeroTable t = find_zeros(f.mu(), cfg.n_max.value_or(200), cfg.tol.value_or(kDefaultZeroTol));
  const Eigen::ArrayXd x = eval_nodes(cfg, 0.0, 0.95 * t.zeros(0), 101);
  Table table;
  table.columns = {"x", "lambda_series", "lambda_product", "lambda_rel_diff",
                   "Lambda_series", "Lambda_product", "Lambda_rel_diff"};
  for (double v : x) {
    const double ls = eval_lambda(f, v).value;
    const double lp = product_eval(f, v, t, true);
    const double cs = eval_capital_lambda(f, v).value;
    const double cp = product_eval(f, v, t, false);
    table.rows.push_back({v, ls, lp, std::fabs(lp - ls) / std::fabs(ls), cs, cp,
                          std::fabs(cp - cs) / std::fabs(cs)});
  }
  write_table(out, table, cfg.format);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!is_known_check(cfg.check)) throw InvalidParameter("unknown check: " + cfg.check);
  VerifyCorpus corpus = VerifyCorpus::defaults();
  if (!cfg.mu.empty()) {
    corpus.mu = cfg.mu;
    corpus.family_mu = cfg.mu;
  }
  if (!cfg.nu.empty()) corpus.nu = cfg.nu;
  corpus.mu1 = cfg.mu1;
  corpus.nu1 = cfg.nu1;
  corpus.x_min = cfg.x_min;
  corpus.x_max = cfg.x_max;
  if (cfg.points) corpus.points = *cfg.points;
  corpus.spacing = cfg.spacing;
  if (cfg.tol) corpus.tol.monotone = *cfg.tol;

  const auto reports = run_verification(cfg.check, corpus);
  write_table(out, check_table(reports), cfg.format);
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) return kCheckFailed;
  }
  return kOk;
}

int run(const RunConfig& cfg_in, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = cfg_in;
    apply_environment(cfg);
    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) throw InvalidParameter("cannot open " + cfg.out_path);
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;
    switch (cfg.command) {
      case Command::eval:
        return cmd_eval(cfg, sink);
      case Command::zeros:
        return cmd_zeros(cfg, sink);
      case Command::rayleigh:
        return cmd_rayleigh(cfg, sink);
      case Command::verify:
        return cmd_verify(cfg, sink);
      case Command::table:
        return cmd_table(cfg, sink);
    }
    return kUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace lommel::cli
