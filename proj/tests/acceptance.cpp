// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lommel/inequalities.hpp"
#include "lommel/rayleigh.hpp"
#include "lommel/series.hpp"
#include "lommel/verify.hpp"
#include "lommel/zeros.hpp"

using namespace lommel;

namespace {

// Tolerances pinned by the acceptance criteria.
constexpr double kClosedFormTol = 1e-12;     // times cosh(x)
constexpr double kResidualTol = 1e-8;        // times max(1, x^(mu+1))
constexpr double kIdentityTol50 = 1e-4;
constexpr double kIdentityTol500 = 1e-6;
constexpr double kNewtonGirardTol = 1e-14;
constexpr double kRegressionTol = 1e-12;
constexpr double kZeroResidualTol = 1e-10;   // times local scale
constexpr double kLimitTol = 1e-6;
constexpr double kProductTol = 1e-6;

struct Result {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "; failed:";
      note << ' ' << what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, Result& r) {
  std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title
            << r.note.str() << std::endl;
  if (!r.pass) ++failures;
}

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3e", v);
  return b;
}

template <typename Fn>
void guarded(int number, const std::string& title, Fn&& body) {
  Result r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  report(number, title, r);
}

void closed_forms(Result& r) {
  const Params sinh_case(-0.5, -0.5);
  const Params cosh_case(0.5, 0.5);
  const HalfIntFamily cos_case(1.0);
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = 0.01 * i;
    const double x2 = x * x;
    const double sinhc = x == 0.0 ? 1.0 : std::sinh(x) / x;
    // cosh x - 1 = 2 sinh^2(x/2) and 1 - cos x = 2 sin^2(x/2), free of cancellation.
    const double sh = std::sinh(0.5 * x);
    const double sn = std::sin(0.5 * x);
    const double coshf = x == 0.0 ? 1.0 : 4.0 * sh * sh / x2;
    const double cosf = x == 0.0 ? 1.0 : 4.0 * sn * sn / x2;
    const double scale = std::cosh(x);
    worst = std::max({worst, std::fabs(eval_lambda(sinh_case, x).value - sinhc) / scale,
                      std::fabs(eval_lambda(cosh_case, x).value - coshf) / scale,
                      std::fabs(eval_capital_lambda(cos_case, x).value - cosf) / scale});
  }
  r.note << " worst |error|/cosh = " << num(worst);
  r.require(worst <= kClosedFormTol, "closed-form bound");
}

void residuals(Result& r) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> mu_d(-0.9, 3.0);
  std::uniform_real_distribution<double> nu_d(-2.0, 2.0);
  std::uniform_real_distribution<double> x_d(0.0, 10.0);
  double worst = 0.0;
  int points = 0;
  while (points < 100) {
    const double mu = mu_d(rng);
    const double nu = nu_d(rng);
    const double x = 10.0 - x_d(rng);  // (0, 10]
    if (!Params::admissible(mu, nu)) continue;
    const Params p(mu, nu);
    const Params shifted(mu + 2.0, nu);
    if (std::fabs(p.prefactor_denominator()) < 0.1 ||
        std::fabs(shifted.prefactor_denominator()) < 0.1) {
      continue;
    }
    const double scale = std::max(1.0, std::pow(x, mu + 1.0));
    worst = std::max({worst, std::fabs(ode_residual(p, x).value) / scale,
                      std::fabs(recurrence_residual_modified(p, x).value) / scale});
    ++points;
  }
  r.note << " 100 random points, worst scaled residual = " << num(worst);
  r.require(worst <= kResidualTol, "residual bound");
}

void identity(Result& r) {
  for (double mu : {0.25, 0.5, 0.75}) {
    const HalfIntFamily f(mu);
    const double d50 = verify_reciprocal_square_sum(find_zeros(mu, 50, 1e-12)).discrepancy;
    const double d500 = verify_reciprocal_square_sum(find_zeros(mu, 500, 1e-12)).discrepancy;
    const double ng = std::fabs(rayleigh_newton_girard(f, 1).sums(0) - f.reciprocal_square_sum());
    r.note << " mu=" << mu << ": " << num(d50) << "/" << num(d500) << "/" << num(ng);
    r.require(d50 <= kIdentityTol50, "n_max=50");
    r.require(d500 <= kIdentityTol500, "n_max=500");
    r.require(ng <= kNewtonGirardTol, "Newton-Girard m=1");
  }
}

void rayleigh_cross(Result& r) {
  for (double mu : {0.25, 0.5, 0.75}) {
    const HalfIntFamily f(mu);
    const RayleighTable ng = rayleigh_newton_girard(f, 3);
    const RayleighTable zs = rayleigh_from_zeros_table(find_zeros(mu, 200, 1e-12), 3);
    for (int m = 0; m < 3; ++m) {
      const double diff = std::fabs(ng.sums(m) - zs.sums(m));
      r.require(diff <= zs.widths(m), "mu=" + std::to_string(mu) + " m=" + std::to_string(m + 1));
    }
  }
  const RayleighTable one = rayleigh_newton_girard(HalfIntFamily(1.0), 2);
  const double e2 = std::fabs(one.sums(0) - 1.0 / 12.0);
  const double e4 = std::fabs(one.sums(1) - 1.0 / 720.0);
  r.note << " mu=1 regression errors " << num(e2) << ", " << num(e4);
  r.require(e2 <= kRegressionTol && e4 <= kRegressionTol, "mu=1 regression");
}

void localization(Result& r) {
  double worst = 0.0;
  for (double mu : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const HalfIntFamily f(mu);
    const ZeroTable t = find_zeros(mu, 10, 1e-12);
    const auto brackets = bracket_intervals(mu, 10);
    for (int i = 0; i < 10; ++i) {
      const double eta = t.zeros(i);
      r.require(eta > brackets[i].lower && eta < brackets[i].upper,
                "mu=" + std::to_string(mu) + " zero " + std::to_string(i + 1) + " outside bracket");
      worst = std::max(worst, std::fabs(eval_capital_lambda(f, eta).value) /
                                  bracket_scale(f, brackets[i]));
    }
  }
  r.note << " worst residual/local scale = " << num(worst);
  r.require(worst <= kZeroResidualTol, "residual");
}

bool hypothesis_holds(const CheckReport& c) {
  const std::string& n = c.check_name;
  if (n == "thm2.1.i") {
    const double dmu = *c.params.mu1 - *c.params.mu;
    return dmu >= 0.0 &&
           dmu * (*c.params.mu1 + *c.params.mu + 6.0) >= *c.params.nu1 * *c.params.nu1 -
                                                            *c.params.nu * *c.params.nu;
  }
  if (n == "thm2.1.iv" || n == "thm2.1.v") {
    const double shift = n == "thm2.1.iv" ? 3.0 : 5.0;
    const double bound = n == "thm2.1.iv" ? 2.0 : 12.0;
    return (*c.params.mu - *c.params.nu + shift) * (*c.params.mu + *c.params.nu + shift) > bound;
  }
  if (n == "turan.mu" || n == "turan.nu") {
    const double a = *c.params.shift;
    const double mu = *c.params.mu;
    const double nu = *c.params.nu;
    const auto ok = [](double m, double v) { return m > -1.0 && m - v + 3.0 > 0.0 && m + v + 3.0 > 0.0; };
    return n == "turan.mu" ? ok(mu - a, nu) && ok(mu + a, nu) : ok(mu, nu - a) && ok(mu, nu + a);
  }
  return true;  // thm2.1.ii/iii: the corpus stays inside mu +- nu + 3 > 0
}

void parameter_inequalities(Result& r) {
  VerifyCorpus c = VerifyCorpus::defaults();
  int rows = 0;
  int na = 0;
  for (const char* name :
       {"thm2.1.i", "thm2.1.ii", "thm2.1.iii", "thm2.1.iv", "thm2.1.v", "turan.mu", "turan.nu"}) {
    for (const auto& rep : run_verification(name, c)) {
      ++rows;
      const bool hyp = hypothesis_holds(rep);
      if (rep.status == CheckStatus::not_applicable) {
        ++na;
        r.require(!hyp, std::string(name) + " not_applicable although hypothesis holds");
      } else {
        r.require(hyp, std::string(name) + " evaluated although hypothesis fails");
        r.require(rep.status == CheckStatus::pass && rep.violations == 0,
                  std::string(name) + " violation");
      }
      r.require(rep.tolerance <= 1e-9, "tolerance");
    }
  }
  r.note << " " << rows << " rows, " << na << " not_applicable";
}

void redheffer_lambda(Result& r) {
  for (double mu : {0.25, 0.5, 0.75, 1.0}) {
    const HalfIntFamily f(mu);
    const ZeroTable t = find_zeros(mu, 1, 1e-13);
    const double eta = t.zeros(0);
    const GridSpec g(eta / 512, 0.995 * eta, 512);
    const CheckReport rep = redheffer_exponent_lambda(f, t, g);
    const double sharp = eta * eta / (2.0 * (mu + 2.0) * (mu + 3.0));
    const double candidate = 2.0 * eta * eta / ((mu + 2.0) * (mu + 3.0));
    const double b = *rep.limit_hi;
    r.require(rep.status == CheckStatus::pass, "mu=" + std::to_string(mu) + " report");
    r.require(std::fabs(b - sharp) <= kLimitTol, "b vs eta^2/(2(mu+2)(mu+3))");
    r.require(std::fabs(*rep.limit_lo) <= kLimitTol, "a vs 0");
    r.require(std::fabs(candidate / b - 4.0) <= kLimitTol, "candidate/b ratio");
    r.require(std::fabs(b - candidate) > kLimitTol, "candidate value not distinguished");
    // Sandwich recomputed directly.
    for (double x : g.nodes()) {
      const double lam = eval_lambda(f, x).value;
      const double base = (eta * eta + x * x) / ((eta - x) * (eta + x));
      r.require(lam >= 1.0 && std::log(lam) <= b * std::log(base) * (1.0 + 1e-12), "sandwich");
    }
    if (mu == 1.0) r.note << " mu=1 b=" << b;
  }
  r.note << "; candidate 2 eta^2/((mu+2)(mu+3)) is 4x the extrapolated limit (inconsistency found)";
}

void redheffer_capital(Result& r) {
  for (double mu : {0.25, 0.5, 0.75}) {
    const HalfIntFamily f(mu);
    const ZeroTable t = find_zeros(mu, 1, 1e-13);
    const double eta = t.zeros(0);
    const GridSpec g(eta / 512, 0.995 * eta, 512);
    const CheckReport rep = redheffer_exponent_capital(f, t, g);
    const double hi = eta * eta / ((mu + 2.0) * (mu + 3.0));
    r.require(rep.status == CheckStatus::pass, "mu=" + std::to_string(mu) + " report");
    r.require(std::fabs(*rep.limit_lo - 1.0) <= kLimitTol, "limit at eta_1");
    r.require(std::fabs(*rep.limit_hi - hi) <= kLimitTol, "limit at 0");
    for (double x : g.nodes()) {
      const double cap = eval_capital_lambda(f, x).value;
      const double base = (eta - x) * (eta + x) / (eta * eta);
      r.require(cap <= base * (1.0 + 1e-12) && std::log(cap) >= hi * std::log(base) * (1.0 + 1e-12),
                "sandwich");
    }
    r.note << " mu=" << mu << " lo-1=" << num(*rep.limit_lo - 1.0)
           << " hi-target=" << num(*rep.limit_hi - hi);
  }
}

void product_agreement(Result& r) {
  double worst = 0.0;
  for (double mu : {0.25, 0.5, 0.75, 1.0}) {
    const HalfIntFamily f(mu);
    const ZeroTable t = find_zeros(mu, 200, 1e-12);
    const GridSpec g(0.0, 0.95 * t.zeros(0), 200);
    for (double x : g.nodes()) {
      const double ls = eval_lambda(f, x).value;
      const double cs = eval_capital_lambda(f, x).value;
      worst = std::max({worst, std::fabs(product_eval(f, x, t, true) - ls) / ls,
                        std::fabs(product_eval(f, x, t, false) - cs) / std::fabs(cs)});
    }
  }
  r.note << " worst relative difference = " << num(worst);
  r.require(worst <= kProductTol, "relative agreement");
}

int run_to_file(const std::string& path) {
  const std::string cmd = std::string(LOMMEL_CLI_PATH) + " verify --check all --out " + path;
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Result& r) {
  const std::string a = "acceptance_verify_a.csv";
  const std::string b = "acceptance_verify_b.csv";
  const int sa = run_to_file(a);
  const int sb = run_to_file(b);
  const std::string ca = slurp(a);
  const std::string cb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  r.note << " exit statuses " << sa << "/" << sb << ", " << ca.size() << " bytes";
  r.require(sa == 0 && sb == 0, "exit status");
  r.require(!ca.empty() && ca == cb, "byte-identical output");
}

}  // namespace

int main() {
  guarded(1, "closed forms", closed_forms);
  guarded(2, "ODE and recurrence residuals", residuals);
  guarded(3, "reciprocal-square-sum identity", identity);
  guarded(4, "Rayleigh sums by two methods", rayleigh_cross);
  guarded(5, "zero localization", localization);
  guarded(6, "parameter and Turan inequalities", parameter_inequalities);
  guarded(7, "Redheffer bound for lambda", redheffer_lambda);
  guarded(8, "Redheffer bound for Lambda", redheffer_capital);
  guarded(9, "product against series", product_agreement);
  guarded(10, "CLI determinism", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
