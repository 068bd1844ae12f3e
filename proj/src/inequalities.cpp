#include "lommel/inequalities.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "lommel/rayleigh.hpp"
#include "lommel/series.hpp"

namespace lommel {

namespace {

class MarginTally {
 public:
  void nonnegative(double margin, double tol) {
    record(margin);
    if (!(margin >= -tol)) ++violations_;
  }

  void strictly_positive(double margin, double tol) {
    record(margin);
    if (!(margin > tol)) ++violations_;
  }

  void violation() { ++violations_; }

  void finish(CheckReport& r, double tolerance) const {
    r.worst_margin = worst_.value_or(0.0);
    r.violations = violations_;
    r.tolerance = tolerance;
    r.status = violations_ == 0 ? CheckStatus::pass : CheckStatus::fail;
  }

 private:
  void record(double margin) {
    if (!worst_ || !(margin >= *worst_)) worst_ = margin;
  }

  std::optional<double> worst_;
  int violations_ = 0;
};

CheckReport make_report(std::string name, CheckParams params, const GridSpec& g, double tol) {
  CheckReport r(std::move(name), params, g);
  r.tolerance = tol;
  return r;
}

CheckReport not_applicable(CheckReport r, std::string why) {
  r.status = CheckStatus::not_applicable;
  r.worst_margin.reset();
  r.detail = std::move(why);
  return r;
}

double relative_increase(double from, double to) {
  const double scale = std::max({std::fabs(from), std::fabs(to), DBL_MIN});
  return (to - from) / scale;
}

double second_divided_difference(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, Eigen::Index i) {
  const double right = (y(i + 1) - y(i)) / (x(i + 1) - x(i));
  const double left = (y(i) - y(i - 1)) / (x(i) - x(i - 1));
  return 2.0 * (right - left) / (x(i + 1) - x(i - 1));
}

// Second differences of y, normalized by max(1, |y|), strictly positive.
void strict_convexity(MarginTally& tally, const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                      double tol) {
  for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
    tally.strictly_positive(second_divided_difference(x, y, i) / std::max(1.0, std::fabs(y(i))), tol);
  }
}

void require_nonnegative_grid(const GridSpec& g, const char* check) {
  if (g.x_min() < 0.0) {
    throw InvalidParameter(std::string(check) + " is stated on x >= 0; grid starts at " +
                           std::to_string(g.x_min()));
  }
}

void require_inside_first_zero(const GridSpec& g, double eta, const char* check) {
  if (!(std::fabs(g.x_min()) < eta && std::fabs(g.x_max()) < eta)) {
    throw InvalidParameter(std::string(check) + " needs a grid inside (-eta_1, eta_1)");
  }
}

// Selects the nodes of x satisfying pred.
template <typename Pred>
Eigen::ArrayXd select(const Eigen::ArrayXd& x, Pred pred) {
  std::vector<double> kept;
  for (double v : x) {
    if (pred(v)) kept.push_back(v);
  }
  return Eigen::Map<Eigen::ArrayXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
}

CheckParams family_params(const HalfIntFamily& f) {
  CheckParams cp;
  cp.mu = f.mu();
  cp.nu = 0.5;
  return cp;
}

// log(1 - x^2/eta^2) without cancellation at either end.
double log_base_capital(double x, double eta) {
  const double r = (x / eta) * (x / eta);
  if (r < 0.5) return std::log1p(-r);
  return std::log((eta - x) * (eta + x) / (eta * eta));
}

// log((eta^2 + x^2)/(eta^2 - x^2)).
double log_base_lambda(double x, double eta) {
  const double r = (x / eta) * (x / eta);
  return std::log1p(r) - log_base_capital(x, eta);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

std::optional<std::pair<double, int>> first_positive_zero(const HalfIntFamily& f) {
  try {
    const ZeroTable t = find_zeros(f.mu(), 1, 1e-13);
    return std::make_pair(t.zeros(0), t.multiplicity(0));
  } catch (const ScanMiss&) {
    return std::nullopt;
  }
}

double richardson_limit_at_zero(const std::function<double(double)>& fn, int first, int last) {
  if (last <= first) throw InvalidParameter("Richardson needs at least two samples");
  const int n = last - first + 1;
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    table[j][0] = fn(std::ldexp(1.0, -(first + j)));
    double factor = 1.0;
    for (int k = 1; k <= j; ++k) {
      factor *= 4.0;
      table[j][k] = table[j][k - 1] + (table[j][k - 1] - table[j - 1][k - 1]) / (factor - 1.0);
    }
  }
  return table[n - 1][n - 1];
}

double endpoint_ratio_limit(const std::function<double(double)>& p,
                            const std::function<double(double)>& q, double eta, int near, int far) {
  const double xa = eta - std::ldexp(eta, -near);
  const double xb = eta - std::ldexp(eta, -far);
  const double qa = q(xa);
  const double qb = q(xb);
  const double ga = p(xa) / qa;
  const double gb = p(xb) / qb;
  const double sa = 1.0 / qa;
  const double sb = 1.0 / qb;
  return (gb * sa - ga * sb) / (sa - sb);
}

bool ratio_hypothesis(const Params& p, const Params& p1) {
  const double dmu = p1.mu() - p.mu();
  return dmu >= 0.0 && dmu * (p1.mu() + p.mu() + 6.0) >= p1.nu() * p1.nu() - p.nu() * p.nu();
}

CheckReport check_ratio_increasing(const Params& p, const Params& p1, const GridSpec& g,
                                   const CheckTolerances& tol) {
  CheckParams cp;
  cp.mu = p.mu();
  cp.nu = p.nu();
  cp.mu1 = p1.mu();
  cp.nu1 = p1.nu();
  CheckReport r = make_report("thm2.1.i", cp, g, tol.monotone);
  if (!ratio_hypothesis(p, p1)) {
    return not_applicable(std::move(r), "requires mu1 >= mu and (mu1-mu)(mu1+mu+6) >= nu1^2-nu^2");
  }
  require_nonnegative_grid(g, "thm2.1.i");
  const Eigen::ArrayXd x = g.nodes();
  const Eigen::ArrayXd ratio = eval_lambda(p, x) / eval_lambda(p1, x);
  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    tally.nonnegative(relative_increase(ratio(i), ratio(i + 1)), tol.monotone);
  }
  tally.finish(r, tol.monotone);
  return r;
}

CheckReport check_param_monotone_logconvex(double fixed, const GridSpec& param_grid, double x,
                                           ParamAxis which, const CheckTolerances& tol) {
  CheckParams cp;
  if (which == ParamAxis::in_mu) {
    cp.nu = fixed;
  } else {
    cp.mu = fixed;
  }
  cp.x = x;
  CheckReport r = make_report(which == ParamAxis::in_mu ? "thm2.1.ii" : "thm2.1.iii", cp,
                              param_grid, tol.monotone);

  const Eigen::ArrayXd t = param_grid.nodes();
  for (double v : t) {
    const double mu = which == ParamAxis::in_mu ? v : fixed;
    const double nu = which == ParamAxis::in_mu ? fixed : v;
    if (!(mu > -1.0) || !(mu - nu + 3.0 > 0.0) || !(mu + nu + 3.0 > 0.0)) {
      return not_applicable(std::move(r), "requires mu > -1 and mu +- nu + 3 > 0 along the grid");
    }
  }

  Eigen::ArrayXd values(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const Params p = which == ParamAxis::in_mu ? Params(t(i), fixed) : Params(fixed, t(i));
    values(i) = eval_lambda(p, x).value;
  }
  const Eigen::ArrayXd logs = values.log();

  MarginTally tally;
  if (which == ParamAxis::in_mu) {
    for (Eigen::Index i = 0; i + 1 < t.size(); ++i) {
      tally.nonnegative(-relative_increase(values(i), values(i + 1)), tol.monotone);
    }
  }
  for (Eigen::Index i = 1; i + 1 < t.size(); ++i) {
    tally.nonnegative(second_divided_difference(t, logs, i) / std::max(1.0, std::fabs(logs(i))),
                      tol.monotone);
  }
  tally.finish(r, tol.monotone);
  return r;
}

CheckReport check_turan(const Params& p, double a, const GridSpec& g, ParamAxis which,
                        const CheckTolerances& tol) {
  CheckParams cp;
  cp.mu = p.mu();
  cp.nu = p.nu();
  cp.shift = a;
  CheckReport r = make_report(which == ParamAxis::in_mu ? "turan.mu" : "turan.nu", cp, g,
                              tol.monotone);

  const double mu_hi = which == ParamAxis::in_mu ? p.mu() + a : p.mu();
  const double mu_lo = which == ParamAxis::in_mu ? p.mu() - a : p.mu();
  const double nu_hi = which == ParamAxis::in_mu ? p.nu() : p.nu() + a;
  const double nu_lo = which == ParamAxis::in_mu ? p.nu() : p.nu() - a;
  const auto log_convex_region = [](double mu, double nu) {
    return mu > -1.0 && mu - nu + 3.0 > 0.0 && mu + nu + 3.0 > 0.0 && Params::admissible(mu, nu);
  };
  if (!log_convex_region(mu_hi, nu_hi) || !log_convex_region(mu_lo, nu_lo) ||
      !log_convex_region(p.mu(), p.nu())) {
    return not_applicable(std::move(r),
                          "shifted parameters leave the log-convexity region mu > -1, mu +- nu + 3 > 0");
  }
  const Params hi(mu_hi, nu_hi);
  const Params lo(mu_lo, nu_lo);
  const Eigen::ArrayXd x = g.nodes();
  const Eigen::ArrayXd centre = eval_lambda(p, x);
  const Eigen::ArrayXd gap = eval_lambda(hi, x) * eval_lambda(lo, x) - centre.square();
  const Eigen::ArrayXd margin = gap / centre.square();

  MarginTally tally;
  int flat_interior = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    tally.nonnegative(margin(i), tol.monotone);
    if (x(i) != 0.0 && a != 0.0 && !(gap(i) > 0.0)) ++flat_interior;
  }
  tally.finish(r, tol.monotone);
  r.detail = "nodes with zero gap away from x=0: " + std::to_string(flat_interior);
  return r;
}

CheckReport check_cosh_sinh_ratio(const Params& p, int k, const GridSpec& g, Parity parity,
                                  const CheckTolerances& tol) {
  if (k < 0) throw InvalidParameter("k must be non-negative");
  CheckParams cp;
  cp.mu = p.mu();
  cp.nu = p.nu();
  cp.order = parity == Parity::even ? 2 * k : 2 * k + 1;
  CheckReport r = make_report(parity == Parity::even ? "thm2.1.iv" : "thm2.1.v", cp, g, tol.strict);

  const double product = parity == Parity::even ? (p.mu() - p.nu() + 3.0) * (p.mu() + p.nu() + 3.0)
                                                : (p.mu() - p.nu() + 5.0) * (p.mu() + p.nu() + 5.0);
  const double threshold = parity == Parity::even ? 2.0 : 12.0;
  if (!(product > threshold)) {
    return not_applicable(std::move(r), "hypothesis product " + format_double(product) +
                                            " <= " + format_double(threshold));
  }
  if (parity == Parity::odd && !(g.x_min() > 0.0)) {
    throw InvalidParameter("thm2.1.v is stated on x > 0");
  }
  require_nonnegative_grid(g, "thm2.1.iv");

  const int order = *cp.order;
  const Eigen::ArrayXd x = g.nodes();
  Eigen::ArrayXd ratio(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = eval_lambda_derivative(p, order, x(i)).value;
    ratio(i) = d / (parity == Parity::even ? std::cosh(x(i)) : std::sinh(x(i)));
  }
  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double margin = -relative_increase(ratio(i), ratio(i + 1));
    if (x(i) == 0.0) {
      tally.nonnegative(margin, tol.monotone);
    } else {
      tally.strictly_positive(margin, tol.strict);
    }
  }
  tally.finish(r, tol.strict);
  return r;
}

CheckReport check_lambda_increasing(const HalfIntFamily& f, const GridSpec& g,
                                    const CheckTolerances& tol) {
  CheckReport r = make_report("thm3.1", family_params(f), g, tol.strict);
  require_nonnegative_grid(g, "thm3.1");
  const Eigen::ArrayXd x = g.nodes();
  const Eigen::ArrayXd values = eval_lambda(f, x);
  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double margin = relative_increase(values(i), values(i + 1));
    if (x(i) == 0.0) {
      tally.nonnegative(margin, tol.monotone);
    } else {
      tally.strictly_positive(margin, tol.strict);
    }
  }
  int nonpositive_slopes = 0;
  for (double v : x) {
    if (v > 0.0 && !(log_derivative_lambda(f, v) > 0.0)) {
      ++nonpositive_slopes;
      tally.violation();
    }
  }
  tally.finish(r, tol.strict);
  r.detail = "nodes with lambda'/(x lambda) <= 0: " + std::to_string(nonpositive_slopes);
  return r;
}

CheckReport check_logconvex_geomconvex_x(const HalfIntFamily& f, const GridSpec& g,
                                         const CheckTolerances& tol) {
  const auto first = first_positive_zero(f);
  const double eta = first ? first->first : std::numeric_limits<double>::infinity();
  CheckReport r = make_report("thm3.2", family_params(f), g, tol.strict);

  MarginTally tally;
  const Eigen::ArrayXd all = g.nodes();
  const Eigen::ArrayXd inside = select(all, [eta](double v) { return std::fabs(v) < eta; });
  if (inside.size() >= 3) {
    const Eigen::ArrayXd logs = eval_lambda(f, inside).log();
    strict_convexity(tally, inside, logs, tol.strict);
  }
  const Eigen::ArrayXd positive = select(all, [](double v) { return v > 0.0; });
  Eigen::ArrayXd elasticity(positive.size());
  for (Eigen::Index i = 0; i < positive.size(); ++i) {
    const double v = positive(i);
    elasticity(i) = v * eval_lambda_derivative(f, 1, v).value / eval_lambda(f, v).value;
  }
  for (Eigen::Index i = 0; i + 1 < positive.size(); ++i) {
    tally.strictly_positive(relative_increase(elasticity(i), elasticity(i + 1)), tol.strict);
  }
  tally.finish(r, tol.strict);
  r.detail = "log-convexity nodes: " + std::to_string(inside.size()) +
             ", geometric-convexity nodes: " + std::to_string(positive.size());
  if (!first) r.detail += ", no real zero (I_mu = R)";
  return r;
}

CheckReport check_logconvex_geomconvex_x(const HalfIntFamily& f, const ZeroTable& t,
                                         const GridSpec& g, const CheckTolerances& tol) {
  (void)t;
  return check_logconvex_geomconvex_x(f, g, tol);
}

CheckReport check_product_unimodal(const HalfIntFamily& f, const ZeroTable& t, const GridSpec& g,
                                   const CheckTolerances& tol) {
  CheckReport r = make_report("thm3.4", family_params(f), g, tol.monotone);
  if (t.size() < 1) throw InvalidParameter("thm3.4 needs the first zero");
  require_inside_first_zero(g, t.zeros(0), "thm3.4");

  const Eigen::ArrayXd x = g.nodes();
  const Eigen::ArrayXd product = eval_lambda(f, x) * eval_capital_lambda(f, x);
  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double step = relative_increase(product(i), product(i + 1));
    if (x(i + 1) <= 0.0) {
      tally.nonnegative(step, tol.monotone);
    } else if (x(i) >= 0.0) {
      tally.nonnegative(-step, tol.monotone);
    }
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    tally.nonnegative(1.0 - product(i), tol.monotone);
    if (x(i) == 0.0) tally.nonnegative(tol.monotone - std::fabs(product(i) - 1.0), 0.0);
  }
  tally.finish(r, tol.monotone);
  return r;
}

CheckReport check_ratio_logconvex(const HalfIntFamily& f, const GridSpec& g,
                                  const CheckTolerances& tol) {
  CheckReport r = make_report("thm3.5", family_params(f), g, tol.strict);
  if (const auto first = first_positive_zero(f)) {
    const double eta = first->first;
    if (!(std::fabs(g.x_min()) < eta && std::fabs(g.x_max()) < eta)) {
      throw DomainError("thm3.5 grid reaches eta_1 = " + format_double(eta) + "; Lambda vanishes there");
    }
  }
  const Eigen::ArrayXd x = g.nodes();
  Eigen::ArrayXd logs(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double denominator = eval_capital_lambda(f, x(i)).value;
    if (!(denominator > 0.0)) {
      throw DomainError("Lambda <= 0 at x = " + format_double(x(i)) + "; grid left I_mu");
    }
    logs(i) = std::log(eval_lambda(f, x(i)).value) - std::log(denominator);
  }
  MarginTally tally;
  strict_convexity(tally, x, logs, tol.strict);
  tally.finish(r, tol.strict);
  return r;
}

CheckReport redheffer_exponent_lambda(const HalfIntFamily& f, const ZeroTable& t,
                                      const GridSpec& g, const CheckTolerances& tol) {
  CheckReport r = make_report("thm3.3", family_params(f), g, tol.monotone);
  if (t.size() < 1) throw InvalidParameter("thm3.3 needs the first zero");
  const double eta = t.zeros(0);
  if (!(g.x_min() > 0.0 && g.x_max() < eta)) {
    throw InvalidParameter("thm3.3 needs a grid inside (0, eta_1)");
  }
  const auto p = [&](double v) { return std::log1p(eval_lambda_minus_one(f, v).value); };
  const auto q = [&](double v) { return log_base_lambda(v, eta); };

  const double alpha2 = f.reciprocal_square_sum();
  const double b_sharp = eta * eta * alpha2 / 2.0;
  const double b_candidate = 2.0 * eta * eta * alpha2;
  const double b = richardson_limit_at_zero([&](double v) { return p(v) / q(v); });
  const double a = endpoint_ratio_limit(p, q, eta);
  r.limit_lo = a;
  r.limit_hi = b;
  r.expected_lo = 0.0;
  r.expected_hi = b_sharp;
  r.candidate_hi = b_candidate;

  const Eigen::ArrayXd x = g.nodes();
  Eigen::ArrayXd logs(x.size());
  Eigen::ArrayXd bases(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    logs(i) = p(x(i));
    bases(i) = q(x(i));
  }
  const Eigen::ArrayXd ratio = logs / bases;

  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    tally.nonnegative(-relative_increase(ratio(i), ratio(i + 1)), tol.monotone);
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double scale = std::max(1.0, std::fabs(logs(i)));
    tally.nonnegative(logs(i) / scale, tol.monotone);                    // lambda >= Q^0
    tally.nonnegative((b * bases(i) - logs(i)) / scale, tol.monotone);   // lambda <= Q^b
  }
  tally.nonnegative(tol.limit - std::fabs(a), 0.0);
  tally.nonnegative(tol.limit - std::fabs(b - b_sharp), 0.0);
  tally.finish(r, tol.monotone);

  r.detail = "candidate/extrapolated exponent ratio " + format_double(b_candidate / b);
  return r;
}

CheckReport redheffer_exponent_capital(const HalfIntFamily& f, const ZeroTable& t,
                                       const GridSpec& g, const CheckTolerances& tol) {
  CheckReport r = make_report("thm3.6", family_params(f), g, tol.monotone);
  if (t.size() < 1) throw InvalidParameter("thm3.6 needs the first zero");
  const double eta = t.zeros(0);
  if (!(g.x_min() > 0.0 && g.x_max() < eta)) {
    throw InvalidParameter("thm3.6 needs a grid inside (0, eta_1)");
  }
  const auto p = [&](double v) {
    if (std::fabs(v) < 1.0) return std::log1p(eval_capital_lambda_minus_one(f, v).value);
    return std::log(eval_capital_lambda(f, v).value);
  };
  const auto q = [&](double v) { return log_base_capital(v, eta); };

  const double alpha2 = rayleigh_newton_girard(f, 1).sums(0);
  const double hi_expected = eta * eta * alpha2;
  const double hi = richardson_limit_at_zero([&](double v) { return p(v) / q(v); });
  const double lo = endpoint_ratio_limit(p, q, eta);
  const double lo_expected = t.multiplicity(0);
  r.limit_lo = lo;
  r.limit_hi = hi;
  r.expected_lo = lo_expected;
  r.expected_hi = hi_expected;
  r.candidate_hi = 2.0 * eta * eta * f.reciprocal_square_sum();

  const Eigen::ArrayXd x = g.nodes();
  Eigen::ArrayXd logs(x.size());
  Eigen::ArrayXd bases(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    logs(i) = p(x(i));
    bases(i) = q(x(i));
  }
  const Eigen::ArrayXd ratio = logs / bases;

  MarginTally tally;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    tally.nonnegative(-relative_increase(ratio(i), ratio(i + 1)), tol.monotone);
  }
  int candidate_violations = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double scale = std::max(1.0, std::fabs(logs(i)));
    tally.nonnegative((logs(i) - hi * bases(i)) / scale, tol.monotone);  // B^hi <= Lambda
    tally.nonnegative((bases(i) - logs(i)) / scale, tol.monotone);       // Lambda <= B
    // Candidate form: B^0 <= Lambda <= B^(candidate_hi).
    if (logs(i) < 0.0 || logs(i) > *r.candidate_hi * bases(i)) ++candidate_violations;
  }
  tally.nonnegative(tol.limit - std::fabs(lo - lo_expected), 0.0);
  tally.nonnegative(tol.limit - std::fabs(hi - hi_expected), 0.0);
  tally.finish(r, tol.monotone);

  r.detail = "candidate exponents (0, 2 eta^2/((mu+2)(mu+3))) violated at " +
             std::to_string(candidate_violations) + " of " + std::to_string(x.size()) + " nodes";
  return r;
}

}  // namespace lommel
