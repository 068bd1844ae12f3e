#include "lommel/series.hpp"

#include <numbers>

namespace lommel {

namespace {

constexpr double kUnit = ScalarTraits<double>::unit_roundoff;

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) throw InvalidParameter(std::string(what) + " requires x >= 0");
}

// p (p-1) ... (p-i+1)
double falling_factorial(double p, int i) {
  double out = 1.0;
  for (int j = 0; j < i; ++j) out *= p - j;
  return out;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

SeriesValue<double> eval_lambda(const Params& p, double x, const SeriesOptions& opts) {
  return lambda_series<double>(p, x, 0, opts);
}

SeriesValue<double> eval_lambda(const HalfIntFamily& f, double x, const SeriesOptions& opts) {
  return lambda_series<double>(f, x, 0, opts);
}

SeriesValue<double> eval_lambda_derivative(const Params& p, int k, double x,
                                           const SeriesOptions& opts) {
  if (k < 0) throw InvalidParameter("derivative order must be non-negative");
  return lambda_series<double>(p, x, k, opts);
}

SeriesValue<double> eval_lambda_derivative(const HalfIntFamily& f, int k, double x,
                                           const SeriesOptions& opts) {
  if (k < 0) throw InvalidParameter("derivative order must be non-negative");
  return lambda_series<double>(f, x, k, opts);
}

SeriesValue<double> eval_lambda_minus_one(const HalfIntFamily& f, double x) {
  auto shape = lambda_shape<double>(f, +1);
  shape.drop_constant = true;
  return sum_series(shape, x);
}

SeriesValue<double> eval_capital_lambda(const Params& p, double x) {
  return narrow(capital_lambda_series<Wide>(p, Wide(x)));
}

double capital_lambda_envelope(const HalfIntFamily& f, double x) {
  const double mu = f.mu();
  const double ax = std::fabs(x);
  return std::tgamma(mu + 2.0) * std::pow(ax, -mu - 1.0) +
         std::fabs(mu * (mu + 1.0)) / (ax * ax);
}

SeriesValue<double> capital_lambda_asymptotic(const HalfIntFamily& f, int k, double x) {
  if (k < 0) throw InvalidParameter("derivative order must be non-negative");
  const double mu = f.mu();
  const double ax = std::fabs(x);
  if (!(ax > 0.0)) throw InvalidParameter("asymptotic expansion requires x != 0");

  // Oscillatory part, differentiated by Leibniz' rule. The phase is split
  // as sin(x)cos(theta) - cos(x)sin(theta) so no error accrues in x - theta.
  const double gamma = std::tgamma(mu + 2.0);
  const double sx = std::sin(ax);
  const double cx = std::cos(ax);
  double oscillatory = 0.0;
  double oscillatory_magnitude = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double theta = 0.5 * std::numbers::pi * (mu - (k - i));
    const double phase = sx * std::cos(theta) - cx * std::sin(theta);
    const double c = binomial(k, i) * falling_factorial(-mu - 1.0, i) *
                      std::pow(ax, -mu - 1.0 - i);
    oscillatory += c * phase;
    oscillatory_magnitude += std::fabs(c);
  }
  oscillatory *= gamma;
  oscillatory_magnitude *= gamma;

  // Smooth part: mu(mu+1) sum_j (-1)^j a_j x^(-2j-2), summed to its smallest term.
  const double q = mu * (mu + 1.0);
  CompensatedSum<double> smooth;
  double smooth_magnitude = 0.0;
  double a = 1.0;
  double truncation = 0.0;
  int terms = 0;
  double previous = HUGE_VAL;
  for (int j = 0;; ++j) {
    const double power = -2.0 * j - 2.0;
    const double term = (j % 2 == 0 ? 1.0 : -1.0) * a * falling_factorial(power, k) *
                        std::pow(ax, power - k);
    if (std::fabs(term) >= previous) {
      truncation = 2.0 * std::fabs(term);
      break;
    }
    smooth += term;
    smooth_magnitude += std::fabs(term);
    ++terms;
    previous = std::fabs(term);
    a *= (mu - 2.0 * (j + 1)) * (mu - 2.0 * (j + 1) + 1.0);
    if (a == 0.0) break;  // integer mu: the expansion terminates
    if (std::fabs(term) <= 1e-17 * std::fabs(smooth.value())) {
      const double next_power = power - 2.0;
      truncation = 2.0 * std::fabs(a * falling_factorial(next_power, k) *
                                   std::pow(ax, next_power - k));
      break;
    }
    if (terms > 200) break;
  }

  SeriesValue<double> out;
  const double parity = (k % 2 == 1 && x < 0.0) ? -1.0 : 1.0;
  out.value = parity * (oscillatory + q * smooth.value());
  out.error_bound = std::fabs(q) * truncation +
                    8.0 * kUnit * (oscillatory_magnitude + std::fabs(q) * smooth_magnitude);
  out.terms_used = terms;
  return out;
}

SeriesValue<double> eval_capital_lambda(const HalfIntFamily& f, double x) {
  return eval_capital_lambda_derivative(f, 0, x);
}

SeriesValue<double> eval_capital_lambda_derivative(const HalfIntFamily& f, int k, double x) {
  if (k < 0) throw InvalidParameter("derivative order must be non-negative");
  if (std::fabs(x) > kAsymptoticThreshold) return capital_lambda_asymptotic(f, k, x);
  return narrow(capital_lambda_series<Wide>(f, Wide(x), k));
}

SeriesValue<double> eval_capital_lambda_minus_one(const HalfIntFamily& f, double x) {
  if (std::fabs(x) > kAsymptoticThreshold) {
    auto v = capital_lambda_asymptotic(f, 0, x);
    v.value -= 1.0;
    v.error_bound += kUnit;
    return v;
  }
  auto shape = lambda_shape<Wide>(f, -1);
  shape.drop_constant = true;
  return narrow(sum_series(shape, Wide(x)));
}

double eval_modified_L(const Params& p, double x) {
  require_nonnegative(x, "L");
  const double denominator = p.prefactor_denominator();
  if (denominator == 0.0) {
    throw DegeneratePrefactor("(mu-nu+1)(mu+nu+1) vanishes; L is undefined");
  }
  return std::pow(x, p.mu() + 1.0) * eval_lambda(p, x).value / denominator;
}

double eval_lommel_S(const HalfIntFamily& f, double x) {
  const double denominator = f.prefactor_denominator();
  if (denominator == 0.0) throw DegeneratePrefactor("mu(mu+1) vanishes; S is undefined");
  const double exponent = f.mu() + 0.5;
  if (!(x > 0.0) && !(x == 0.0 && exponent > 0.0)) {
    throw InvalidParameter("S_{mu-1/2,1/2} requires x > 0");
  }
  return std::pow(x, exponent) * eval_capital_lambda(f, x).value / denominator;
}

double eval_lommel_S(const Params& p, double x) {
  require_nonnegative(x, "S");
  const double denominator = p.prefactor_denominator();
  if (denominator == 0.0) {
    throw DegeneratePrefactor("(mu+1)^2 - nu^2 vanishes; S is undefined");
  }
  return std::pow(x, p.mu() + 1.0) * eval_capital_lambda(p, x).value / denominator;
}

Residual recurrence_residual_modified(const Params& p, double x) {
  require_nonnegative(x, "recurrence residual");
  const Params shifted(p.mu() + 2.0, p.nu());
  const double d0 = p.prefactor_denominator();
  const double d2 = shifted.prefactor_denominator();
  if (d0 == 0.0 || d2 == 0.0) {
    throw DegeneratePrefactor("recurrence needs nonzero prefactors at mu and mu+2");
  }
  const auto lam0 = eval_lambda(p, x);
  const auto lam2 = eval_lambda(shifted, x);
  const double w = std::pow(x, p.mu() + 1.0);
  const double l0 = w * lam0.value / d0;
  const double l2 = w * x * x * lam2.value / d2;
  const double scaled0 = d0 * l0;

  Residual r;
  r.value = l2 - scaled0 + w;
  r.bound = w * x * x * lam2.error_bound / std::fabs(d2) + w * lam0.error_bound +
            8.0 * kUnit * (std::fabs(l2) + std::fabs(scaled0) + w);
  return r;
}

namespace {

// Residual of x^2 y'' + x y' - (sign x^2 + nu^2) y - w for y = w g / d, w = x^e.
// `sign` is +1 for the modified equation and -1 for the Lommel equation.
template <typename Eval>
Residual product_rule_residual(double exponent, double denominator, double nu_squared,
                               double sign, double x, Eval&& derivative) {
  const auto g0 = derivative(0);
  const auto g1 = derivative(1);
  const auto g2 = derivative(2);
  const double w = std::pow(x, exponent);
  const double w1 = exponent * std::pow(x, exponent - 1.0);
  const double w2 = exponent * (exponent - 1.0) * std::pow(x, exponent - 2.0);

  const double y = w * g0.value / denominator;
  const double y1 = (w1 * g0.value + w * g1.value) / denominator;
  const double y2 = (w2 * g0.value + 2.0 * w1 * g1.value + w * g2.value) / denominator;

  const double x2 = x * x;
  const double a = x2 * y2;
  const double b = x * y1;
  const double c = (sign * x2 + nu_squared) * y;

  Residual r;
  r.value = a + b - c - w;
  const double ad = std::fabs(denominator);
  r.bound = x2 * (std::fabs(w2) * g0.error_bound + 2.0 * std::fabs(w1) * g1.error_bound +
                  w * g2.error_bound) / ad +
            x * (std::fabs(w1) * g0.error_bound + w * g1.error_bound) / ad +
            std::fabs(sign * x2 + nu_squared) * w * g0.error_bound / ad +
            16.0 * kUnit * (std::fabs(a) + std::fabs(b) + std::fabs(c) + w);
  return r;
}

}  // namespace

Residual ode_residual(const Params& p, double x) {
  if (!(x > 0.0)) throw InvalidParameter("ODE residual requires x > 0");
  const double denominator = p.prefactor_denominator();
  if (denominator == 0.0) throw DegeneratePrefactor("L is undefined for these parameters");
  return product_rule_residual(p.mu() + 1.0, denominator, p.nu() * p.nu(), 1.0, x,
                               [&](int k) { return eval_lambda_derivative(p, k, x); });
}

Residual ode_residual(const HalfIntFamily& f, double x) {
  if (!(x > 0.0)) throw InvalidParameter("ODE residual requires x > 0");
  const double denominator = f.prefactor_denominator();
  if (denominator == 0.0) throw DegeneratePrefactor("S is undefined for mu in {0, -1}");
  return product_rule_residual(f.mu() + 0.5, denominator, 0.25, -1.0, x,
                               [&](int k) { return eval_capital_lambda_derivative(f, k, x); });
}

Eigen::ArrayXd eval_lambda(const Params& p, const Eigen::ArrayXd& x) {
  return x.unaryExpr([&](double t) { return eval_lambda(p, t).value; });
}

Eigen::ArrayXd eval_lambda(const HalfIntFamily& f, const Eigen::ArrayXd& x) {
  return x.unaryExpr([&](double t) { return eval_lambda(f, t).value; });
}

Eigen::ArrayXd eval_capital_lambda(const HalfIntFamily& f, const Eigen::ArrayXd& x) {
  return x.unaryExpr([&](double t) { return eval_capital_lambda(f, t).value; });
}

}  // namespace lommel
