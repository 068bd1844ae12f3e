#include "lommel/rayleigh.hpp"

#include <cmath>

#include "lommel/series.hpp"

namespace lommel {

RayleighTable rayleigh_newton_girard(const HalfIntFamily& f, int M) {
  if (M < 1) throw InvalidParameter("M must be positive");
  RayleighTable table;
  table.mu = f.mu();
  table.M = M;
  table.method = RayleighMethod::newton_girard;
  table.sums = newton_girard_power_sums<double>(f, M);
  table.widths = Eigen::ArrayXd::Zero(M);
  return table;
}

PowerSum rayleigh_from_zeros(const ZeroTable& t, int m, int tail_terms) {
  if (m < 1) throw InvalidParameter("power index m must be positive");
  CompensatedSum<double> partial;
  for (Eigen::Index i = t.size() - 1; i >= 0; --i) {
    partial += t.multiplicity(i) * std::pow(t.zeros(i), -2.0 * m);
  }
  const TailBracket tail = power_sum_tail(t.mu, t.counted(), m, tail_terms);
  return {partial.value() + tail.estimate, tail.width()};
}

RayleighTable rayleigh_from_zeros_table(const ZeroTable& t, int M) {
  if (M < 1) throw InvalidParameter("M must be positive");
  RayleighTable table;
  table.mu = t.mu;
  table.M = M;
  table.method = RayleighMethod::zero_sum;
  table.sums.resize(M);
  table.widths.resize(M);
  for (int m = 1; m <= M; ++m) {
    const PowerSum s = rayleigh_from_zeros(t, m);
    table.sums(m - 1) = s.value;
    table.widths(m - 1) = s.width;
  }
  return table;
}

double product_eval(const HalfIntFamily& f, double x, const ZeroTable& t, bool modified,
                    const ProductOptions& opts) {
  const double y = x * x;
  const double sign = modified ? 1.0 : -1.0;
  double product = 1.0;
  CompensatedSum<double> partial2;
  CompensatedSum<double> partial4;
  for (Eigen::Index i = t.size() - 1; i >= 0; --i) {
    const double r = 1.0 / (t.zeros(i) * t.zeros(i));
    const int mult = t.multiplicity(i);
    for (int j = 0; j < mult; ++j) product *= 1.0 + sign * y * r;
    partial2 += mult * r;
    partial4 += mult * r * r;
  }
  const auto alpha = newton_girard_power_sums<double>(f, 2);
  double log_tail = sign * y * (alpha(0) - partial2.value());
  if (opts.second_order) log_tail -= 0.5 * y * y * (alpha(1) - partial4.value());
  return product * std::exp(log_tail);
}

double log_derivative_lambda(const HalfIntFamily& f, double x) {
  auto shape = lambda_shape<double>(f, +1, 1);
  shape.over_x = true;
  const double slope_over_x = sum_series(shape, x).value;
  return slope_over_x / eval_lambda(f, x).value;
}

}  // namespace lommel
