#include "lommel/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lommel/compensated.hpp"
#include "lommel/roots.hpp"
#include "lommel/series.hpp"

namespace lommel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStep = kPi / 64.0;

double capital_lambda(const HalfIntFamily& f, double x) {
  return eval_capital_lambda(f, x).value;
}

double capital_lambda_slope(const HalfIntFamily& f, double x) {
  return eval_capital_lambda_derivative(f, 1, x).value;
}

ZeroTable make_table(double mu, int n_max, double tol, const std::vector<double>& zeros,
                     const std::vector<int>& multiplicity) {
  ZeroTable t;
  t.mu = mu;
  t.n_max = n_max;
  t.tol = tol;
  t.zeros = Eigen::Map<const Eigen::ArrayXd>(zeros.data(), static_cast<Eigen::Index>(zeros.size()));
  t.multiplicity =
      Eigen::Map<const Eigen::ArrayXi>(multiplicity.data(), static_cast<Eigen::Index>(multiplicity.size()));
  return t;
}

int sign_of(const SeriesValue<double>& v) {
  if (std::fabs(v.value) <= v.error_bound) return 0;
  return v.value > 0.0 ? 1 : -1;
}

// Scan for sign changes and touching zeros. Below mu = 1 the zeros are about
// pi apart; at mu = 1 they are double and 2 pi apart, and above it there are
// at most finitely many.
ZeroTable scan_zeros(const HalfIntFamily& f, int n_max, double tol) {
  const double periods = f.mu() < 1.0 ? n_max + 2 + f.mu() : 2.0 * n_max + 3.0;
  const double x_end = periods * kPi + 4.0 * kScanStep;
  const int samples = static_cast<int>(std::ceil(x_end / kScanStep));
  std::vector<double> xs(samples);
  std::vector<double> values(samples);
  std::vector<int> signs(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = (i + 1) * kScanStep;
    const auto v = eval_capital_lambda(f, xs[i]);
    values[i] = v.value;
    signs[i] = sign_of(v);
  }

  const auto window_scale = [&](int i) {
    const int half_width = 32;
    double scale = 0.0;
    for (int j = std::max(0, i - half_width); j <= std::min(samples - 1, i + half_width); ++j) {
      scale = std::max(scale, std::fabs(values[j]));
    }
    return scale;
  };
  const auto lambda_fn = [&](double x) { return capital_lambda(f, x); };
  const auto slope_fn = [&](double x) { return capital_lambda_slope(f, x); };

  std::vector<double> zeros;
  std::vector<int> multiplicity;
  const auto push = [&](double x, int m) {
    zeros.push_back(x);
    multiplicity.push_back(m);
  };

  // Root of Lambda' between two samples, accepted as a double zero when
  // Lambda nearly vanishes there.
  const auto try_touching = [&](int lo, int hi, int centre) {
    const double d_lo = slope_fn(xs[lo]);
    const double d_hi = slope_fn(xs[hi]);
    if ((d_lo > 0.0) == (d_hi > 0.0)) return;
    const double xm = bracketed_root(slope_fn, xs[lo], xs[hi], d_lo, d_hi);
    if (std::fabs(lambda_fn(xm)) <= std::sqrt(tol) * window_scale(centre)) push(xm, 2);
  };

  for (int i = 1; i + 1 < samples && static_cast<int>(zeros.size()) < n_max; ++i) {
    if (signs[i - 1] != 0 && signs[i] != 0 && signs[i - 1] != signs[i]) {
      push(refine_zero(f, {xs[i - 1], xs[i], static_cast<int>(zeros.size()) + 1}, tol), 1);
      continue;
    }
    if (signs[i] == 0 && signs[i - 1] != 0) {
      int j = i;
      while (j < samples && signs[j] == 0) ++j;
      if (j == samples) break;
      if (signs[j] != signs[i - 1]) {
        const double root = bracketed_root(lambda_fn, xs[i - 1], xs[j], values[i - 1], values[j]);
        push(root, 1);
      } else {
        try_touching(i - 1, j, i);
      }
      i = j - 1;
      continue;
    }
    const bool local_minimum = signs[i] != 0 && signs[i - 1] == signs[i] &&
                               signs[i + 1] == signs[i] &&
                               std::fabs(values[i]) < std::fabs(values[i - 1]) &&
                               std::fabs(values[i]) <= std::fabs(values[i + 1]);
    if (local_minimum) try_touching(i - 1, i + 1, i);
  }

  ZeroTable t = make_table(f.mu(), n_max, tol, zeros, multiplicity);
  if (t.size() < n_max) {
    const std::string what = "scan found " + std::to_string(t.size()) + " of " +
                             std::to_string(n_max) + " requested zeros for mu=" +
                             std::to_string(f.mu());
    throw ScanMiss(what, std::move(t));
  }
  return t;
}

// integral_{a}^{inf} ((x + offset) pi)^(-2m) dx
double tail_integral(double a, double offset, int m) {
  return std::pow(a + offset, 1.0 - 2.0 * m) / ((2.0 * m - 1.0) * std::pow(kPi, 2.0 * m));
}

}  // namespace

std::vector<BracketInterval> bracket_intervals(double mu, int n_max) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw InvalidParameter("interval localization holds for mu in (0, 1), got " + std::to_string(mu));
  }
  if (n_max < 0) throw InvalidParameter("n_max must be non-negative");
  std::vector<BracketInterval> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) {
    if (k % 2 == 1) {
      out.push_back({(k + 0.5 * mu) * kPi, (k + mu) * kPi, k});
    } else {
      out.push_back({k * kPi, (k + 0.5 * mu) * kPi, k});
    }
  }
  return out;
}

double bracket_scale(const HalfIntFamily& f, const BracketInterval& b) {
  double scale = 0.0;
  constexpr int samples = 17;
  for (int i = 0; i < samples; ++i) {
    const double x = b.lower + (b.upper - b.lower) * i / (samples - 1);
    scale = std::max(scale, std::fabs(capital_lambda(f, x)));
  }
  return scale;
}

double refine_zero(const HalfIntFamily& f, const BracketInterval& b, double tol) {
  if (!(b.lower < b.upper)) throw InvalidParameter("bracket must satisfy lower < upper");
  const auto fn = [&](double x) { return capital_lambda(f, x); };
  const double fa = fn(b.lower);
  const double fb = fn(b.upper);
  if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0)) {
    throw NoSignChange("Lambda keeps its sign on [" + std::to_string(b.lower) + ", " +
                       std::to_string(b.upper) + "]; zero is multiple or absent");
  }
  const double eta = bracketed_root(fn, b.lower, b.upper, fa, fb);
  const double scale = bracket_scale(f, b);
  if (std::fabs(fn(eta)) > tol * scale) {
    throw NumericalFailure("zero " + std::to_string(b.index) + " residual exceeds tolerance");
  }
  return eta;
}

ZeroTable find_zeros(double mu, int n_max, double tol) {
  if (n_max < 0) throw InvalidParameter("n_max must be non-negative");
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  const HalfIntFamily f(mu);
  if (n_max == 0) return make_table(mu, 0, tol, {}, {});
  if (mu > 0.0 && mu < 1.0) {
    std::vector<double> zeros;
    zeros.reserve(static_cast<std::size_t>(n_max));
    for (const auto& b : bracket_intervals(mu, n_max)) zeros.push_back(refine_zero(f, b, tol));
    return make_table(mu, n_max, tol, zeros, std::vector<int>(zeros.size(), 1));
  }
  return scan_zeros(f, n_max, tol);
}

TailBracket power_sum_tail(double mu, int counted, int m, int explicit_terms) {
  if (m < 1) throw InvalidParameter("power index m must be positive");
  if (counted < 0 || explicit_terms < 0) throw InvalidParameter("tail counts must be non-negative");
  // eta_n lies in [(n + lo) pi, (n + hi) pi] beyond the table.
  const bool localized = mu > 0.0 && mu <= 1.0;
  const double lo = localized ? 0.0 : -1.0;
  const double hi = 1.0;
  const double centre = 0.5 * mu;
  const auto term = [m](double position) { return std::pow(position * kPi, -2.0 * m); };

  CompensatedSum<double> estimate;
  CompensatedSum<double> lower;
  CompensatedSum<double> upper;
  const int last = counted + explicit_terms;
  estimate += tail_integral(last + 0.5, centre, m);
  lower += tail_integral(last + 1.0, hi, m);
  upper += tail_integral(static_cast<double>(last), lo, m);
  for (int n = last; n > counted; --n) {
    estimate += term(n + centre);
    lower += term(n + hi);
    upper += term(std::max(n + lo, 0.5));
  }
  return {estimate.value(), lower.value(), upper.value()};
}

IdentityCheck verify_reciprocal_square_sum(const ZeroTable& t, int tail_n) {
  const HalfIntFamily f(t.mu);
  CompensatedSum<double> partial;
  for (Eigen::Index i = t.size() - 1; i >= 0; --i) {
    partial += t.multiplicity(i) / (t.zeros(i) * t.zeros(i));
  }
  const TailBracket tail = power_sum_tail(t.mu, t.counted(), 1, tail_n);

  IdentityCheck out;
  out.partial_sum = partial.value();
  out.tail_estimate = tail.estimate;
  out.tail_width = tail.width();
  out.target = f.reciprocal_square_sum();
  out.discrepancy = std::fabs(out.partial_sum + out.tail_estimate - out.target);
  return out;
}

}  // namespace lommel
