#pragma once

// Power-series evaluation of the normalized modified Lommel function lambda,
// the normalized Lommel function Lambda, their derivatives, and the
// unnormalized L and S built from them.
//
// Both normalized functions are the 1F2 series
//
//   sum_n  s^n x^(2n) / ((b1)_n (b2)_n 4^n),
//
// with s = +1 for lambda and s = -1 for Lambda. The summation engine is
// templated on the scalar so tests can rerun any evaluation in a wider type.

#include <Eigen/Core>
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "lommel/compensated.hpp"
#include "lommel/error.hpp"
#include "lommel/params.hpp"

namespace lommel {

using Wide = __float128;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr double unit_roundoff = DBL_EPSILON / 2;
  static constexpr double stop_relative = 1e-16;
};

template <>
struct ScalarTraits<long double> {
  static constexpr long double unit_roundoff = LDBL_EPSILON / 2;
  static constexpr long double stop_relative = 1e-19L;
};

template <>
struct ScalarTraits<Wide> {
  // 2^-113
  static constexpr Wide unit_roundoff =
      Wide(1.0 / 9007199254740992.0) * Wide(1.0 / 9007199254740992.0) *
      Wide(1.0 / 512.0);
  static constexpr Wide stop_relative = Wide(1e-17) * Wide(1e-16);
};

template <typename Scalar>
constexpr Scalar magnitude(Scalar v) {
  return v < Scalar(0) ? -v : v;
}

template <typename Scalar>
constexpr bool is_finite(Scalar v) {
  return v == v && (v - v) == Scalar(0);
}

/// Rising factorial a(a+1)...(a+n-1); the empty product is 1.
template <typename Scalar = double>
constexpr Scalar pochhammer(Scalar a, int n) {
  Scalar result = Scalar(1);
  for (int i = 0; i < n; ++i) result *= a + Scalar(i);
  return result;
}

/// A series value with an absolute error bound covering truncation and
/// floating-point rounding.
template <typename Scalar = double>
struct SeriesValue {
  Scalar value{};
  Scalar error_bound{};
  int terms_used = 1;
};

struct SeriesOptions {
  int min_terms = 0;
  int max_terms = 10000;
};

/// Which member of the series family to sum.
template <typename Scalar>
struct SeriesShape {
  Scalar first_base;
  Scalar second_base;
  int sign = 1;            // +1: lambda, -1: Lambda
  int derivative = 0;      // order k of d^k/dx^k
  bool over_x = false;     // divide the result by x (odd k only)
  bool drop_constant = false;  // omit the n = 0 term (k = 0 only)
};

template <typename Scalar>
SeriesValue<Scalar> sum_series(const SeriesShape<Scalar>& shape, Scalar x,
                               const SeriesOptions& opts = {}) {
  using Traits = ScalarTraits<Scalar>;
  const int k = shape.derivative;
  const int shift = k + (shape.over_x ? 1 : 0);
  if (shape.over_x && k % 2 == 0) {
    throw InvalidParameter("division by x requires an odd derivative order");
  }
  int n = (shift + 1) / 2;
  if (shape.drop_constant) n = std::max(n, 1);
  const int first = n;

  const Scalar b1 = shape.first_base;
  const Scalar b2 = shape.second_base;
  const Scalar x2 = x * x;
  const Scalar s = Scalar(shape.sign);

  // First term: c_n (2n)!/(2n-k)! x^(2n-shift).
  Scalar term = Scalar(1);
  for (int j = 0; j < n; ++j) {
    term *= s / (Scalar(4) * (b1 + Scalar(j)) * (b2 + Scalar(j)));
  }
  for (int j = 0; j < k; ++j) term *= Scalar(2 * n - j);
  for (int j = 0; j < 2 * n - shift; ++j) term *= x;

  CompensatedSum<Scalar> sum;
  Scalar weighted_magnitude = Scalar(0);
  const Scalar min_base = b1 < b2 ? b1 : b2;
  int terms = 0;
  for (;;) {
    sum += term;
    weighted_magnitude += magnitude(term) * Scalar(6 * (n - first) + 4);
    ++terms;

    const Scalar dn = Scalar(n);
    Scalar ratio = s * x2 / (Scalar(4) * (b1 + dn) * (b2 + dn));
    if (k > 0) {
      ratio *= (Scalar(2) * dn + Scalar(2)) * (Scalar(2) * dn + Scalar(1)) /
               ((Scalar(2) * dn + Scalar(2 - k)) * (Scalar(2) * dn + Scalar(1 - k)));
    }
    const Scalar next = term * ratio;
    const Scalar partial = sum.value();
    if (!is_finite(partial) || !is_finite(next)) {
      throw NonConvergence("series overflow at |x| = " +
                           std::to_string(static_cast<double>(magnitude(x))));
    }
    const bool tail_dominated = magnitude(ratio) < Scalar(0.5) &&
                                magnitude(next) <= Traits::stop_relative * magnitude(partial) &&
                                dn + min_base > Scalar(0);
    if (tail_dominated && terms >= opts.min_terms) {
      SeriesValue<Scalar> out;
      out.value = partial;
      out.error_bound = Scalar(2) * magnitude(next) + Traits::unit_roundoff * weighted_magnitude;
      out.terms_used = terms;
      return out;
    }
    if (terms >= opts.max_terms) {
      throw NonConvergence("series did not converge within " +
                           std::to_string(opts.max_terms) + " terms");
    }
    term = next;
    ++n;
  }
}

template <typename Scalar>
SeriesShape<Scalar> lambda_shape(const Params& p, int sign, int derivative = 0) {
  const Scalar mu(p.mu());
  const Scalar nu(p.nu());
  return {(mu - nu + Scalar(3)) / Scalar(2), (mu + nu + Scalar(3)) / Scalar(2), sign, derivative};
}

template <typename Scalar>
SeriesShape<Scalar> lambda_shape(const HalfIntFamily& f, int sign, int derivative = 0) {
  const Scalar mu(f.mu());
  return {(mu + Scalar(2)) / Scalar(2), (mu + Scalar(3)) / Scalar(2), sign, derivative};
}

/// k-th derivative of lambda_{mu,nu} in the requested scalar type.
template <typename Scalar, typename P>
SeriesValue<Scalar> lambda_series(const P& p, Scalar x, int derivative = 0,
                                  const SeriesOptions& opts = {}) {
  return sum_series(lambda_shape<Scalar>(p, +1, derivative), x, opts);
}

/// k-th derivative of the sign-alternated series Lambda in the requested
/// scalar type. Cancellation grows like exp(|x|); see eval_capital_lambda.
template <typename Scalar, typename P>
SeriesValue<Scalar> capital_lambda_series(const P& p, Scalar x, int derivative = 0,
                                          const SeriesOptions& opts = {}) {
  return sum_series(lambda_shape<Scalar>(p, -1, derivative), x, opts);
}

template <typename Scalar>
SeriesValue<double> narrow(const SeriesValue<Scalar>& v) {
  SeriesValue<double> out;
  out.value = static_cast<double>(v.value);
  out.error_bound = static_cast<double>(v.error_bound) +
                    ScalarTraits<double>::unit_roundoff * std::fabs(out.value);
  out.terms_used = v.terms_used;
  return out;
}

// ---------------------------------------------------------------------------
// Double-precision API.

SeriesValue<double> eval_lambda(const Params& p, double x, const SeriesOptions& opts = {});
SeriesValue<double> eval_lambda(const HalfIntFamily& f, double x, const SeriesOptions& opts = {});

SeriesValue<double> eval_lambda_derivative(const Params& p, int k, double x,
                                           const SeriesOptions& opts = {});
SeriesValue<double> eval_lambda_derivative(const HalfIntFamily& f, int k, double x,
                                           const SeriesOptions& opts = {});

/// lambda(x) - 1, accurate for small |x|.
SeriesValue<double> eval_lambda_minus_one(const HalfIntFamily& f, double x);

/// Lambda for general admissible (mu, nu), summed in quadruple precision.
SeriesValue<double> eval_capital_lambda(const Params& p, double x);

/// Lambda_{mu-1/2,1/2}. Quadruple-precision series for |x| up to
/// kAsymptoticThreshold, asymptotic expansion beyond.
SeriesValue<double> eval_capital_lambda(const HalfIntFamily& f, double x);
SeriesValue<double> eval_capital_lambda_derivative(const HalfIntFamily& f, int k, double x);

/// Lambda(x) - 1, accurate for small |x|.
SeriesValue<double> eval_capital_lambda_minus_one(const HalfIntFamily& f, double x);

inline constexpr double kAsymptoticThreshold = 40.0;

/// Large-|x| expansion of Lambda_{mu-1/2,1/2} and its derivatives:
/// Gamma(mu+2) x^(-mu-1) sin(x - mu pi/2) + mu(mu+1) x^-2 sum_j (-1)^j a_j x^(-2j),
/// a_j = prod_{i<=j} (mu-2i)(mu-2i+1).
SeriesValue<double> capital_lambda_asymptotic(const HalfIntFamily& f, int k, double x);

/// Envelope Gamma(mu+2)|x|^(-mu-1) + |mu(mu+1)| x^-2 of the oscillation of Lambda.
double capital_lambda_envelope(const HalfIntFamily& f, double x);

/// L_{mu,nu}(x) = x^(mu+1) lambda(x) / ((mu-nu+1)(mu+nu+1)), x > 0.
double eval_modified_L(const Params& p, double x);

/// S_{mu-1/2,1/2}(x) = x^(mu+1/2) Lambda(x) / (mu(mu+1)), x > 0.
double eval_lommel_S(const HalfIntFamily& f, double x);

/// S_{mu,nu}(x) = x^(mu+1) Lambda_{mu,nu}(x) / ((mu+1)^2 - nu^2), x > 0.
double eval_lommel_S(const Params& p, double x);

struct Residual {
  double value = 0.0;
  double bound = 0.0;  // combined propagated error bound
};

/// L_{mu+2,nu} - ((mu+1)^2 - nu^2) L_{mu,nu} + x^(mu+1).
Residual recurrence_residual_modified(const Params& p, double x);

/// x^2 L'' + x L' - (x^2 + nu^2) L - x^(mu+1) for the modified function.
Residual ode_residual(const Params& p, double x);

/// x^2 S'' + x S' - (1/4 - x^2) S - x^(mu+1/2) for S_{mu-1/2,1/2}.
Residual ode_residual(const HalfIntFamily& f, double x);

// Elementwise overloads over grids.
Eigen::ArrayXd eval_lambda(const Params& p, const Eigen::ArrayXd& x);
Eigen::ArrayXd eval_lambda(const HalfIntFamily& f, const Eigen::ArrayXd& x);
Eigen::ArrayXd eval_capital_lambda(const HalfIntFamily& f, const Eigen::ArrayXd& x);

}  // namespace lommel
