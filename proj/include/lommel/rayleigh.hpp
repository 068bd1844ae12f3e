#pragma once

#include <Eigen/Core>

#include "lommel/compensated.hpp"
#include "lommel/params.hpp"
#include "lommel/zeros.hpp"

namespace lommel {

enum class RayleighMethod { newton_girard, zero_sum };

/// Power sums alpha^(2m) = sum_n eta_n^(-2m) for m = 1..M, stored at index m-1.
struct RayleighTable {
  double mu = 0.0;
  Eigen::ArrayXd sums;
  Eigen::ArrayXd widths;  // tail bracketing widths; zero for newton_girard
  RayleighMethod method = RayleighMethod::newton_girard;
  int M = 0;
};

/// Coefficients c_0..c_M of Lambda in powers of x^2:
/// c_m = (-1)^m / (((mu+2)/2)_m ((mu+3)/2)_m 4^m).
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> lambda_coefficients(const HalfIntFamily& f, int M) {
  const Scalar b1 = (Scalar(f.mu()) + Scalar(2)) / Scalar(2);
  const Scalar b2 = (Scalar(f.mu()) + Scalar(3)) / Scalar(2);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> c(M + 1);
  c(0) = Scalar(1);
  for (int m = 1; m <= M; ++m) {
    c(m) = -c(m - 1) / (Scalar(4) * (b1 + Scalar(m - 1)) * (b2 + Scalar(m - 1)));
  }
  return c;
}

/// Newton-Girard on the x^2-variable product: with p_m = alpha^(2m),
/// p_m = -m c_m - sum_{j<m} c_{m-j} p_j. Counts zeros with multiplicity.
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> newton_girard_power_sums(const HalfIntFamily& f, int M) {
  const auto c = lambda_coefficients<Scalar>(f, M);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> p(M);
  for (int m = 1; m <= M; ++m) {
    CompensatedSum<Scalar> acc(-Scalar(m) * c(m));
    for (int j = 1; j < m; ++j) acc -= c(m - j) * p(j - 1);
    p(m - 1) = acc.value();
  }
  return p;
}

RayleighTable rayleigh_newton_girard(const HalfIntFamily& f, int M);

struct PowerSum {
  double value = 0.0;
  double width = 0.0;  // the true sum lies within +-width of value
};

/// sum over the table (with multiplicity) plus an estimated tail.
PowerSum rayleigh_from_zeros(const ZeroTable& t, int m, int tail_terms = 1000);

RayleighTable rayleigh_from_zeros_table(const ZeroTable& t, int M);

struct ProductOptions {
  bool second_order = false;  // also correct with the alpha^(4) tail
};

/// Truncated Hadamard product over the table, corrected by the Rayleigh tail:
/// prod (1 +- x^2/eta_n^2) * exp(+-x^2 (alpha^(2) - sum_n eta_n^-2)).
/// `modified` selects lambda (+) or Lambda (-).
double product_eval(const HalfIntFamily& f, double x, const ZeroTable& t, bool modified,
                    const ProductOptions& opts = {});

/// lambda'(x) / (x lambda(x)); at x = 0 the limit 2/((mu+2)(mu+3)).
double log_derivative_lambda(const HalfIntFamily& f, double x);

}  // namespace lommel
