#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "lommel/error.hpp"

namespace lommel {

/// Brent's bracketed root finder: inverse quadratic interpolation and secant
/// steps, falling back to bisection whenever the interpolant leaves the
/// bracket or converges too slowly. Runs until the bracket is a few ulps
/// wide or an exact zero is hit.
///
/// `fa` and `fb` are the function values at `a` and `b` and must have
/// opposite signs (or one of them is zero).
template <typename F>
double bracketed_root(F&& fn, double a, double b, double fa, double fb, int max_iterations = 200) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw NoSignChange("root bracket has no sign change");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::fabs(b);
    const double half = 0.5 * (c - b);
    if (std::fabs(half) <= tol || fb == 0.0) return b;

    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * half * q - std::fabs(tol * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol ? d : (half > 0.0 ? tol : -tol);
    fb = fn(b);
  }
  throw NumericalFailure("root refinement exceeded the iteration cap");
}

}  // namespace lommel
