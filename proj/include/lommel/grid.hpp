#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "lommel/error.hpp"

namespace lommel {

enum class Spacing { uniform, chebyshev };

/// Evaluation grid on [x_min, x_max]. Chebyshev nodes are the interior
/// first-kind nodes in increasing order.
class GridSpec {
 public:
  GridSpec(double x_min, double x_max, int points, Spacing spacing = Spacing::uniform)
      : x_min_(x_min), x_max_(x_max), points_(points), spacing_(spacing) {
    if (!(x_min < x_max)) throw InvalidParameter("grid requires x_min < x_max");
    if (points < 3) throw InvalidParameter("grid requires at least 3 points");
  }

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int points() const noexcept { return points_; }
  Spacing spacing() const noexcept { return spacing_; }

  Eigen::ArrayXd nodes() const {
    if (spacing_ == Spacing::uniform) {
      Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(points_, x_min_, x_max_);
      x(points_ - 1) = x_max_;
      return x;
    }
    const double mid = 0.5 * (x_min_ + x_max_);
    const double half = 0.5 * (x_max_ - x_min_);
    Eigen::ArrayXd x(points_);
    for (int i = 0; i < points_; ++i) {
      x(i) = mid - half * std::cos(std::numbers::pi * (2.0 * i + 1.0) / (2.0 * points_));
    }
    return x;
  }

 private:
  double x_min_;
  double x_max_;
  int points_;
  Spacing spacing_;
};

}  // namespace lommel
