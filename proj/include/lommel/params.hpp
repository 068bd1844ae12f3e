#pragma once

#include <cmath>
#include <string>

#include "lommel/error.hpp"

namespace lommel {

/// Parameter pair (mu, nu) of the modified Lommel function.
///
/// Construction enforces mu > -1 and keeps both Pochhammer bases
/// (mu - nu + 3)/2 and (mu + nu + 3)/2 away from the non-positive integers,
/// so every series coefficient is finite.
class Params {
 public:
  Params(double mu, double nu) : mu_(mu), nu_(nu) {
    if (!admissible(mu, nu)) {
      throw InvalidParameter("inadmissible parameters mu=" + std::to_string(mu) +
                             " nu=" + std::to_string(nu));
    }
  }

  static bool admissible(double mu, double nu) noexcept {
    if (!std::isfinite(mu) || !std::isfinite(nu) || !(mu > -1.0)) return false;
    return !nonpositive_integer(0.5 * (mu - nu + 3.0)) &&
           !nonpositive_integer(0.5 * (mu + nu + 3.0));
  }

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }

  double first_base() const noexcept { return 0.5 * (mu_ - nu_ + 3.0); }
  double second_base() const noexcept { return 0.5 * (mu_ + nu_ + 3.0); }

  // (mu - nu + 1)(mu + nu + 1), the denominator of L and S.
  double prefactor_denominator() const noexcept {
    return (mu_ - nu_ + 1.0) * (mu_ + nu_ + 1.0);
  }

 private:
  static bool nonpositive_integer(double a) noexcept {
    return a <= 0.0 && a == std::floor(a);
  }

  double mu_;
  double nu_;
};

/// The nu = 1/2 family used for zeros, Rayleigh sums and Redheffer bounds.
///
/// `mu()` is the family parameter; the Lommel order is mu - 1/2 and the
/// series bases are (mu + 2)/2 and (mu + 3)/2.
class HalfIntFamily {
 public:
  explicit HalfIntFamily(double mu) : mu_(mu) {
    if (!std::isfinite(mu) || !(mu > -1.0)) {
      throw InvalidParameter("family parameter must satisfy mu > -1, got " +
                             std::to_string(mu));
    }
  }

  double mu() const noexcept { return mu_; }
  double first_base() const noexcept { return 0.5 * (mu_ + 2.0); }
  double second_base() const noexcept { return 0.5 * (mu_ + 3.0); }

  // mu (mu + 1), the denominator of S_{mu-1/2,1/2}.
  double prefactor_denominator() const noexcept { return mu_ * (mu_ + 1.0); }

  // 1/((mu+2)(mu+3)), the sum of the reciprocal squared zeros.
  double reciprocal_square_sum() const noexcept {
    return 1.0 / ((mu_ + 2.0) * (mu_ + 3.0));
  }

 private:
  double mu_;
};

}  // namespace lommel
