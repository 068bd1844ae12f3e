#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "lommel/error.hpp"
#include "lommel/params.hpp"

namespace lommel {

/// Open interval known to hold exactly one zero of Lambda_{mu-1/2,1/2}
/// when mu is in (0, 1).
struct BracketInterval {
  double lower = 0.0;
  double upper = 0.0;
  int index = 1;
};

/// The first positive zeros of Lambda_{mu-1/2,1/2}, in increasing order.
///
/// `multiplicity` is 1 for simple zeros and 2 for touching zeros found by the
/// multiplicity-aware scan (mu = 1 has double zeros at 2n pi).
struct ZeroTable {
  double mu = 0.0;
  Eigen::ArrayXd zeros;
  Eigen::ArrayXi multiplicity;
  int n_max = 0;
  double tol = 0.0;

  int size() const { return static_cast<int>(zeros.size()); }
  // Number of zeros counted with multiplicity.
  int counted() const { return multiplicity.size() == 0 ? 0 : multiplicity.sum(); }
};

/// Raised when a scan finds fewer zeros than requested. Carries whatever was
/// found so callers can still report it.
class ScanMiss : public NumericalFailure {
 public:
  ScanMiss(const std::string& what, ZeroTable partial)
      : NumericalFailure(what), partial_(std::move(partial)) {}
  const ZeroTable& partial() const noexcept { return partial_; }

 private:
  ZeroTable partial_;
};

/// I_1 = ((1 + mu/2)pi, (1 + mu)pi), I_2 = (2pi, (2 + mu/2)pi), ... for mu in (0, 1).
std::vector<BracketInterval> bracket_intervals(double mu, int n_max);

/// Refines the zero of Lambda inside `b`. The result satisfies
/// |Lambda(eta)| <= tol * max_{x in b} |Lambda(x)|.
double refine_zero(const HalfIntFamily& f, const BracketInterval& b, double tol);

/// max |Lambda| over a bracket, sampled at 17 equispaced points.
double bracket_scale(const HalfIntFamily& f, const BracketInterval& b);

/// First n_max positive zeros. Uses the interval localization for mu in
/// (0, 1), and a pi/64 scan with a touching-zero detector otherwise.
ZeroTable find_zeros(double mu, int n_max, double tol);

/// Bracket of a tail sum sum_{n>K} eta_n^(-2m) over zeros not in a table,
/// together with a point estimate built from eta_n ~ (n + mu/2) pi.
struct TailBracket {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double width() const { return upper - lower; }
};

/// `counted` is the number of zeros (with multiplicity) already in the
/// table; `explicit_terms` tail terms are summed before the integral remainder.
TailBracket power_sum_tail(double mu, int counted, int m, int explicit_terms = 1000);

struct IdentityCheck {
  double discrepancy = 0.0;   // |partial + tail - 1/((mu+2)(mu+3))|
  double partial_sum = 0.0;
  double tail_estimate = 0.0;
  double tail_width = 0.0;
  double target = 0.0;
};

/// Compares the zero table against sum 1/eta_n^2 = 1/((mu+2)(mu+3)).
IdentityCheck verify_reciprocal_square_sum(const ZeroTable& t, int tail_n = 1000);

}  // namespace lommel
