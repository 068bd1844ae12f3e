#pragma once

// Grid certification of the monotonicity, log-convexity, Turan and
// Redheffer bounds for lambda and Lambda.
//
// Every check evaluates the quantity it asserts to be nonnegative (a
// normalized first or second difference, or a bound gap) at each grid node
// and counts the nodes where it falls below the tolerance. A check whose
// parameter hypothesis fails is reported as not_applicable and evaluates
// nothing.

#include <functional>
#include <optional>
#include <string>

#include "lommel/grid.hpp"
#include "lommel/params.hpp"
#include "lommel/zeros.hpp"

namespace lommel {

enum class CheckStatus { pass, fail, not_applicable };
enum class ParamAxis { in_mu, in_nu };
enum class Parity { even, odd };

const char* to_string(CheckStatus s);

struct CheckParams {
  std::optional<double> mu;
  std::optional<double> nu;
  std::optional<double> mu1;
  std::optional<double> nu1;
  std::optional<double> shift;
  std::optional<double> x;
  std::optional<int> order;
};

struct CheckTolerances {
  double monotone = 1e-9;  // non-strict monotonicity / convexity margins
  double strict = 1e-12;   // margin a strict claim must exceed
  double limit = 1e-6;     // agreement of extrapolated limits
};

struct CheckReport {
  CheckReport(std::string name, CheckParams p, GridSpec g)
      : check_name(std::move(name)), params(p), grid(g) {}

  std::string check_name;
  CheckParams params;
  GridSpec grid;
  std::optional<double> worst_margin;  // empty when not_applicable
  int violations = 0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::not_applicable;
  std::optional<double> limit_lo;
  std::optional<double> limit_hi;
  std::optional<double> expected_lo;
  std::optional<double> expected_hi;
  std::optional<double> candidate_hi;  // 2 eta^2/((mu+2)(mu+3)), compared against limit_hi
  std::string detail;
};

/// lambda_{mu,nu}/lambda_{mu1,nu1} increasing in x when mu1 >= mu and
/// (mu1 - mu)(mu1 + mu + 6) >= nu1^2 - nu^2.
bool ratio_hypothesis(const Params& p, const Params& p1);
CheckReport check_ratio_increasing(const Params& p, const Params& p1, const GridSpec& g,
                                   const CheckTolerances& tol = {});

/// in_mu: mu -> lambda_{mu,nu}(x) decreasing and log-convex at fixed (nu, x).
/// in_nu: nu -> lambda_{mu,nu}(x) log-convex at fixed (mu, x).
/// `fixed` is nu for in_mu and mu for in_nu; `param_grid` spans the other.
CheckReport check_param_monotone_logconvex(double fixed, const GridSpec& param_grid, double x,
                                           ParamAxis which, const CheckTolerances& tol = {});

/// lambda_{mu+a} lambda_{mu-a} - lambda_mu^2 >= 0 (or the same in nu).
CheckReport check_turan(const Params& p, double a, const GridSpec& g, ParamAxis which,
                        const CheckTolerances& tol = {});

/// even: lambda^(2k)/cosh strictly decreasing if (mu-nu+3)(mu+nu+3) > 2.
/// odd:  lambda^(2k+1)/sinh strictly decreasing if (mu-nu+5)(mu+nu+5) > 12.
CheckReport check_cosh_sinh_ratio(const Params& p, int k, const GridSpec& g, Parity parity,
                                  const CheckTolerances& tol = {});

/// lambda_{mu-1/2,1/2} strictly increasing on g within [0, inf).
CheckReport check_lambda_increasing(const HalfIntFamily& f, const GridSpec& g,
                                    const CheckTolerances& tol = {});

/// Strict log-convexity of lambda on g within I_mu and strict increase of
/// x lambda'/lambda on g within (0, inf).
CheckReport check_logconvex_geomconvex_x(const HalfIntFamily& f, const GridSpec& g,
                                         const CheckTolerances& tol = {});
CheckReport check_logconvex_geomconvex_x(const HalfIntFamily& f, const ZeroTable& t,
                                         const GridSpec& g, const CheckTolerances& tol = {});

/// lambda Lambda increasing on (-eta_1, 0], decreasing on [0, eta_1), value 1 at 0.
CheckReport check_product_unimodal(const HalfIntFamily& f, const ZeroTable& t, const GridSpec& g,
                                   const CheckTolerances& tol = {});

/// Strict log-convexity of lambda/Lambda on g within I_mu. Throws DomainError
/// if a node reaches or passes eta_1.
CheckReport check_ratio_logconvex(const HalfIntFamily& f, const GridSpec& g,
                                  const CheckTolerances& tol = {});

/// g(x) = log lambda / log((eta^2+x^2)/(eta^2-x^2)) on g within (0, eta_1):
/// decreasing, limit_lo = lim at eta_1 (expected 0), limit_hi = lim at 0
/// (expected eta^2/(2(mu+2)(mu+3))), and 1 <= lambda <= Q^limit_hi at every node.
CheckReport redheffer_exponent_lambda(const HalfIntFamily& f, const ZeroTable& t,
                                      const GridSpec& g, const CheckTolerances& tol = {});

/// phi(x) = log Lambda / log(1 - x^2/eta^2) on g within (0, eta_1):
/// decreasing, limit_lo = lim at eta_1 (the multiplicity of eta_1),
/// limit_hi = lim at 0 (eta^2 alpha^(2)), and B^limit_hi <= Lambda <= B.
CheckReport redheffer_exponent_capital(const HalfIntFamily& f, const ZeroTable& t,
                                       const GridSpec& g, const CheckTolerances& tol = {});

/// Richardson extrapolation of an even function to x = 0 from x_j = 2^-j,
/// j = first..last.
double richardson_limit_at_zero(const std::function<double(double)>& fn, int first = 4,
                                int last = 12);

/// Limit of p(x)/q(x) as x -> eta from below when |q| -> inf logarithmically
/// and p - c q stays smooth: linear extrapolation in s = 1/q through
/// x = eta (1 - 2^-j) for j = near, far.
double endpoint_ratio_limit(const std::function<double(double)>& p,
                            const std::function<double(double)>& q, double eta, int near = 28,
                            int far = 30);

/// eta_1 and its multiplicity, or nothing if Lambda has no real zero.
std::optional<std::pair<double, int>> first_positive_zero(const HalfIntFamily& f);

}  // namespace lommel
