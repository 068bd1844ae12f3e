#include "lommel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace lommel {

namespace {

using Job = std::function<CheckReport()>;

struct FamilyZero {
  double eta;
  ZeroTable table;
};

std::optional<FamilyZero> family_zero(const HalfIntFamily& f) {
  try {
    ZeroTable t = find_zeros(f.mu(), 1, 1e-13);
    const double eta = t.zeros(0);
    return FamilyZero{eta, std::move(t)};
  } catch (const ScanMiss&) {
    return std::nullopt;
  }
}

CheckReport no_zero_report(const char* name, const HalfIntFamily& f, const GridSpec& g) {
  CheckReport r(name, {}, g);
  r.params.mu = f.mu();
  r.params.nu = 0.5;
  r.status = CheckStatus::not_applicable;
  r.detail = "Lambda has no real zero; eta_1 and I_mu bounds undefined";
  return r;
}

class JobList {
 public:
  explicit JobList(const VerifyCorpus& c) : c_(c) {}

  GridSpec x_grid(double lo, double hi) const {
    return GridSpec(c_.x_min.value_or(lo), c_.x_max.value_or(hi), c_.points, c_.spacing);
  }

  std::vector<Params> params() const {
    std::vector<Params> out;
    for (double mu : c_.mu) {
      for (double nu : c_.nu) {
        if (Params::admissible(mu, nu)) out.emplace_back(mu, nu);
      }
    }
    return out;
  }

  void add(const std::string& name, std::vector<Job>& jobs) const {
    const CheckTolerances tol = c_.tol;
    if (name == "thm2.1.i") {
      const GridSpec g = x_grid(10.0 / 512.0, 10.0);
      std::vector<Params> partners = params();
      if (c_.mu1 || c_.nu1) {
        partners.clear();
        partners.emplace_back(c_.mu1.value_or(c_.mu.front()), c_.nu1.value_or(c_.nu.front()));
      }
      for (const Params& p : params()) {
        for (const Params& p1 : partners) {
          jobs.push_back([=] { return check_ratio_increasing(p, p1, g, tol); });
        }
      }
    } else if (name == "thm2.1.ii" || name == "thm2.1.iii") {
      const bool in_mu = name == "thm2.1.ii";
      const GridSpec g = in_mu ? GridSpec(-0.9, 4.0, c_.points, c_.spacing)
                               : GridSpec(-2.0, 2.0, c_.points, c_.spacing);
      for (double fixed : in_mu ? c_.nu : c_.mu) {
        for (double x : {1.0, 5.0}) {
          jobs.push_back([=] {
            return check_param_monotone_logconvex(fixed, g, x,
                                                  in_mu ? ParamAxis::in_mu : ParamAxis::in_nu, tol);
          });
        }
      }
    } else if (name == "thm2.1.iv" || name == "thm2.1.v") {
      const bool even = name == "thm2.1.iv";
      const GridSpec g = x_grid(even ? 0.0 : 10.0 / 512.0, 10.0);
      for (const Params& p : params()) {
        for (int k = 0; k <= 2; ++k) {
          jobs.push_back([=] {
            return check_cosh_sinh_ratio(p, k, g, even ? Parity::even : Parity::odd, tol);
          });
        }
      }
    } else if (name == "turan.mu" || name == "turan.nu") {
      const ParamAxis axis = name == "turan.mu" ? ParamAxis::in_mu : ParamAxis::in_nu;
      const GridSpec g = x_grid(0.0, 8.0);
      for (const Params& p : params()) {
        for (double a : {0.25, 0.5}) {
          jobs.push_back([=] { return check_turan(p, a, g, axis, tol); });
        }
      }
    } else {
      for (double mu : c_.family_mu) add_family(name, HalfIntFamily(mu), jobs);
    }
  }

 private:
  void add_family(const std::string& name, const HalfIntFamily& f, std::vector<Job>& jobs) const {
    const CheckTolerances tol = c_.tol;
    const int n = c_.points;
    const Spacing s = c_.spacing;
    if (name == "thm3.1") {
      const GridSpec g = x_grid(0.0, 20.0);
      jobs.push_back([=] { return check_lambda_increasing(f, g, tol); });
      return;
    }
    if (name == "thm3.2") {
      const GridSpec g = x_grid(-20.0, 20.0);
      jobs.push_back([=] { return check_logconvex_geomconvex_x(f, g, tol); });
      return;
    }
    const VerifyCorpus c = c_;
    jobs.push_back([=]() -> CheckReport {
      const auto zero = family_zero(f);
      const auto grid = [&](double lo, double hi, int points) {
        return GridSpec(c.x_min.value_or(lo), c.x_max.value_or(hi), points, s);
      };
      if (name == "thm3.5") {
        const double reach = zero ? 0.95 * zero->eta : 20.0;
        return check_ratio_logconvex(f, grid(-reach, reach, n), tol);
      }
      if (!zero) {
        return no_zero_report(name.c_str(), f, grid(10.0 / n, 20.0, n));
      }
      const double eta = zero->eta;
      if (name == "thm3.4") {
        return check_product_unimodal(f, zero->table, grid(-0.995 * eta, 0.995 * eta, n | 1), tol);
      }
      const GridSpec g = grid(eta / n, 0.995 * eta, n);
      if (name == "thm3.3") return redheffer_exponent_lambda(f, zero->table, g, tol);
      return redheffer_exponent_capital(f, zero->table, g, tol);
    });
  }

  const VerifyCorpus& c_;
};

}  // namespace

VerifyCorpus VerifyCorpus::defaults() {
  VerifyCorpus c;
  c.mu = {-0.5, 0.0, 0.5, 1.0, 2.0};
  c.nu = {0.0, 0.25, 0.5, 1.0};
  c.family_mu = {0.25, 0.5, 0.75, 1.0};
  return c;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "thm2.1.i", "thm2.1.ii", "thm2.1.iii", "thm2.1.iv", "thm2.1.v", "turan.mu", "turan.nu",
      "thm3.1",   "thm3.2",    "thm3.3",     "thm3.4",    "thm3.5",   "thm3.6"};
  return names;
}

bool is_known_check(const std::string& name) {
  const auto& names = check_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_verification(const std::string& check, const VerifyCorpus& corpus,
                                          unsigned threads) {
  if (!is_known_check(check)) throw InvalidParameter("unknown check: " + check);
  if (corpus.points < 3) throw InvalidParameter("grids need at least 3 points");

  const JobList list(corpus);
  std::vector<Job> jobs;
  for (const auto& name : check_names()) {
    if (check == "all" || check == name) list.add(name, jobs);
  }

  std::vector<std::optional<CheckReport>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CheckReport> out;
  out.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace lommel
