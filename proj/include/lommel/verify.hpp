#pragma once

// Named verification checks and the parameter corpus they run over.

#include <optional>
#include <string>
#include <vector>

#include "lommel/inequalities.hpp"

namespace lommel {

/// Parameter points and grid overrides for a verification run. Empty lists
/// fall back to the default corpus.
struct VerifyCorpus {
  std::vector<double> mu;         // Params mu values
  std::vector<double> nu;         // Params nu values
  std::vector<double> family_mu;  // nu = 1/2 family values
  std::optional<double> mu1;      // fixes the comparison point of thm2.1.i
  std::optional<double> nu1;
  std::optional<double> x_min;    // replaces the x-range of every x-grid check
  std::optional<double> x_max;
  int points = 512;
  Spacing spacing = Spacing::uniform;
  CheckTolerances tol;

  static VerifyCorpus defaults();
};

/// thm2.1.i ... thm2.1.v, turan.mu, turan.nu, thm3.1 ... thm3.6.
const std::vector<std::string>& check_names();

bool is_known_check(const std::string& name);

/// Runs one named check (or "all") over the corpus. Reports come back in a
/// fixed order: check name order, then corpus order. Checks run on a pool of
/// `threads` workers (0: hardware concurrency). If any check throws, the
/// exception of the first failing job in that order is rethrown.
std::vector<CheckReport> run_verification(const std::string& check, const VerifyCorpus& corpus,
                                          unsigned threads = 0);

}  // namespace lommel
