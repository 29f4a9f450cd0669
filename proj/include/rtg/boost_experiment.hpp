#pragma once

#include <cstdint>
#include <vector>

#include "rtg/threshold.hpp"

namespace rtg {

struct BoostConfig {
  std::uint32_t n = 2;
  double p = 0.0;
  double eps = 0.0;           // rate of the extra relator stream, as eps * p
  Presentation fixed{2};      // R_fixed, adjoined verbatim
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  DecideBudget budget;
  bool cyclic_slots = false;
  unsigned threads = 1;
};

struct BoostTrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Outcome plain = Outcome::Undecided;
  Outcome with_fixed = Outcome::Undecided;
  Outcome with_eps = Outcome::Undecided;
  Outcome strong = Outcome::Undecided;
};

struct BoostReport {
  std::uint32_t n = 0;
  double p = 0.0;
  double eps = 0.0;
  std::uint64_t trials = 0;
  std::vector<LetterId> z;  // letters of R_fixed, closed under inversion

  HEstimate plain, with_fixed, with_eps, strong;

  // Paired gaps on the certified-trivial (lower) estimates.
  double gap_fixed = 0.0;  // h(n,p | R_fixed) - h(n,p)
  double gap_eps = 0.0;    // h(n,p | R_eps_p) - h(n,p)
  double gap_strong = 0.0; // h(n,p | R_strong) - h(n,p)
  Interval gap_fixed_ci, gap_eps_ci, gap_strong_ci;  // normal, paired
  double alpha_fixed = 1.0;  // one-sided sign test for gap > 0
  double alpha_eps = 1.0;

  // (R ∪ R_fixed trivial) must imply (R with Z killed trivial).
  std::uint64_t dominance_checks = 0;
  std::uint64_t dominance_violations = 0;
};

// Paired design: every variant of a trial reuses the same base sample, so
// gaps are differences of indicators on shared randomness.
BoostReport boost_experiment(const BoostConfig& cfg,
                             std::vector<BoostTrialRecord>* records = nullptr);

// The two-relator boost set {aab, bba} used as a default R_fixed; its letter
// set is {a, a^-1, b, b^-1}.
Presentation default_fixed_relators(std::uint32_t n);

}  // namespace rtg
