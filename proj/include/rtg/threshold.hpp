#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rtg/decide.hpp"
#include "rtg/stats.hpp"

namespace rtg {

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::Undecided;
  DecideStage stage = DecideStage::None;
  BudgetSpent spent;
};

// Bracketed estimate of the collapse probability at one (n, p): the certified
// trivial fraction bounds it from below, one minus the certified nontrivial
// fraction from above, and the undecided mass is the irreducible gap.
struct HEstimate {
  std::uint32_t n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  double trivial_frac = 0.0;
  double nontrivial_frac = 0.0;
  double undecided_frac = 0.0;
  Interval trivial_ci, nontrivial_ci, undecided_ci;
  bool exact = false;  // exhaustive enumeration of all relator subsets

  double lower() const { return trivial_frac; }
  // Equals 1 - nontrivial_frac; written as a sum of nonnegative terms so
  // lower() <= upper() survives floating-point rounding.
  double upper() const { return trivial_frac + undecided_frac; }
};

struct EstimateOptions {
  DecideBudget budget;
  bool cyclic_slots = false;
  unsigned threads = 1;
  std::vector<TrialRecord>* records = nullptr;  // optional per-trial sink
};

// Monte Carlo (or, when the slot space has at most 20 slots, exhaustive)
// estimate; trial seeds derive from (seed, trial index).
HEstimate estimate_h(std::uint32_t n, double p, std::uint64_t trials,
                     std::uint64_t seed, const EstimateOptions& opt = {});

struct CurvePoint {
  double c = 0.0;
  double p = 0.0;
  HEstimate estimate;
};

struct ThresholdCurve {
  std::uint32_t n = 0;
  std::uint64_t trials = 0;
  std::vector<CurvePoint> points;
  // Location and window from monotone interpolation of the lower curve,
  // in both c units and p units; absent when the curve never crosses.
  std::optional<double> c_half, p_half;
  std::optional<double> p_10, p_90;
  std::optional<double> relative_width;
  bool coupled_monotone = true;  // per-seed trivial indicator nondecreasing
};

// Coupled sweep: each trial draws one slot-uniform stream at the largest p
// and replays prefixes for every c, so verdicts are comparable across c.
ThresholdCurve sweep(std::uint32_t n, const std::vector<double>& c_grid,
                     std::uint64_t trials, std::uint64_t seed,
                     const EstimateOptions& opt = {});

struct NoBracket : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ThresholdResult {
  std::uint32_t n = 0;
  double c_hat = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  bool ci_ambiguous = false;  // final endpoint CIs straddle one half
  double undecided_near_c_hat = 0.0;
  std::vector<CurvePoint> evaluations;
};

struct FindThresholdOptions {
  double c_lo = 0.05;
  double c_hi = 6.0;
  EstimateOptions estimate;
};

// Bisection on c for certified-trivial fraction 1/2; throws NoBracket when
// the initial range does not certify both sides.
ThresholdResult find_threshold(std::uint32_t n, std::uint64_t trials, double tol,
                               std::uint64_t seed,
                               const FindThresholdOptions& opt = {});

inline double p_of_c(double c, std::uint32_t n) {
  return c * std::pow(static_cast<double>(n), -1.5);
}

}  // namespace rtg
