#include "rtg/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "rtg/parallel.hpp"
#include "rtg/rng.hpp"
#include "rtg/sampling.hpp"

namespace rtg {

namespace {

struct Counts {
  std::uint64_t trivial = 0, nontrivial = 0, undecided = 0;
};

HEstimate finish_estimate(std::uint32_t n, double p, std::uint64_t trials,
                          const Counts& c) {
  HEstimate e;
  e.n = n;
  e.p = p;
  e.trials = trials;
  double t = trials ? static_cast<double>(trials) : 1.0;
  e.trivial_frac = static_cast<double>(c.trivial) / t;
  e.nontrivial_frac = static_cast<double>(c.nontrivial) / t;
  e.undecided_frac = static_cast<double>(c.undecided) / t;
  e.trivial_ci = wilson_interval(c.trivial, trials);
  e.nontrivial_ci = wilson_interval(c.nontrivial, trials);
  e.undecided_ci = wilson_interval(c.undecided, trials);
  return e;
}

std::uint64_t slot_count(std::uint32_t n, bool cyclic) {
  return cyclic ? cyclic_relator_count(n) : relator_count(n);
}

// Full enumeration over every subset of the slot space, weighted by the
// exact inclusion probability. Feasible only for tiny slot counts.
HEstimate estimate_exhaustive(std::uint32_t n, double p,
                              const EstimateOptions& opt) {
  std::vector<Relator> slots;
  if (opt.cyclic_slots)
    for_each_cyclic_representative(n, [&](const Relator& r) { slots.push_back(r); });
  else
    for_each_relator(n, [&](const Relator& r) { slots.push_back(r); });
  const std::size_t k = slots.size();
  const std::uint64_t subsets = std::uint64_t{1} << k;

  double w_trivial = 0.0, w_nontrivial = 0.0, w_undecided = 0.0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Presentation pres(n);
    double weight = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        pres.relators.push_back(slots[i]);  // enumeration order is sorted
        weight *= p;
      } else {
        weight *= 1.0 - p;
      }
    }
    if (weight == 0.0) continue;
    Verdict v = decide(pres, opt.budget);
    if (opt.records)
      opt.records->push_back({mask, 0, v.outcome, v.stage, v.spent});
    switch (v.outcome) {
      case Outcome::Trivial: w_trivial += weight; break;
      case Outcome::Nontrivial: w_nontrivial += weight; break;
      case Outcome::Undecided: w_undecided += weight; break;
    }
  }

  HEstimate e;
  e.n = n;
  e.p = p;
  e.trials = subsets;
  e.trivial_frac = w_trivial;
  e.nontrivial_frac = w_nontrivial;
  e.undecided_frac = w_undecided;
  e.trivial_ci = {w_trivial, w_trivial};
  e.nontrivial_ci = {w_nontrivial, w_nontrivial};
  e.undecided_ci = {w_undecided, w_undecided};
  e.exact = true;
  return e;
}

}  // namespace

HEstimate estimate_h(std::uint32_t n, double p, std::uint64_t trials,
                     std::uint64_t seed, const EstimateOptions& opt) {
  if (slot_count(n, opt.cyclic_slots) <= 20) return estimate_exhaustive(n, p, opt);

  std::vector<TrialRecord> recs(trials);
  parallel_for(trials, opt.threads, [&](std::uint64_t i) {
    std::uint64_t s = derive_seed(seed, i);
    Presentation pres = sample_presentation(
        {.n = n, .p = p, .seed = s, .cyclic_slots = opt.cyclic_slots});
    Verdict v = decide(pres, opt.budget);
    recs[i] = {i, s, v.outcome, v.stage, v.spent};
  });

  Counts c;
  for (const TrialRecord& r : recs) {
    if (r.outcome == Outcome::Trivial) ++c.trivial;
    else if (r.outcome == Outcome::Nontrivial) ++c.nontrivial;
    else ++c.undecided;
  }
  if (opt.records)
    opt.records->insert(opt.records->end(), recs.begin(), recs.end());
  return finish_estimate(n, p, trials, c);
}

namespace {

// Interpolated c where the (nondecreasing) lower curve crosses q.
std::optional<double> cross_point(const std::vector<double>& cs,
                                  const std::vector<double>& lows, double q) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (lows[i] < q) continue;
    if (i == 0) return cs[0];
    double l0 = lows[i - 1], l1 = lows[i];
    if (l1 <= l0) return cs[i];
    return cs[i - 1] + (q - l0) * (cs[i] - cs[i - 1]) / (l1 - l0);
  }
  return std::nullopt;
}

}  // namespace

ThresholdCurve sweep(std::uint32_t n, const std::vector<double>& c_grid,
                     std::uint64_t trials, std::uint64_t seed,
                     const EstimateOptions& opt) {
  ThresholdCurve curve;
  curve.n = n;
  curve.trials = trials;
  if (c_grid.empty() || trials == 0) return curve;

  const std::size_t k = c_grid.size();
  std::vector<double> pvals(k);
  for (std::size_t i = 0; i < k; ++i)
    pvals[i] = std::min(1.0, p_of_c(c_grid[i], n));
  const double p_max = pvals.back();

  // outcome matrix, trial-major; 0 trivial / 1 nontrivial / 2 undecided
  std::vector<std::uint8_t> out(trials * k);
  parallel_for(trials, opt.threads, [&](std::uint64_t t) {
    std::uint64_t s = derive_seed(seed, t);
    auto stream = sample_slot_uniforms(n, p_max, s, opt.cyclic_slots);
    for (std::size_t i = 0; i < k; ++i) {
      Presentation pres(n);
      for (const auto& [code, u] : stream) {
        if (u < pvals[i]) pres.relators.push_back(Relator::from_code(code));
      }
      std::sort(pres.relators.begin(), pres.relators.end());
      Verdict v = decide(pres, opt.budget);
      out[t * k + i] = v.outcome == Outcome::Trivial      ? 0
                       : v.outcome == Outcome::Nontrivial ? 1
                                                          : 2;
    }
  });

  for (std::uint64_t t = 0; t < trials; ++t) {
    bool seen_trivial = false;
    for (std::size_t i = 0; i < k; ++i) {
      bool tr = out[t * k + i] == 0;
      if (seen_trivial && !tr) curve.coupled_monotone = false;
      seen_trivial = seen_trivial || tr;
    }
  }

  std::vector<double> lows(k);
  for (std::size_t i = 0; i < k; ++i) {
    Counts c;
    for (std::uint64_t t = 0; t < trials; ++t) {
      switch (out[t * k + i]) {
        case 0: ++c.trivial; break;
        case 1: ++c.nontrivial; break;
        default: ++c.undecided; break;
      }
    }
    CurvePoint pt;
    pt.c = c_grid[i];
    pt.p = pvals[i];
    pt.estimate = finish_estimate(n, pvals[i], trials, c);
    lows[i] = pt.estimate.trivial_frac;
    curve.points.push_back(pt);
  }

  curve.c_half = cross_point(c_grid, lows, 0.5);
  if (curve.c_half) curve.p_half = std::min(1.0, p_of_c(*curve.c_half, n));
  std::optional<double> c10 = cross_point(c_grid, lows, 0.1);
  std::optional<double> c90 = cross_point(c_grid, lows, 0.9);
  if (c10) curve.p_10 = std::min(1.0, p_of_c(*c10, n));
  if (c90) curve.p_90 = std::min(1.0, p_of_c(*c90, n));
  if (curve.p_10 && curve.p_90 && curve.p_half && *curve.p_half > 0.0)
    curve.relative_width = (*curve.p_90 - *curve.p_10) / *curve.p_half;
  return curve;
}

ThresholdResult find_threshold(std::uint32_t n, std::uint64_t trials, double tol,
                               std::uint64_t seed,
                               const FindThresholdOptions& opt) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_threshold: tol must be > 0");

  ThresholdResult res;
  res.n = n;
  std::uint64_t eval_index = 0;
  auto eval = [&](double c) {
    HEstimate e = estimate_h(n, std::min(1.0, p_of_c(c, n)), trials,
                             derive_seed(seed, eval_index++), opt.estimate);
    res.evaluations.push_back({c, e.p, e});
    return e;
  };

  double lo = opt.c_lo, hi = opt.c_hi;
  HEstimate e_lo = eval(lo), e_hi = eval(hi);
  if (!(e_lo.lower() < 0.5))
    throw NoBracket("find_threshold: certified-trivial fraction at c_lo is already >= 1/2");
  if (!(e_hi.lower() > 0.5))
    throw NoBracket("find_threshold: certified-trivial fraction at c_hi never exceeds 1/2");

  while (hi - lo >= tol) {
    double mid = 0.5 * (lo + hi);
    HEstimate e_mid = eval(mid);
    if (e_mid.lower() < 0.5) {
      lo = mid;
      e_lo = e_mid;
    } else {
      hi = mid;
      e_hi = e_mid;
    }
  }

  res.c_hat = 0.5 * (lo + hi);
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.ci_ambiguous = e_lo.trivial_ci.hi >= 0.5 || e_hi.trivial_ci.lo <= 0.5;
  res.undecided_near_c_hat = std::max(e_lo.undecided_frac, e_hi.undecided_frac);
  return res;
}

}  // namespace rtg
