#include "rtg/boost_experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtg/parallel.hpp"
#include "rtg/rng.hpp"
#include "rtg/sampling.hpp"

namespace rtg {

namespace {

std::vector<LetterId> letter_closure(const Presentation& fixed) {
  std::vector<LetterId> z;
  for (const Relator& r : fixed.relators)
    for (LetterId l : r.letters) {
      z.push_back(l);
      z.push_back(inverse(l));
    }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

Presentation merged(const Presentation& base, const Presentation& extra) {
  Presentation out = base;
  for (const Relator& r : extra.relators) out.add(r);
  return out;
}

// Mean difference of paired indicators with a normal 95% interval.
void paired_gap(const std::vector<int>& diffs, double& gap, Interval& ci) {
  double t = static_cast<double>(diffs.size());
  if (t == 0.0) {
    gap = 0.0;
    ci = {0.0, 0.0};
    return;
  }
  double sum = 0.0;
  for (int d : diffs) sum += d;
  gap = sum / t;
  double ss = 0.0;
  for (int d : diffs) ss += (d - gap) * (d - gap);
  double se = t > 1.0 ? std::sqrt(ss / (t - 1.0) / t) : 0.0;
  ci = {gap - kZ95 * se, gap + kZ95 * se};
}

HEstimate estimate_from(std::uint32_t n, double p, const std::vector<Outcome>& o) {
  std::uint64_t tr = 0, nt = 0, un = 0;
  for (Outcome v : o) {
    if (v == Outcome::Trivial) ++tr;
    else if (v == Outcome::Nontrivial) ++nt;
    else ++un;
  }
  HEstimate e;
  e.n = n;
  e.p = p;
  e.trials = o.size();
  double t = o.empty() ? 1.0 : static_cast<double>(o.size());
  e.trivial_frac = tr / t;
  e.nontrivial_frac = nt / t;
  e.undecided_frac = un / t;
  e.trivial_ci = wilson_interval(tr, o.size());
  e.nontrivial_ci = wilson_interval(nt, o.size());
  e.undecided_ci = wilson_interval(un, o.size());
  return e;
}

}  // namespace

Presentation default_fixed_relators(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("default_fixed_relators: needs n >= 2");
  Presentation fixed(n);
  LetterId a = make_letter(1, +1), b = make_letter(2, +1);
  fixed.add(Relator{a, a, b});
  fixed.add(Relator{b, b, a});
  return fixed;
}

BoostReport boost_experiment(const BoostConfig& cfg,
                             std::vector<BoostTrialRecord>* records) {
  if (cfg.fixed.n != cfg.n)
    throw std::invalid_argument("boost_experiment: R_fixed is over a different n");
  for (const Relator& r : cfg.fixed.relators)
    if (validate_relator(r, cfg.n) != RelatorError::Ok)
      throw std::invalid_argument("boost_experiment: invalid relator in R_fixed");

  BoostReport rep;
  rep.n = cfg.n;
  rep.p = cfg.p;
  rep.eps = cfg.eps;
  rep.trials = cfg.trials;
  rep.z = letter_closure(cfg.fixed);

  std::vector<BoostTrialRecord> recs(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t i) {
    std::uint64_t trial_seed = derive_seed(cfg.seed, i);
    std::uint64_t base_seed = derive_seed(trial_seed, 0);
    std::uint64_t eps_seed = derive_seed(trial_seed, 1);

    Presentation base = sample_presentation(
        {.n = cfg.n, .p = cfg.p, .seed = base_seed, .cyclic_slots = cfg.cyclic_slots});
    Presentation eps_extra = sample_presentation(
        {.n = cfg.n, .p = cfg.eps * cfg.p, .seed = eps_seed, .cyclic_slots = cfg.cyclic_slots});

    BoostTrialRecord r;
    r.trial = i;
    r.seed = trial_seed;
    r.plain = decide(base, cfg.budget).outcome;
    r.with_fixed = decide(merged(base, cfg.fixed), cfg.budget).outcome;
    r.with_eps = decide(merged(base, eps_extra), cfg.budget).outcome;
    r.strong = decide(base, cfg.budget, rep.z).outcome;
    recs[i] = r;
  });

  std::vector<Outcome> plain, fixed, eps, strong;
  std::vector<int> d_fixed, d_eps, d_strong;
  std::uint64_t wins_fixed = 0, losses_fixed = 0, wins_eps = 0, losses_eps = 0;
  for (const BoostTrialRecord& r : recs) {
    plain.push_back(r.plain);
    fixed.push_back(r.with_fixed);
    eps.push_back(r.with_eps);
    strong.push_back(r.strong);

    int ip = r.plain == Outcome::Trivial;
    int if_ = r.with_fixed == Outcome::Trivial;
    int ie = r.with_eps == Outcome::Trivial;
    int is = r.strong == Outcome::Trivial;
    d_fixed.push_back(if_ - ip);
    d_eps.push_back(ie - ip);
    d_strong.push_back(is - ip);
    if (if_ > ip) ++wins_fixed;
    if (if_ < ip) ++losses_fixed;
    if (ie > ip) ++wins_eps;
    if (ie < ip) ++losses_eps;

    ++rep.dominance_checks;
    if (if_ && !is) ++rep.dominance_violations;
  }

  rep.plain = estimate_from(cfg.n, cfg.p, plain);
  rep.with_fixed = estimate_from(cfg.n, cfg.p, fixed);
  rep.with_eps = estimate_from(cfg.n, cfg.p, eps);
  rep.strong = estimate_from(cfg.n, cfg.p, strong);
  paired_gap(d_fixed, rep.gap_fixed, rep.gap_fixed_ci);
  paired_gap(d_eps, rep.gap_eps, rep.gap_eps_ci);
  paired_gap(d_strong, rep.gap_strong, rep.gap_strong_ci);
  rep.alpha_fixed = paired_sign_test(wins_fixed, losses_fixed);
  rep.alpha_eps = paired_sign_test(wins_eps, losses_eps);

  if (records) records->insert(records->end(), recs.begin(), recs.end());
  return rep;
}

}  // namespace rtg
