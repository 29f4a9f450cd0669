#include <doctest.h>

#include "rtg/boost_experiment.hpp"

using namespace rtg;

namespace {

BoostConfig base_config() {
  BoostConfig cfg;
  cfg.n = 4;
  cfg.p = 0.01;
  cfg.eps = 0.5;
  cfg.fixed = default_fixed_relators(4);
  cfg.trials = 150;
  cfg.seed = 909;
  return cfg;
}

}  // namespace

TEST_CASE("default fixed relators and their letter closure") {
  Presentation fixed = default_fixed_relators(3);
  CHECK(fixed.relators.size() == 2);
  BoostConfig cfg = base_config();
  BoostReport rep = boost_experiment(cfg);
  CHECK(rep.z == std::vector<LetterId>{0, 1, 2, 3});
}

TEST_CASE("paired design: eps = 0 reproduces the plain estimate exactly") {
  BoostConfig cfg = base_config();
  cfg.eps = 0.0;
  BoostReport rep = boost_experiment(cfg);
  CHECK(rep.gap_eps == 0.0);
  CHECK(rep.with_eps.trivial_frac == rep.plain.trivial_frac);
  CHECK(rep.with_eps.nontrivial_frac == rep.plain.nontrivial_frac);
}

TEST_CASE("adding relators never hurts the certified-trivial indicator") {
  std::vector<BoostTrialRecord> recs;
  BoostReport rep = boost_experiment(base_config(), &recs);
  REQUIRE(recs.size() == 150);
  for (const BoostTrialRecord& r : recs) {
    if (r.plain == Outcome::Trivial) {
      CHECK(r.with_fixed == Outcome::Trivial);
      CHECK(r.with_eps == Outcome::Trivial);
    }
  }
  CHECK(rep.gap_fixed >= 0.0);
  CHECK(rep.gap_eps >= 0.0);
}

TEST_CASE("fixed-boost trivial implies killed-letter trivial per sample") {
  BoostReport rep = boost_experiment(base_config());
  CHECK(rep.dominance_checks == 150);
  CHECK(rep.dominance_violations == 0);
  CHECK(rep.gap_strong >= rep.gap_fixed);
}

TEST_CASE("report is reproducible and thread-count independent") {
  BoostConfig cfg = base_config();
  BoostReport a = boost_experiment(cfg);
  cfg.threads = 4;
  BoostReport b = boost_experiment(cfg);
  CHECK(a.plain.trivial_frac == b.plain.trivial_frac);
  CHECK(a.gap_fixed == b.gap_fixed);
  CHECK(a.gap_eps == b.gap_eps);
  CHECK(a.alpha_fixed == b.alpha_fixed);
}

TEST_CASE("significance is reported, small when the gap is clear") {
  BoostConfig cfg = base_config();
  cfg.n = 3;
  cfg.p = 0.05;  // a regime where the boost flips many samples
  cfg.fixed = default_fixed_relators(3);
  cfg.trials = 200;
  BoostReport rep = boost_experiment(cfg);
  CHECK(rep.alpha_fixed >= 0.0);
  CHECK(rep.alpha_fixed <= 1.0);
  if (rep.gap_fixed > 0.1) CHECK(rep.alpha_fixed < 0.05);
}

TEST_CASE("mismatched fixed relator set is rejected") {
  BoostConfig cfg = base_config();
  cfg.fixed = default_fixed_relators(2);  // wrong n
  CHECK_THROWS_AS(boost_experiment(cfg), std::invalid_argument);
}
