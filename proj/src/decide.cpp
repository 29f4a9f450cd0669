#include "rtg/decide.hpp"

#include <json.hpp>

namespace rtg {

Verdict decide(const Presentation& p, const DecideBudget& budget,
               const std::vector<LetterId>& killed) {
  Verdict v;

  if (budget.use_cascade) {
    DeductionState s = cascade_close(p, killed);
    v.spent.cascade_passes = s.passes;
    v.spent.cascade_merges = s.log.size();
    if (s.all_trivial()) {
      v.outcome = Outcome::Trivial;
      v.stage = DecideStage::Cascade;
      v.cascade_log = std::move(s.log);
      return v;
    }
  }

  if (budget.use_abelianization) {
    std::uint64_t rows = 0;
    std::optional<bool> trivial = abelianization_trivial_fast(p, killed, &rows);
    v.spent.abelianization_rows = rows;
    bool nontrivial;
    if (trivial.has_value()) {
      nontrivial = !*trivial;
      if (nontrivial && budget.full_divisors) v.divisors = abelianization(p, killed);
    } else {  // int64 overflow: take the exact path
      AbelianizationResult full = abelianization(p, killed);
      nontrivial = full.nontrivial();
      if (budget.full_divisors) v.divisors = std::move(full);
    }
    if (nontrivial) {
      v.outcome = Outcome::Nontrivial;
      v.stage = DecideStage::Abelianization;
      return v;
    }
  }

  if (budget.max_cosets > 0) {
    CosetResult c = coset_enumerate(p, budget.max_cosets, killed);
    v.spent.cosets_defined = c.cosets_defined;
    v.coset = c;
    if (c.finite && c.verified) {
      v.outcome = c.order == 1 ? Outcome::Trivial : Outcome::Nontrivial;
      v.stage = DecideStage::Coset;
      return v;
    }
  }

  return v;  // Undecided, no certificate
}

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["outcome"] = outcome_name(v.outcome);
  nlohmann::json cert = nlohmann::json::object();
  cert["stage"] = stage_name(v.stage);
  if (v.cascade_log) {
    auto steps = nlohmann::json::array();
    for (const CascadeStep& s : *v.cascade_log) {
      const char* rule = "?";
      switch (s.rule) {
        case CascadeRule::Seed: rule = "seed"; break;
        case CascadeRule::PairMatch: rule = "pair_match"; break;
        case CascadeRule::InversePair: rule = "inverse_pair"; break;
        case CascadeRule::IdentityLetter: rule = "identity_letter"; break;
        case CascadeRule::Involution: rule = "involution"; break;
      }
      steps.push_back({{"rule", rule},
                       {"relators", {s.rel_a, s.rel_b}},
                       {"merged", {s.x, s.y}}});
    }
    cert["cascade_log"] = std::move(steps);
  }
  if (v.divisors) cert["elementary_divisors"] = v.divisors->divisor_strings();
  if (v.coset) {
    cert["coset_table"] = {{"finite", v.coset->finite},
                           {"order", v.coset->order},
                           {"cosets_defined", v.coset->cosets_defined},
                           {"verified", v.coset->verified}};
  }
  j["certificate"] = std::move(cert);
  j["budget_spent"] = {{"cascade_passes", v.spent.cascade_passes},
                       {"cascade_merges", v.spent.cascade_merges},
                       {"abelianization_rows", v.spent.abelianization_rows},
                       {"cosets_defined", v.spent.cosets_defined}};
  return j.dump();
}

}  // namespace rtg
