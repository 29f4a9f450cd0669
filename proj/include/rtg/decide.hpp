#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtg/cascade.hpp"
#include "rtg/coset.hpp"
#include "rtg/presentation.hpp"
#include "rtg/snf.hpp"

namespace rtg {

enum class Outcome : std::uint8_t { Trivial, Nontrivial, Undecided };
enum class DecideStage : std::uint8_t { None, Cascade, Abelianization, Coset };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Trivial: return "trivial";
    case Outcome::Nontrivial: return "nontrivial";
    case Outcome::Undecided: return "undecided";
  }
  return "?";
}

inline const char* stage_name(DecideStage s) {
  switch (s) {
    case DecideStage::None: return "none";
    case DecideStage::Cascade: return "cascade";
    case DecideStage::Abelianization: return "abelianization";
    case DecideStage::Coset: return "coset";
  }
  return "?";
}

struct DecideBudget {
  bool use_cascade = true;
  bool use_abelianization = true;
  std::uint64_t max_cosets = 0;  // 0 skips coset enumeration
  bool full_divisors = true;     // compute the elementary-divisor certificate
};

struct BudgetSpent {
  std::uint64_t cascade_passes = 0;
  std::uint64_t cascade_merges = 0;
  std::uint64_t abelianization_rows = 0;
  std::uint64_t cosets_defined = 0;
};

// A three-valued verdict.  Trivial and Nontrivial always cite the deciding
// stage; the certificate payload for that stage is attached when computed.
struct Verdict {
  Outcome outcome = Outcome::Undecided;
  DecideStage stage = DecideStage::None;
  std::optional<std::vector<CascadeStep>> cascade_log;
  std::optional<AbelianizationResult> divisors;
  std::optional<CosetResult> coset;
  BudgetSpent spent;
};

// Pipeline: cascade (Trivial when every letter reaches e's class), then
// abelianization (Nontrivial when some elementary divisor is 0 or > 1),
// then coset enumeration (Finite(1) Trivial, Finite(k>1) Nontrivial,
// Exceeded Undecided).  Killed letters are forced to the identity in every
// stage, so the verdict applies to the quotient group.
Verdict decide(const Presentation& p, const DecideBudget& budget = {},
               const std::vector<LetterId>& killed = {});

std::string verdict_json(const Verdict& v);

}  // namespace rtg
