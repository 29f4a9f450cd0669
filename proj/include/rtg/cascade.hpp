#pragma once

#include <cstdint>
#include <vector>

#include "rtg/presentation.hpp"
#include "rtg/unionfind.hpp"

namespace rtg {

// Deduction rules.  PairMatch: two relator forms agree class-wise on their
// first two letters, so the third letters are identified.  InversePair: a
// form starts with two letters in mutually inverse classes, so its third
// letter is identified with e.  IdentityLetter: a form starts with a letter
// in e's class, so the remaining two letters are mutually inverse.  Every
// merge propagates to the inverse pair (Involution).  Seed merges force
// chosen letters to e up front.
enum class CascadeRule : std::uint8_t {
  Seed,
  PairMatch,
  InversePair,
  IdentityLetter,
  Involution,
};

struct CascadeStep {
  CascadeRule rule;
  std::int32_t rel_a;  // relator index, -1 when not applicable
  std::int32_t rel_b;
  std::uint32_t x, y;  // merged elements; index 2n is the identity e
};

struct DeductionState {
  std::uint32_t n;
  UnionFind classes;  // 2n letters plus e at index 2n
  std::vector<CascadeStep> log;
  std::uint64_t passes = 0;

  explicit DeductionState(std::uint32_t n_) : n(n_), classes(2 * n_ + 1) {}

  std::uint32_t identity() const { return 2 * n; }
  bool letter_trivial(LetterId x) { return classes.same(x, identity()); }
  bool all_trivial() { return classes.components == 1; }
};

// Least fixpoint of the rules over the relators and their six forms
// (three rotations of the word and of its inverse).  Letters in `killed`
// are seeded into e's class.  Every identification holds in the quotient
// of the presented group by the killed letters.
DeductionState cascade_close(const Presentation& p,
                             const std::vector<LetterId>& killed = {});

// Involution closure: x ~ y iff inverse(x) ~ inverse(y), with e self-inverse.
bool involution_closed(DeductionState& s);

// Independent replay: checks that each logged merge's precondition holds at
// its point in the replay and that the replayed partition matches `s`.
bool validate_cascade_log(const Presentation& p,
                          const std::vector<LetterId>& killed,
                          DeductionState& s);

}  // namespace rtg
