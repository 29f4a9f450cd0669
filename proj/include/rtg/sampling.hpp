#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rtg/presentation.hpp"

namespace rtg {

struct SampleConfig {
  std::uint32_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
  bool cyclic_slots = false;  // one slot per rotation class instead of per word
};

// Independent per-slot inclusion with probability p.  The slot uniform is a
// pure function of (seed, slot rank), so for fixed seed the set sampled at p
// is contained in the set sampled at any p' >= p.
Presentation sample_presentation(const SampleConfig& cfg);

// One pass over the slot stream collecting (word code, uniform) for every
// slot with uniform < p_max; sorted by uniform.  Prefixes of this list are
// exactly the samples at smaller inclusion probabilities (nested coupling).
std::vector<std::pair<std::uint32_t, double>> sample_slot_uniforms(
    std::uint32_t n, double p_max, std::uint64_t seed, bool cyclic_slots);

}  // namespace rtg
