#include "rtg/sampling.hpp"

#include <algorithm>

#include "rtg/rng.hpp"

namespace rtg {

namespace {

template <class F>
void for_each_slot(std::uint32_t n, bool cyclic, F&& fn) {
  std::uint64_t rank = 0;
  if (cyclic) {
    for_each_cyclic_representative(n, [&](const Relator& r) { fn(rank++, r); });
  } else {
    for_each_relator(n, [&](const Relator& r) { fn(rank++, r); });
  }
}

}  // namespace

Presentation sample_presentation(const SampleConfig& cfg) {
  Presentation p(cfg.n);
  for_each_slot(cfg.n, cfg.cyclic_slots, [&](std::uint64_t rank, const Relator& r) {
    if (slot_uniform(cfg.seed, rank) < cfg.p) p.relators.push_back(r);
  });
  // Slot order is already sorted lexicographically, so the set invariant holds.
  return p;
}

std::vector<std::pair<std::uint32_t, double>> sample_slot_uniforms(
    std::uint32_t n, double p_max, std::uint64_t seed, bool cyclic_slots) {
  std::vector<std::pair<std::uint32_t, double>> out;
  for_each_slot(n, cyclic_slots, [&](std::uint64_t rank, const Relator& r) {
    double u = slot_uniform(seed, rank);
    if (u < p_max) out.emplace_back(r.code(), u);
  });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

}  // namespace rtg
