#pragma once

#include <cstdint>

namespace rtg {

// splitmix64 finalizer; also usable as a standalone 64-bit hash.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr double to_unit_interval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0, 1)
}

// Counter-based stream generator (the splitmix64 sequence).
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return to_unit_interval(next()); }

  // Unbiased integer in [0, k), k >= 1 (Lemire rejection).
  std::uint64_t below(std::uint64_t k) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * k;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < k) {
      std::uint64_t t = (0 - k) % k;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next()) * k;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
};

// Stream derivation: independent seed per (master, stream index) pair.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0xa0761d6478bd642full));
}

// Per-slot uniform used by the samplers: keyed by the slot's rank in the
// enumeration stream so inclusion at p embeds into inclusion at p' >= p.
constexpr double slot_uniform(std::uint64_t trial_seed, std::uint64_t rank) {
  return to_unit_interval(splitmix64(trial_seed ^ splitmix64(rank + 1)));
}

}  // namespace rtg
