#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rtg {

// A signed generator is packed into an id in [0, 2n): generator i (1-based)
// maps to 2(i-1), its inverse to 2(i-1)+1.  Inversion is id ^ 1, and the id
// order g1 < G1 < g2 < G2 < ... is the letter order used everywhere.
using LetterId = std::uint32_t;

constexpr LetterId inverse(LetterId x) { return x ^ 1u; }
constexpr bool is_negative(LetterId x) { return (x & 1u) != 0; }
constexpr std::uint32_t generator_index(LetterId x) { return x / 2 + 1; }  // 1-based

constexpr LetterId make_letter(std::uint32_t gen_index, int sign) {
  return 2 * (gen_index - 1) + (sign < 0 ? 1u : 0u);
}

inline std::string letter_name(LetterId x) {
  return (is_negative(x) ? "G" : "g") + std::to_string(generator_index(x));
}

// "gK" -> generator K, "GK" -> its inverse; K in [1, n].
inline std::optional<LetterId> parse_letter(const std::string& tok, std::uint32_t n) {
  if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'G')) return std::nullopt;
  std::uint64_t k = 0;
  for (size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
    k = k * 10 + (tok[i] - '0');
    if (k > 0xffffffffull) return std::nullopt;
  }
  if (k < 1 || k > n) return std::nullopt;
  return make_letter(static_cast<std::uint32_t>(k), tok[0] == 'G' ? -1 : +1);
}

}  // namespace rtg
