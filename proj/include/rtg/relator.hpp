#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "rtg/letters.hpp"

namespace rtg {

// Word codes pack three 10-bit letter ids, which caps the generator count.
constexpr std::uint32_t kMaxGenerators = 512;

// A cyclically reduced word of length three.  Identity is the exact linear
// word: rotations and inverses are distinct relators.
struct Relator {
  std::array<LetterId, 3> letters{};

  auto operator<=>(const Relator&) const = default;

  std::uint32_t code() const {
    return (letters[0] << 20) | (letters[1] << 10) | letters[2];
  }
  static Relator from_code(std::uint32_t c) {
    return Relator{{(c >> 20) & 1023u, (c >> 10) & 1023u, c & 1023u}};
  }

  Relator rotated() const { return Relator{{letters[1], letters[2], letters[0]}}; }
  Relator inverted() const {
    return Relator{{inverse(letters[2]), inverse(letters[1]), inverse(letters[0])}};
  }
  // Lexicographically least rotation (rotation-class representative).
  Relator cyclic_representative() const {
    Relator best = *this, r = *this;
    for (int i = 0; i < 2; ++i) {
      r = r.rotated();
      if (r < best) best = r;
    }
    return best;
  }

  std::string str() const {
    return letter_name(letters[0]) + " " + letter_name(letters[1]) + " " +
           letter_name(letters[2]);
  }
};

enum class RelatorError {
  Ok,
  NotReducedAB,  // b = a^-1
  NotReducedBC,  // c = b^-1
  NotReducedCA,  // a = c^-1
  GeneratorOutOfRange,
};

inline const char* relator_error_message(RelatorError e) {
  switch (e) {
    case RelatorError::Ok: return "ok";
    case RelatorError::NotReducedAB: return "not cyclically reduced: b = inverse(a)";
    case RelatorError::NotReducedBC: return "not cyclically reduced: c = inverse(b)";
    case RelatorError::NotReducedCA: return "not cyclically reduced: a = inverse(c)";
    case RelatorError::GeneratorOutOfRange: return "generator out of range";
  }
  return "?";
}

inline RelatorError validate_relator(LetterId a, LetterId b, LetterId c, std::uint32_t n) {
  if (a >= 2 * n || b >= 2 * n || c >= 2 * n) return RelatorError::GeneratorOutOfRange;
  if (b == inverse(a)) return RelatorError::NotReducedAB;
  if (c == inverse(b)) return RelatorError::NotReducedBC;
  if (a == inverse(c)) return RelatorError::NotReducedCA;
  return RelatorError::Ok;
}

inline RelatorError validate_relator(const Relator& r, std::uint32_t n) {
  return validate_relator(r.letters[0], r.letters[1], r.letters[2], n);
}

// Number of cyclically reduced length-3 words over n generators.
constexpr std::uint64_t relator_count(std::uint64_t n) {
  return 2 * n * (4 * n * n - 6 * n + 3);
}

// Rotation classes: the 2n constant words xxx are fixed by rotation, every
// other class has exactly three linear representatives.
constexpr std::uint64_t cyclic_relator_count(std::uint64_t n) {
  return 2 * n + (relator_count(n) - 2 * n) / 3;
}

// Streams every valid word once, in increasing (a, b, c) id order.
template <class F>
void for_each_relator(std::uint32_t n, F&& fn) {
  const LetterId top = 2 * n;
  for (LetterId a = 0; a < top; ++a)
    for (LetterId b = 0; b < top; ++b) {
      if (b == inverse(a)) continue;
      for (LetterId c = 0; c < top; ++c) {
        if (c == inverse(b) || c == inverse(a)) continue;
        fn(Relator{{a, b, c}});
      }
    }
}

// Streams one representative per rotation class (the lex-least rotation),
// in the induced lexicographic order.
template <class F>
void for_each_cyclic_representative(std::uint32_t n, F&& fn) {
  for_each_relator(n, [&](const Relator& r) {
    if (r.cyclic_representative() == r) fn(r);
  });
}

}  // namespace rtg
