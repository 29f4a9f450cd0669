#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtg/presentation.hpp"

namespace rtg {

struct AbelianizationResult {
  // Length n, in divisibility order d1 | d2 | ... with zeros (free rank) last.
  std::vector<mpz_class> divisors;

  bool nontrivial() const {
    for (const mpz_class& d : divisors)
      if (d == 0 || d > 1) return true;
    return false;
  }
  mpz_class torsion_order() const {
    mpz_class t = 1;
    for (const mpz_class& d : divisors)
      if (d != 0) t *= d;
    return t;
  }
  std::uint32_t free_rank() const {
    std::uint32_t r = 0;
    for (const mpz_class& d : divisors)
      if (d == 0) ++r;
    return r;
  }
  std::vector<std::string> divisor_strings() const {
    std::vector<std::string> out;
    for (const mpz_class& d : divisors) out.push_back(d.get_str());
    return out;
  }
};

// Generator exponent sums of a relator (length-n row).
std::vector<long long> exponent_row(const Relator& r, std::uint32_t n);

// Smith normal form diagonal of the given matrix, padded with zeros to
// `cols` entries; entries nonnegative, divisibility chain enforced.
std::vector<mpz_class> smith_divisors(std::vector<std::vector<mpz_class>> m,
                                      std::size_t cols);

// Full elementary-divisor computation for the relator exponent matrix.
// Killed letters contribute unit rows for their generators.
AbelianizationResult abelianization(const Presentation& p,
                                    const std::vector<LetterId>& killed = {});

// Incremental int64 Hermite reduction deciding whether the exponent row
// lattice is all of Z^n (i.e. the abelianization is the trivial group).
// Returns nullopt if intermediate values overflow (caller should fall back
// to the exact path); `rows_used` reports how many rows were consumed
// before the early exit.
std::optional<bool> abelianization_trivial_fast(const Presentation& p,
                                                const std::vector<LetterId>& killed = {},
                                                std::uint64_t* rows_used = nullptr);

}  // namespace rtg
