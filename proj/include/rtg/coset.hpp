#pragma once

#include <cstdint>
#include <vector>

#include "rtg/presentation.hpp"

namespace rtg {

struct CosetResult {
  bool finite = false;        // table closed: the group order is exact
  std::uint64_t order = 0;    // live cosets when finite
  std::uint64_t cosets_defined = 0;  // total ever defined (budget metric)
  bool verified = false;      // post-hoc table check passed
};

// Coset enumeration of the trivial subgroup (relator scan with immediate
// deductions and coincidence processing; deterministic orders throughout).
// Returns finite=false when defining one more coset would exceed max_cosets.
// Killed letters act as the identity, i.e. the enumeration runs in the
// quotient by `killed`.
CosetResult coset_enumerate(const Presentation& p, std::uint64_t max_cosets,
                            const std::vector<LetterId>& killed = {});

}  // namespace rtg
