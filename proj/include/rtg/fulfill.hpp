#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rtg/constraint.hpp"
#include "rtg/davkd.hpp"
#include "rtg/presentation.hpp"

namespace rtg {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The letter-level content of a diagram: how many labels there are and which
// (stage, position) letters every internal edge ties together, with the
// equal-or-inverse parity.  Fulfillability and its probability bounds depend
// on the diagram only through this; diagrams sharing a system share answers.
struct ConstraintSystem {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> stage_of_label;  // label -> 1-based stage
  struct Edge {
    std::uint8_t stage_u, pos_u, stage_v, pos_v;  // 0-based stage, 1..3 pos
    std::uint8_t parity;  // 1: letters mutually inverse, 0: equal
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges;  // sorted, deduplicated

  bool operator==(const ConstraintSystem&) const = default;
};

ConstraintSystem constraint_system(const Diagram& d);

// Does some assignment of relators from pres to the diagram's labels satisfy
// every internal-edge constraint?  Boundary sides are unconstrained.  The
// search tries label stages in order and throws BudgetExceeded after
// max_assignments candidate checks.
struct FulfillWitness {
  std::vector<Relator> relator_of_label;  // indexed by label-1
};
struct FulfillResult {
  bool fulfillable = false;
  std::optional<FulfillWitness> witness;
};
FulfillResult is_fulfillable(const Diagram& d, const Presentation& pres,
                             std::uint64_t max_assignments = 1000000);

// min(1, min_i n^{C_i} p^i), evaluated in log space.  At desk scale this
// undercounts the per-component letter choices (n of 2n) and assumes the i
// stage words are distinct, so the Monte Carlo frequency can exceed it; see
// fulfillability_union_bound for a bound that is sound at finite n.
double fulfillability_upper_bound(const Diagram& d, std::uint32_t n, double p);

// Sound upper bound: for each stage i, enumerate all letter assignments to
// the components of G_i (letters propagate along edges up to inversion),
// keep those whose stage words are all valid relators, and union-bound over
// the distinct word sets W with weight p^|W|.  Stages whose assignment count
// exceeds max_assignments are skipped; a sign contradiction makes the bound
// exactly 0.  value = min over computed stages of min(1, U_i).
struct UnionBound {
  double value = 1.0;
  std::vector<double> stage_values;  // min(1, U_i); -1 when skipped
};
UnionBound fulfillability_union_bound(const Diagram& d, std::uint32_t n,
                                      double p,
                                      std::uint64_t max_assignments = 1u << 22);

// Exact Pr[diagram fulfillable by a binomial relator set], by collecting the
// minimal witness word sets and splitting on word membership.  Returns
// nullopt when the recursion exceeds node_budget nodes or the assignment
// enumeration exceeds the union-bound cap.
std::optional<double> exact_fulfillability_probability(
    const Diagram& d, std::uint32_t n, double p,
    std::uint64_t node_budget = 1u << 22);

}  // namespace rtg
