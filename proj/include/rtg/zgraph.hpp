#pragma once

#include <cstdint>
#include <vector>

#include "rtg/presentation.hpp"

namespace rtg {

// Statistics of the graph on (S ∪ S^-1) \ Z whose edges {x, y} come from
// relators containing x, y and exactly one element of Z.
struct ZGraphStats {
  std::uint32_t n = 0;
  std::vector<LetterId> z;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t nontrivial_components = 0;  // components with >= 1 edge
  std::uint64_t max_component_edges = 0;
  double q = 0.0;            // edge_count / C(vertex_count, 2)
  double n_power_bound = 0;  // n^0.6, the shape the sparse regime predicts
  bool within_sparse_shape = false;  // components < n^0.6, each <= 2 edges
};

// Z must be closed under inversion.
ZGraphStats z_graph_stats(const Presentation& p, std::vector<LetterId> z);

}  // namespace rtg
