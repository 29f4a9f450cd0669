#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rtg/presentation.hpp"

namespace rtg {

struct GPrimeConfig {
  std::uint32_t n = 2;
  std::uint64_t m_pairs = 1;  // |M|, planted unordered letter pairs
  double eps = 0.0;
  double p = 0.0;             // extra relators appear at rate eps * p
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Per-trial path census of the graph G' whose edge {x, y} needs two relators
// (s t x) and (s t y^-1) with ordered prefix (s, t) drawn from a pair in M.
struct PathStats {
  std::uint32_t n = 0;
  std::uint64_t m_pairs = 0;
  double eps = 0.0, p = 0.0;
  std::uint64_t trials = 0;
  std::vector<std::pair<LetterId, LetterId>> planted;  // M, fixed across trials

  double mean_edges = 0.0;
  double mean_x = 0.0;  // X: paths of length two
  double std_x = 0.0;   // sample standard deviation of X
  double mean_y = 0.0;  // Y: unordered pairs of paths sharing a vertex
  std::uint64_t max_x = 0, max_y = 0;
  bool y_pair_bound_ok = true;  // Y <= X(X-1)/2 in every trial

  double exact_mean_x = 0.0;   // exact E[X] for this M, by enumeration
  double formula_x_low = 0.0;  // 0.5 n^3 m^2 (eps p)^4, regime reference
  double formula_y_high = 0.0; // n^4 m^3 (eps p)^6, regime reference
};

PathStats gprime_path_stats(const GPrimeConfig& cfg);

}  // namespace rtg
