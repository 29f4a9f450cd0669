#include "rtg/zgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "rtg/unionfind.hpp"

namespace rtg {

ZGraphStats z_graph_stats(const Presentation& p, std::vector<LetterId> z) {
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  std::vector<bool> in_z(2 * p.n, false);
  for (LetterId l : z) {
    if (l >= 2 * p.n) throw std::invalid_argument("z_graph_stats: letter out of range");
    in_z[l] = true;
  }
  for (LetterId l : z)
    if (!in_z[inverse(l)])
      throw std::invalid_argument("z_graph_stats: Z not closed under inversion");

  ZGraphStats st;
  st.n = p.n;
  st.z = z;
  st.vertex_count = 2 * static_cast<std::uint64_t>(p.n) - z.size();

  std::set<std::pair<LetterId, LetterId>> edges;
  for (const Relator& r : p.relators) {
    LetterId outside[3];
    int z_count = 0, out_count = 0;
    for (LetterId l : r.letters) {
      if (in_z[l]) ++z_count;
      else outside[out_count++] = l;
    }
    if (z_count != 1) continue;
    LetterId x = outside[0], y = outside[1];
    if (x == y) continue;  // would be a loop, not an edge
    if (x > y) std::swap(x, y);
    edges.insert({x, y});
  }
  st.edge_count = edges.size();

  UnionFind uf(2 * p.n);
  for (auto [x, y] : edges) uf.unite(x, y);
  std::map<std::uint32_t, std::uint64_t> edges_per_root;
  for (auto [x, y] : edges) ++edges_per_root[uf.find(x)];
  st.nontrivial_components = edges_per_root.size();
  for (auto [root, cnt] : edges_per_root)
    st.max_component_edges = std::max(st.max_component_edges, cnt);

  if (st.vertex_count >= 2) {
    double pairs = 0.5 * static_cast<double>(st.vertex_count) *
                   static_cast<double>(st.vertex_count - 1);
    st.q = static_cast<double>(st.edge_count) / pairs;
  }
  st.n_power_bound = std::pow(static_cast<double>(p.n), 0.6);
  st.within_sparse_shape =
      static_cast<double>(st.nontrivial_components) < st.n_power_bound &&
      st.max_component_edges <= 2;
  return st;
}

}  // namespace rtg
