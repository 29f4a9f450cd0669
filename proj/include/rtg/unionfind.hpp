#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace rtg {

// Union-find with path halving; the surviving root is always the smaller
// index, which keeps merge logs and canonical forms deterministic.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::uint32_t components;

  explicit UnionFind(std::uint32_t size) : parent(size), components(size) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true when two components were actually merged.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    --components;
    return true;
  }

  bool same(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }
};

// Union-find whose elements carry a bit relative to their root (e.g. "equal"
// vs "inverse" letters).  unite returns false when the requested parity
// contradicts the recorded one.
struct SignedUnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> to_parent;

  explicit SignedUnionFind(std::uint32_t size) : parent(size), to_parent(size, 0) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::pair<std::uint32_t, std::uint8_t> find(std::uint32_t x) {
    std::uint8_t par = 0;
    std::uint32_t root = x;
    while (parent[root] != root) {
      par ^= to_parent[root];
      root = parent[root];
    }
    std::uint32_t cur = x;
    std::uint8_t p = par;
    while (parent[cur] != cur) {
      std::uint32_t nxt = parent[cur];
      std::uint8_t step = to_parent[cur];
      parent[cur] = root;
      to_parent[cur] = p;
      p ^= step;
      cur = nxt;
    }
    return {root, par};
  }

  bool unite(std::uint32_t a, std::uint32_t b, std::uint8_t parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    if (rb < ra) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[rb] = ra;
    to_parent[rb] = pa ^ pb ^ parity;
    return true;
  }
};

}  // namespace rtg
