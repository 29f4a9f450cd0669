#include "rtg/davkd_enum.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rtg {

namespace {

// BFS face discovery shared by the structure and decorated encodings.
// entry[f] is the side through which face f was first reached; the root
// face's entry is the root side itself.
struct BfsOrder {
  std::vector<std::uint32_t> order;    // faces in discovery order
  std::vector<std::int32_t> id;        // face -> discovery index
  std::vector<std::uint32_t> entry;    // face -> entry side
};

BfsOrder bfs_order(const Structure& alpha, std::uint32_t root) {
  std::uint32_t m = static_cast<std::uint32_t>(alpha.size()) / 3;
  BfsOrder b;
  b.id.assign(m, -1);
  b.entry.assign(m, 0);
  b.order.reserve(m);
  std::uint32_t rf = root / 3;
  b.id[rf] = 0;
  b.entry[rf] = root % 3;
  b.order.push_back(rf);
  for (std::uint32_t q = 0; q < b.order.size(); ++q) {
    std::uint32_t f = b.order[q];
    for (std::uint32_t r = 0; r < 3; ++r) {
      std::int32_t a = alpha[dart_of(f, (b.entry[f] + r) % 3)];
      if (a < 0) continue;
      std::uint32_t g = static_cast<std::uint32_t>(a) / 3;
      if (b.id[g] >= 0) continue;
      b.id[g] = static_cast<std::int32_t>(b.order.size());
      b.entry[g] = static_cast<std::uint32_t>(a) % 3;
      b.order.push_back(g);
    }
  }
  return b;
}

void append_structure_part(const Structure& alpha, const BfsOrder& b,
                           std::string& out) {
  for (std::uint32_t f : b.order) {
    for (std::uint32_t r = 0; r < 3; ++r) {
      std::int32_t a = alpha[dart_of(f, (b.entry[f] + r) % 3)];
      if (a < 0) {
        out.push_back(0);
        out.push_back(0);
        continue;
      }
      std::uint32_t g = static_cast<std::uint32_t>(a) / 3;
      std::uint32_t t = static_cast<std::uint32_t>(a) % 3;
      out.push_back(static_cast<char>(b.id[g] + 1));
      out.push_back(static_cast<char>((t + 3 - b.entry[g]) % 3));
    }
  }
}

}  // namespace

std::string structure_code(const Structure& alpha, std::uint32_t root) {
  std::string out;
  out.reserve(alpha.size() * 2);
  BfsOrder b = bfs_order(alpha, root);
  append_structure_part(alpha, b, out);
  return out;
}

std::string structure_canonical_code(const Structure& alpha) {
  std::string best;
  for (std::uint32_t root = 0; root < alpha.size(); ++root) {
    std::string c = structure_code(alpha, root);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::string diagram_code(const Diagram& d, std::uint32_t root) {
  std::string out;
  out.reserve(d.alpha.size() * 3);
  BfsOrder b = bfs_order(d.alpha, root);
  append_structure_part(d.alpha, b, out);
  // Labels are renormalized by first appearance in discovery order so that
  // the code is invariant under relabeling; orientation bits are absolute
  // (only orientation-preserving isomorphisms are considered); basepoints
  // are taken relative to the entry side.
  std::vector<std::uint8_t> relabel(d.m + 1, 0);
  std::uint8_t next = 0;
  for (std::uint32_t f : b.order) {
    std::uint32_t lab = d.faces[f].label;
    if (relabel[lab] == 0) relabel[lab] = ++next;
    out.push_back(static_cast<char>(relabel[lab]));
    out.push_back(static_cast<char>(d.faces[f].reversed ? 1 : 0));
    out.push_back(static_cast<char>((d.faces[f].basepoint + 3 - b.entry[f]) % 3));
  }
  return out;
}

std::string diagram_canonical_code(const Diagram& d) {
  std::string best;
  for (std::uint32_t root = 0; root < d.alpha.size(); ++root) {
    std::string c = diagram_code(d, root);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

namespace {

bool structure_valid(const Structure& alpha) {
  Diagram d;
  d.m = static_cast<std::uint32_t>(alpha.size()) / 3;
  d.faces.assign(d.m, FaceDecoration{});
  d.alpha = alpha;
  return !diagram_error(d, /*forbid_self_adjacent=*/true).has_value();
}

// The boundary dart following d around the boundary walk: rotate around the
// head vertex of d until the next unglued side.
std::uint32_t next_boundary_dart(const Structure& alpha, std::uint32_t d) {
  std::uint32_t e = next_dart(d);
  while (alpha[e] >= 0) e = next_dart(static_cast<std::uint32_t>(alpha[e]));
  return e;
}

}  // namespace

std::vector<Structure> enumerate_structures(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("enumerate_structures: m must be >= 1");
  if (m > 12) throw std::invalid_argument("enumerate_structures: m too large");
  std::vector<Structure> layer{Structure{-1, -1, -1}};
  for (std::uint32_t cur = 1; cur < m; ++cur) {
    std::unordered_map<std::string, Structure> next;
    std::queue<const Structure*> work;
    auto admit = [&](Structure&& s) {
      std::string code = structure_canonical_code(s);
      auto [it, fresh] = next.emplace(std::move(code), std::move(s));
      if (fresh) work.push(&it->second);
    };
    for (const Structure& s : layer) {
      // Attach a fresh face by its side 0 to each boundary side.
      for (std::uint32_t d = 0; d < s.size(); ++d) {
        if (s[d] >= 0) continue;
        Structure t = s;
        t.push_back(static_cast<std::int32_t>(d));
        t.push_back(-1);
        t.push_back(-1);
        t[d] = static_cast<std::int32_t>(t.size()) - 3;
        admit(std::move(t));
      }
    }
    // Close the layer under sewing consecutive boundary sides.
    while (!work.empty()) {
      const Structure s = *work.front();
      work.pop();
      std::uint32_t l2 = 0;
      for (std::int32_t a : s) l2 += a < 0;
      if (l2 < 3) continue;  // sewing would close the surface
      for (std::uint32_t d = 0; d < s.size(); ++d) {
        if (s[d] >= 0) continue;
        std::uint32_t e = next_boundary_dart(s, d);
        if (e == d || e / 3 == d / 3) continue;
        Structure t = s;
        t[d] = static_cast<std::int32_t>(e);
        t[e] = static_cast<std::int32_t>(d);
        if (structure_valid(t)) admit(std::move(t));
      }
    }
    layer.clear();
    layer.reserve(next.size());
    std::vector<std::pair<std::string, Structure>> sorted;
    sorted.reserve(next.size());
    for (auto& kv : next) sorted.emplace_back(kv.first, std::move(kv.second));
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& kv : sorted) layer.push_back(std::move(kv.second));
  }
  return layer;
}

void for_each_labeling(
    std::uint32_t m,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
  // Restricted growth strings in lexicographic order: labels[0] = 1 and
  // labels[i] <= 1 + max(labels[0..i-1]).
  std::vector<std::uint32_t> labels(m, 1);
  std::function<bool(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t i, std::uint32_t used) -> bool {
    if (i == m) return fn(labels);
    for (std::uint32_t v = 1; v <= used + 1; ++v) {
      labels[i] = v;
      if (!rec(i + 1, std::max(used, v))) return false;
    }
    return true;
  };
  rec(1, 1);
}

std::uint64_t raw_davkd_count(std::uint32_t m) {
  std::uint64_t structures = enumerate_structures(m).size();
  std::uint64_t bell = 0;
  for_each_labeling(m, [&](const std::vector<std::uint32_t>&) {
    ++bell;
    return true;
  });
  std::uint64_t six_pow = 1;
  for (std::uint32_t i = 0; i < m; ++i) six_pow *= 6;
  return structures * six_pow * bell;
}

std::uint64_t for_each_davkd(std::uint32_t m, EnumMode mode,
                             const std::function<bool(const Diagram&)>& fn) {
  std::vector<Structure> structures = enumerate_structures(m);
  std::uint64_t emitted = 0;
  bool stop = false;
  for (const Structure& alpha : structures) {
    std::unordered_set<std::string> seen;  // canonical mode, per structure
    Diagram d;
    d.m = m;
    d.alpha = alpha;
    d.faces.assign(m, FaceDecoration{});
    for_each_labeling(m, [&](const std::vector<std::uint32_t>& labels) {
      for (std::uint32_t f = 0; f < m; ++f) d.faces[f].label = labels[f];
      for (std::uint32_t rev = 0; rev < (1u << m); ++rev) {
        for (std::uint32_t f = 0; f < m; ++f) d.faces[f].reversed = rev >> f & 1;
        std::uint32_t bases = 1;
        for (std::uint32_t i = 0; i < m; ++i) bases *= 3;
        for (std::uint32_t bc = 0; bc < bases; ++bc) {
          std::uint32_t x = bc;
          for (std::uint32_t f = 0; f < m; ++f) {
            d.faces[f].basepoint = static_cast<std::uint8_t>(x % 3);
            x /= 3;
          }
          if (mode == EnumMode::Canonical &&
              !seen.insert(diagram_canonical_code(d)).second)
            continue;
          ++emitted;
          if (!fn(d)) {
            stop = true;
            return false;
          }
        }
      }
      return true;
    });
    if (stop) break;
  }
  return emitted;
}

}  // namespace rtg
