#include "rtg/coset.hpp"

#include <deque>

namespace rtg {

namespace {

// 1-based cosets; 0 marks an undefined table entry.
struct Table {
  std::uint32_t width;          // 2n letter columns
  std::uint64_t budget;
  std::vector<std::uint32_t> t; // flattened rows, index 0 unused
  std::vector<std::uint32_t> rep;
  std::uint64_t defined = 1;
  std::uint64_t live = 1;
  bool exceeded = false;
  std::deque<std::uint32_t> dead_queue;

  Table(std::uint32_t width_, std::uint64_t budget_)
      : width(width_), budget(budget_), t((2) * width_, 0), rep(2, 0) {
    rep[1] = 1;
  }

  std::uint32_t find(std::uint32_t a) {
    while (rep[a] != a) {
      rep[a] = rep[rep[a]];
      a = rep[a];
    }
    return a;
  }

  std::uint32_t& at(std::uint32_t coset, std::uint32_t letter) {
    return t[static_cast<std::size_t>(coset) * width + letter];
  }

  std::uint32_t define(std::uint32_t from, std::uint32_t letter, std::uint32_t inv_letter) {
    if (defined >= budget) {
      exceeded = true;
      return 0;
    }
    ++defined;
    ++live;
    std::uint32_t fresh = static_cast<std::uint32_t>(rep.size());
    rep.push_back(fresh);
    t.resize(t.size() + width, 0);
    at(from, letter) = fresh;
    at(fresh, inv_letter) = from;
    return fresh;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    rep[b] = a;
    --live;
    dead_queue.push_back(b);
  }

  // Standard coincidence processing: dismantle dead rows, migrating entries
  // to the surviving representatives and queueing any induced coincidences.
  void process_coincidences() {
    while (!dead_queue.empty()) {
      std::uint32_t dead = dead_queue.front();
      dead_queue.pop_front();
      for (std::uint32_t x = 0; x < width; ++x) {
        std::uint32_t target = at(dead, x);
        if (target == 0) continue;
        at(dead, x) = 0;
        std::uint32_t ix = x ^ 1u;
        if (at(target, ix) == dead) at(target, ix) = 0;
        std::uint32_t mu = find(dead), nu = find(target);
        std::uint32_t& slot = at(mu, x);
        if (slot != 0) {
          merge(nu, slot);
        } else {
          std::uint32_t& back = at(nu, ix);
          if (back != 0) {
            merge(mu, back);
          } else {
            slot = nu;
            at(nu, ix) = mu;
          }
        }
      }
    }
  }
};

}  // namespace

CosetResult coset_enumerate(const Presentation& p, std::uint64_t max_cosets,
                            const std::vector<LetterId>& killed) {
  CosetResult res;
  if (max_cosets < 1) return res;
  const std::uint32_t width = 2 * p.n;

  std::vector<bool> alive_letter(width, true);
  for (LetterId z : killed) {
    alive_letter[z] = false;
    alive_letter[inverse(z)] = false;
  }

  // Relator words with killed letters removed (they act as the identity).
  std::vector<std::vector<LetterId>> words;
  for (const Relator& r : p.relators) {
    std::vector<LetterId> w;
    for (LetterId l : r.letters)
      if (alive_letter[l]) w.push_back(l);
    if (!w.empty()) words.push_back(std::move(w));
  }

  Table tab(width, max_cosets);

  auto scan_and_fill = [&](std::uint32_t alpha, const std::vector<LetterId>& w) {
    std::uint32_t f = alpha, b = alpha;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && tab.at(f, w[i]) != 0) f = tab.find(tab.at(f, w[i])), ++i;
      if (i > j) {
        if (f != b) {
          tab.merge(f, b);
          tab.process_coincidences();
        }
        return;
      }
      while (j >= i && tab.at(b, inverse(w[j])) != 0)
        b = tab.find(tab.at(b, inverse(w[j]))), --j;
      if (j < i) {
        tab.merge(f, b);
        tab.process_coincidences();
        return;
      }
      if (j == i) {  // both frontier entries are undefined: deduce
        tab.at(f, w[i]) = b;
        tab.at(b, inverse(w[i])) = f;
        return;
      }
      std::uint32_t fresh = tab.define(f, w[i], inverse(w[i]));
      if (tab.exceeded) return;
      f = fresh;
      ++i;
    }
  };

  std::uint32_t alpha = 1;
  while (!tab.exceeded) {
    // Next live unprocessed coset.
    while (alpha < tab.rep.size() && tab.find(alpha) != alpha) ++alpha;
    if (alpha >= tab.rep.size()) break;
    for (const auto& w : words) {
      scan_and_fill(alpha, w);
      if (tab.exceeded || tab.find(alpha) != alpha) break;
    }
    if (tab.exceeded) break;
    if (tab.find(alpha) == alpha) {
      for (std::uint32_t x = 0; x < width && !tab.exceeded; ++x) {
        if (!alive_letter[x]) continue;
        if (tab.at(alpha, x) == 0) tab.define(alpha, x, inverse(x));
      }
      ++alpha;
    }
  }

  res.cosets_defined = tab.defined;
  if (tab.exceeded) return res;

  // Verify: rows complete, mutually inverse, and every relator closes.
  bool ok = true;
  for (std::uint32_t c = 1; c < tab.rep.size() && ok; ++c) {
    if (tab.find(c) != c) continue;
    for (std::uint32_t x = 0; x < width && ok; ++x) {
      if (!alive_letter[x]) continue;
      std::uint32_t d = tab.at(c, x);
      if (d == 0 || tab.find(d) != d || tab.at(d, inverse(x)) != c) ok = false;
    }
    for (const auto& w : words) {
      std::uint32_t f = c;
      for (LetterId l : w) f = tab.at(f, l);
      if (f != c) ok = false;
    }
  }
  res.finite = true;
  res.order = tab.live;
  res.verified = ok;
  return res;
}

}  // namespace rtg
