#include "rtg/gprime.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rtg/parallel.hpp"
#include "rtg/rng.hpp"
#include "rtg/sampling.hpp"

namespace rtg {

namespace {

using Pair = std::pair<LetterId, LetterId>;

std::vector<Pair> sample_planted(std::uint32_t n, std::uint64_t m_pairs,
                                 std::uint64_t seed) {
  std::uint64_t letters = 2 * static_cast<std::uint64_t>(n);
  std::uint64_t valid = letters * (letters - 1) / 2 - n;  // {a, a^-1} excluded
  if (m_pairs > valid)
    throw std::invalid_argument("gprime_path_stats: m_pairs exceeds the pair space");
  Rng rng(derive_seed(seed, 0));
  std::set<Pair> picked;
  while (picked.size() < m_pairs) {
    auto a = static_cast<LetterId>(rng.below(letters));
    auto b = static_cast<LetterId>(rng.below(letters));
    if (a == b || b == inverse(a)) continue;
    picked.insert({std::min(a, b), std::max(a, b)});
  }
  return {picked.begin(), picked.end()};
}

bool third_valid(LetterId s, LetterId t, LetterId w) {
  return w != inverse(t) && w != inverse(s);
}

struct TrialCensus {
  std::uint64_t edges = 0, x = 0, y = 0;
  bool pair_bound_ok = true;
};

TrialCensus census(std::uint32_t n, const Presentation& r,
                   const std::vector<Pair>& planted) {
  std::set<Pair> edges;
  for (const Pair& ab : planted) {
    const Pair ordered[2] = {ab, {ab.second, ab.first}};
    for (const Pair& st : ordered) {
      auto [s, t] = st;
      std::vector<LetterId> thirds;
      for (LetterId w = 0; w < 2 * n; ++w)
        if (third_valid(s, t, w) && r.contains(Relator{s, t, w}))
          thirds.push_back(w);
      for (LetterId u : thirds)
        for (LetterId v : thirds) {
          if (u == v) continue;  // an edge needs two distinct relators
          LetterId x = u, y = inverse(v);
          if (x == y) continue;
          edges.insert({std::min(x, y), std::max(x, y)});
        }
    }
  }

  std::vector<std::vector<LetterId>> adj(2 * n);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  TrialCensus out;
  out.edges = edges.size();
  struct Path {
    LetterId v, a, b;
  };
  std::vector<Path> paths;
  for (LetterId v = 0; v < 2 * n; ++v) {
    const auto& nb = adj[v];
    out.x += nb.size() * (nb.size() - 1) / 2;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        paths.push_back({v, nb[i], nb[j]});
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const Path &a = paths[i], &b = paths[j];
      LetterId av[3] = {a.v, a.a, a.b}, bv[3] = {b.v, b.a, b.b};
      bool share = false;
      for (LetterId x : av)
        for (LetterId y : bv) share = share || x == y;
      if (share) ++out.y;
    }
  out.pair_bound_ok = out.x < 2 || out.y <= out.x * (out.x - 1) / 2;
  return out;
}

// Exact E[X] = sum over centered paths of Pr[both edges present]. Events at
// different ordered prefixes involve disjoint word slots, hence multiply;
// within one prefix the at most six relevant words are enumerated directly.
double exact_expected_paths(std::uint32_t n, const std::vector<Pair>& planted,
                            double q) {
  double total = 0.0;
  for (LetterId v = 0; v < 2 * n; ++v) {
    for (LetterId x = 0; x < 2 * n; ++x) {
      if (x == v || x == inverse(v)) continue;
      for (LetterId z = x + 1; z < 2 * n; ++z) {
        if (z == v || z == inverse(v)) continue;
        // W: distinct third letters the two edge events can involve.
        LetterId w_raw[6] = {v, inverse(v), x, inverse(x), z, inverse(z)};
        LetterId w[6];
        int wn = 0;
        for (LetterId l : w_raw) {
          bool seen = false;
          for (int i = 0; i < wn; ++i) seen = seen || w[i] == l;
          if (!seen) w[wn++] = l;
        }
        auto slot = [&](LetterId l) {
          for (int i = 0; i < wn; ++i)
            if (w[i] == l) return i;
          return -1;
        };
        int sv = slot(v), sV = slot(inverse(v));
        int sx = slot(x), sX = slot(inverse(x));
        int sz = slot(z), sZ = slot(inverse(z));

        double not_a = 1.0, not_b = 1.0, not_ab = 1.0;
        for (const Pair& ab : planted) {
          const Pair ordered[2] = {ab, {ab.second, ab.first}};
          for (const Pair& st : ordered) {
            auto [s, t] = st;
            double present[6];
            for (int i = 0; i < wn; ++i)
              present[i] = third_valid(s, t, w[i]) ? q : 0.0;
            double pa = 0.0, pb = 0.0, pab = 0.0;
            for (int mask = 0; mask < (1 << wn); ++mask) {
              double pr = 1.0;
              for (int i = 0; i < wn; ++i)
                pr *= (mask >> i & 1) ? present[i] : 1.0 - present[i];
              if (pr == 0.0) continue;
              auto on = [&](int i) { return (mask >> i & 1) != 0; };
              bool a_ev = (on(sv) && on(sX)) || (on(sx) && on(sV));
              bool b_ev = (on(sv) && on(sZ)) || (on(sz) && on(sV));
              if (!a_ev) pa += pr;
              if (!b_ev) pb += pr;
              if (!a_ev && !b_ev) pab += pr;
            }
            not_a *= pa;
            not_b *= pb;
            not_ab *= pab;
          }
        }
        total += 1.0 - not_a - not_b + not_ab;
      }
    }
  }
  return total;
}

}  // namespace

PathStats gprime_path_stats(const GPrimeConfig& cfg) {
  PathStats st;
  st.n = cfg.n;
  st.m_pairs = cfg.m_pairs;
  st.eps = cfg.eps;
  st.p = cfg.p;
  st.trials = cfg.trials;
  st.planted = sample_planted(cfg.n, cfg.m_pairs, cfg.seed);

  double q = cfg.eps * cfg.p;
  std::vector<TrialCensus> results(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
    Presentation r = sample_presentation(
        {.n = cfg.n, .p = q, .seed = derive_seed(cfg.seed, t + 1)});
    results[t] = census(cfg.n, r, st.planted);
  });

  double sum_e = 0.0, sum_x = 0.0, sum_y = 0.0;
  for (const TrialCensus& c : results) {
    sum_e += static_cast<double>(c.edges);
    sum_x += static_cast<double>(c.x);
    sum_y += static_cast<double>(c.y);
    st.max_x = std::max(st.max_x, c.x);
    st.max_y = std::max(st.max_y, c.y);
    st.y_pair_bound_ok = st.y_pair_bound_ok && c.pair_bound_ok;
  }
  double t = cfg.trials ? static_cast<double>(cfg.trials) : 1.0;
  st.mean_edges = sum_e / t;
  st.mean_x = sum_x / t;
  st.mean_y = sum_y / t;
  double ss = 0.0;
  for (const TrialCensus& c : results) {
    double d = static_cast<double>(c.x) - st.mean_x;
    ss += d * d;
  }
  st.std_x = cfg.trials > 1 ? std::sqrt(ss / (t - 1.0)) : 0.0;

  st.exact_mean_x = exact_expected_paths(cfg.n, st.planted, q);
  double nn = cfg.n, mm = static_cast<double>(cfg.m_pairs);
  st.formula_x_low = 0.5 * nn * nn * nn * mm * mm * std::pow(q, 4.0);
  st.formula_y_high = nn * nn * nn * nn * mm * mm * mm * std::pow(q, 6.0);
  return st;
}

}  // namespace rtg
