#include "rtg/fulfill.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "rtg/unionfind.hpp"

namespace rtg {

ConstraintSystem constraint_system(const Diagram& d) {
  ConstraintAnalysis a = constraint_analysis(d, Rational{0, 1});
  ConstraintSystem cs;
  cs.k = a.k;
  cs.stage_of_label.assign(a.k + 1, 0);
  for (std::uint32_t i = 0; i < a.k; ++i) cs.stage_of_label[a.stage_labels[i]] = i + 1;
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd) {
    std::int32_t x = d.alpha[dd];
    if (x < static_cast<std::int32_t>(dd)) continue;
    std::uint32_t fa = dd / 3, fb = static_cast<std::uint32_t>(x) / 3;
    ConstraintSystem::Edge e;
    e.stage_u = static_cast<std::uint8_t>(cs.stage_of_label[d.faces[fa].label] - 1);
    e.pos_u = static_cast<std::uint8_t>(side_position(d, fa, dd % 3));
    e.stage_v = static_cast<std::uint8_t>(cs.stage_of_label[d.faces[fb].label] - 1);
    e.pos_v = static_cast<std::uint8_t>(side_position(d, fb, static_cast<std::uint32_t>(x) % 3));
    e.parity = d.faces[fa].reversed == d.faces[fb].reversed ? 1 : 0;
    if (std::tie(e.stage_v, e.pos_v) < std::tie(e.stage_u, e.pos_u)) {
      std::swap(e.stage_u, e.stage_v);
      std::swap(e.pos_u, e.pos_v);
    }
    cs.edges.push_back(e);
  }
  std::sort(cs.edges.begin(), cs.edges.end());
  cs.edges.erase(std::unique(cs.edges.begin(), cs.edges.end()), cs.edges.end());
  return cs;
}

FulfillResult is_fulfillable(const Diagram& d, const Presentation& pres,
                             std::uint64_t max_assignments) {
  ConstraintSystem cs = constraint_system(d);
  std::vector<std::vector<ConstraintSystem::Edge>> at(cs.k);
  for (const ConstraintSystem::Edge& e : cs.edges)
    at[std::max(e.stage_u, e.stage_v)].push_back(e);

  std::vector<const Relator*> chosen(cs.k, nullptr);
  std::uint64_t tried = 0;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t stage) -> bool {
    if (stage == cs.k) return true;
    for (const Relator& r : pres.relators) {
      if (++tried > max_assignments)
        throw BudgetExceeded("fulfillability search budget exhausted");
      chosen[stage] = &r;
      bool ok = true;
      for (const ConstraintSystem::Edge& e : at[stage]) {
        LetterId x = chosen[e.stage_u]->letters[e.pos_u - 1];
        LetterId y = chosen[e.stage_v]->letters[e.pos_v - 1];
        if (x != (e.parity ? inverse(y) : y)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(stage + 1)) return true;
    }
    chosen[stage] = nullptr;
    return false;
  };

  FulfillResult out;
  if (!rec(0)) return out;
  out.fulfillable = true;
  FulfillWitness w;
  w.relator_of_label.resize(cs.k);
  for (std::uint32_t lab = 1; lab <= cs.k; ++lab)
    w.relator_of_label[lab - 1] = *chosen[cs.stage_of_label[lab] - 1];
  out.witness = std::move(w);
  return out;
}

double fulfillability_upper_bound(const Diagram& d, std::uint32_t n, double p) {
  if (p <= 0.0) return 0.0;
  ConstraintAnalysis a = constraint_analysis(d, Rational{0, 1});
  double ln_n = std::log(static_cast<double>(n)), ln_p = std::log(p);
  double best_log = 0.0;
  for (std::uint32_t i = 0; i < a.k; ++i)
    best_log = std::min(best_log, a.components[i] * ln_n + (i + 1) * ln_p);
  return std::exp(best_log);
}

namespace {

// Letter assignments of one stage prefix: for each component of G_i a free
// letter; every vertex carries root letter xor its parity.  Emits the word
// set (sorted, distinct codes) of each assignment whose words are all valid.
// Returns false when the stage has a sign contradiction.
bool stage_word_sets(const ConstraintSystem& cs, std::uint32_t stage_count,
                     std::uint32_t n, std::uint64_t max_assignments,
                     bool* skipped, std::set<std::vector<std::uint32_t>>* out) {
  std::uint32_t verts = 3 * stage_count;
  SignedUnionFind signs(verts);
  auto vid = [](std::uint8_t stage, std::uint8_t pos) -> std::uint32_t {
    return 3u * stage + pos - 1;
  };
  for (const ConstraintSystem::Edge& e : cs.edges) {
    if (std::max(e.stage_u, e.stage_v) >= stage_count) continue;
    if (!signs.unite(vid(e.stage_u, e.pos_u), vid(e.stage_v, e.pos_v), e.parity))
      return false;
  }
  std::vector<std::uint32_t> comp_of(verts);
  std::vector<std::uint8_t> par_of(verts);
  std::map<std::uint32_t, std::uint32_t> comp_index;
  for (std::uint32_t v = 0; v < verts; ++v) {
    auto [root, par] = signs.find(v);
    auto [it, fresh] = comp_index.emplace(root, static_cast<std::uint32_t>(comp_index.size()));
    comp_of[v] = it->second;
    par_of[v] = par;
  }
  std::uint32_t c = static_cast<std::uint32_t>(comp_index.size());
  double total = std::pow(static_cast<double>(2 * n), static_cast<double>(c));
  if (total > static_cast<double>(max_assignments)) {
    *skipped = true;
    return true;
  }
  *skipped = false;

  std::vector<LetterId> digits(c, 0);
  std::vector<std::uint32_t> words(stage_count);
  for (;;) {
    bool all_valid = true;
    for (std::uint32_t s = 0; s < stage_count && all_valid; ++s) {
      LetterId a = digits[comp_of[3 * s]] ^ par_of[3 * s];
      LetterId b = digits[comp_of[3 * s + 1]] ^ par_of[3 * s + 1];
      LetterId cc = digits[comp_of[3 * s + 2]] ^ par_of[3 * s + 2];
      if (validate_relator(a, b, cc, n) != RelatorError::Ok) all_valid = false;
      else words[s] = Relator{{a, b, cc}}.code();
    }
    if (all_valid) {
      std::vector<std::uint32_t> set = words;
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      out->insert(std::move(set));
    }
    std::uint32_t i = 0;
    while (i < c && ++digits[i] == 2 * n) digits[i++] = 0;
    if (i == c) break;
  }
  return true;
}

}  // namespace

UnionBound fulfillability_union_bound(const Diagram& d, std::uint32_t n, double p,
                                      std::uint64_t max_assignments) {
  ConstraintSystem cs = constraint_system(d);
  UnionBound out;
  bool any = false;
  for (std::uint32_t i = 1; i <= cs.k; ++i) {
    bool skipped = false;
    std::set<std::vector<std::uint32_t>> sets;
    if (!stage_word_sets(cs, i, n, max_assignments, &skipped, &sets)) {
      // Sign contradiction: nothing can fulfill the diagram.
      out.stage_values.assign(cs.k, -1.0);
      out.stage_values[i - 1] = 0.0;
      out.value = 0.0;
      return out;
    }
    if (skipped) {
      out.stage_values.push_back(-1.0);
      continue;
    }
    double u = 0.0;
    for (const std::vector<std::uint32_t>& w : sets)
      u += std::pow(p, static_cast<double>(w.size()));
    u = std::min(1.0, u);
    out.stage_values.push_back(u);
    out.value = any ? std::min(out.value, u) : u;
    any = true;
  }
  return out;
}

namespace {

using Family = std::vector<std::vector<std::uint32_t>>;

// Drops supersets: the union event is unchanged and the recursion shrinks.
void minimize_family(Family& fam) {
  std::sort(fam.begin(), fam.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Family kept;
  for (const auto& s : fam) {
    bool dominated = false;
    for (const auto& t : kept) {
      if (t.size() > s.size()) break;
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  fam = std::move(kept);
}

// Pr[some set of the family is fully present], each word present
// independently with probability p.  Splits on the most frequent word.
double family_probability(Family fam, double p, std::uint64_t& nodes) {
  if (fam.empty()) return 0.0;
  for (const auto& s : fam)
    if (s.empty()) return 1.0;
  if (nodes == 0) throw BudgetExceeded("witness family recursion budget");
  --nodes;

  std::map<std::uint32_t, std::uint32_t> freq;
  for (const auto& s : fam)
    for (std::uint32_t w : s) ++freq[w];
  std::uint32_t pick = fam[0][0];
  std::uint32_t best = 0;
  for (auto [w, c] : freq)
    if (c > best) {
      best = c;
      pick = w;
    }

  Family with, without;
  for (const auto& s : fam) {
    if (std::binary_search(s.begin(), s.end(), pick)) {
      std::vector<std::uint32_t> t;
      for (std::uint32_t w : s)
        if (w != pick) t.push_back(w);
      with.push_back(std::move(t));
    } else {
      with.push_back(s);
      without.push_back(s);
    }
  }
  minimize_family(with);
  return p * family_probability(std::move(with), p, nodes) +
         (1 - p) * family_probability(std::move(without), p, nodes);
}

}  // namespace

std::optional<double> exact_fulfillability_probability(const Diagram& d,
                                                       std::uint32_t n, double p,
                                                       std::uint64_t node_budget) {
  ConstraintSystem cs = constraint_system(d);
  bool skipped = false;
  std::set<std::vector<std::uint32_t>> sets;
  if (!stage_word_sets(cs, cs.k, n, node_budget, &skipped, &sets)) return 0.0;
  if (skipped) return std::nullopt;
  Family fam(sets.begin(), sets.end());
  minimize_family(fam);
  std::uint64_t nodes = node_budget;
  try {
    return family_probability(std::move(fam), p, nodes);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace rtg
