#include "rtg/constraint.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "rtg/unionfind.hpp"

namespace rtg {

namespace {

struct StageEdge {
  std::uint32_t u, v;    // vertex ids 3*(stage-1) + position-1
  std::uint8_t parity;   // 1 when the two letters must be mutually inverse
};

}  // namespace

ConstraintAnalysis constraint_analysis(const Diagram& d, const Rational& f) {
  ConstraintAnalysis out;
  std::uint32_t k = d.label_count();
  out.k = k;
  std::vector<std::uint32_t> mult = d.label_multiplicities();

  // Stage order: multiplicity descending, first appearance ascending.  Labels
  // are normalized by first appearance, so the label itself breaks ties.
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return mult[a] != mult[b] ? mult[a] > mult[b] : a < b;
  });
  std::vector<std::uint32_t> stage_of_label(k + 1, 0);  // 1-based stages
  for (std::uint32_t i = 0; i < k; ++i) {
    stage_of_label[order[i] + 1] = i + 1;
    out.stage_labels.push_back(order[i] + 1);
    out.multiplicities.push_back(mult[order[i]]);
  }

  auto vertex = [&](std::uint32_t face, std::uint32_t side) {
    std::uint32_t stage = stage_of_label[d.faces[face].label];
    return 3 * (stage - 1) + side_position(d, face, side) - 1;
  };

  std::vector<std::vector<StageEdge>> by_stage(k + 1);
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd) {
    std::int32_t a = d.alpha[dd];
    if (a < static_cast<std::int32_t>(dd)) continue;
    std::uint32_t fa = dd / 3, fb = static_cast<std::uint32_t>(a) / 3;
    std::uint32_t u = vertex(fa, dd % 3);
    std::uint32_t v = vertex(fb, static_cast<std::uint32_t>(a) % 3);
    std::uint8_t parity = d.faces[fa].reversed == d.faces[fb].reversed ? 1 : 0;
    std::uint32_t stage = std::max(u / 3, v / 3) + 1;
    by_stage[stage].push_back({u, v, parity});
  }

  UnionFind uf(3 * k);
  SignedUnionFind signs(3 * k);
  Rational three_half_plus_f = Rational::of(3, 2) + f;
  std::uint32_t merged_total = 0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    std::uint32_t merges = 0;
    for (const StageEdge& e : by_stage[i]) {
      if (uf.unite(e.u, e.v)) ++merges;
      if (!signs.unite(e.u, e.v, e.parity)) out.sign_consistent = false;
    }
    merged_total += merges;
    std::uint32_t c = 3 * i - merged_total;
    out.components.push_back(c);
    out.stage_edges.push_back(static_cast<std::uint32_t>(by_stage[i].size()));
    out.merging_edges.push_back(merges);
    Rational di = Rational::of(c, 1) - Rational::of(i, 1) * three_half_plus_f;
    out.defect.push_back(di);
    if (i == 1 || di < out.min_defect) out.min_defect = di;
  }
  return out;
}

BoundaryBound boundary_bound_check(const Diagram& d, const Rational& f) {
  ConstraintAnalysis a = constraint_analysis(d, f);
  BoundaryBound out;
  out.lhs = Rational::of(d.boundary_edges(), 1);
  // d = 1/2 - f/3, so 3m(1 - 2d) = 2fm.
  Rational rhs = Rational::of(2 * static_cast<long long>(d.m), 1) * f;
  for (std::uint32_t i = 0; i < a.k; ++i) {
    long long mi = a.multiplicities[i];
    long long mnext = i + 1 < a.k ? a.multiplicities[i + 1] : 0;
    rhs = rhs + Rational::of(2 * (mi - mnext), 1) * a.defect[i];
  }
  out.rhs = rhs;
  out.holds = out.rhs <= out.lhs;
  out.equality = out.rhs == out.lhs;
  out.gk_edgeless = d.internal_edges() == 0;
  return out;
}

std::string analysis_json(const Diagram& d, const Rational& f) {
  ConstraintAnalysis a = constraint_analysis(d, f);
  BoundaryBound b = boundary_bound_check(d, f);
  nlohmann::json j;
  j["m"] = d.m;
  j["k"] = a.k;
  j["l1"] = d.internal_edges();
  j["l2"] = d.boundary_edges();
  j["reduced"] = is_reduced(d);
  j["sign_consistent"] = a.sign_consistent;
  j["C"] = a.components;
  nlohmann::json ds = nlohmann::json::array();
  for (const Rational& di : a.defect) ds.push_back(di.str());
  j["d"] = std::move(ds);
  j["min_d"] = a.min_defect.str();
  j["bound_lhs"] = b.lhs.str();
  j["bound_rhs"] = b.rhs.str();
  j["bound_holds"] = b.holds;
  j["bound_equality"] = b.equality;
  return j.dump();
}

}  // namespace rtg
