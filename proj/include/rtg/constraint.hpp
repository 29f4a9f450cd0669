#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtg/davkd.hpp"
#include "rtg/rational.hpp"

namespace rtg {

// Constraint graphs G_1 <= ... <= G_k of a diagram.  Labels are processed in
// stages ordered by multiplicity (descending, ties by first appearance);
// stage i contributes three vertices (label, position 1..3), and every
// internal edge joins the two (label, position) vertices it touches, at the
// stage of the later label.  C_i counts components of G_i and the defect is
// d_i = C_i - i(3/2 + f).
struct ConstraintAnalysis {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> stage_labels;    // stage -> original label
  std::vector<std::uint32_t> multiplicities;  // faces per stage, nonincreasing
  std::vector<std::uint32_t> components;      // C_i
  std::vector<std::uint32_t> stage_edges;     // edges first appearing in G_i
  std::vector<std::uint32_t> merging_edges;   // of those, how many merge parts
  std::vector<Rational> defect;               // d_i
  Rational min_defect;
  // False when the letter relations (equal or mutually inverse around each
  // component) force some letter to equal its own inverse: no relator
  // assignment can fulfill the diagram.
  bool sign_consistent = true;
};

ConstraintAnalysis constraint_analysis(const Diagram& d, const Rational& f);

// The isoperimetric inequality |boundary| >= 3m(1-2d) + 2 sum d_i (m_i - m_{i+1})
// with d = 1/2 - f/3, evaluated exactly.
struct BoundaryBound {
  Rational lhs;  // l2
  Rational rhs;
  bool holds = false;
  bool equality = false;
  bool gk_edgeless = false;  // G_k has no edges, i.e. l1 == 0
};

BoundaryBound boundary_bound_check(const Diagram& d, const Rational& f);

// One JSON object per diagram, rationals rendered exactly as strings:
// {"m":..,"k":..,"l1":..,"l2":..,"reduced":..,"sign_consistent":..,
//  "C":[..],"d":["1/2",..],"min_d":"..","bound_lhs":"..","bound_rhs":"..",
//  "bound_holds":..,"bound_equality":..}
std::string analysis_json(const Diagram& d, const Rational& f);

}  // namespace rtg
