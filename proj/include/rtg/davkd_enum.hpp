#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rtg/davkd.hpp"

namespace rtg {

// Gluing structures are undecorated diagrams: just the side pairing.
using Structure = std::vector<std::int32_t>;

// Rooted breadth-first encoding of a structure: faces are numbered in
// discovery order, sides relative to each face's entry side, and every side
// emits (partner face id + 1, partner relative side) or (0, 0) on the
// boundary.  Two structures are isomorphic (by an orientation-preserving
// relabeling) exactly when some roots give equal encodings.
std::string structure_code(const Structure& alpha, std::uint32_t root);
std::string structure_canonical_code(const Structure& alpha);

// Decorated form: appends per face, in discovery order, the label
// renormalized by first appearance in that order, the absolute orientation
// bit, and the basepoint relative to the entry side.
std::string diagram_code(const Diagram& d, std::uint32_t root);
std::string diagram_canonical_code(const Diagram& d);

// All gluing structures with m faces and no self-adjacent face, one
// representative per isomorphism class, sorted by canonical code.  Built by
// closing {single triangle} under "attach a fresh face to a boundary side"
// and "sew two consecutive boundary sides of distinct faces".
std::vector<Structure> enumerate_structures(std::uint32_t m);

enum class EnumMode { Raw, Canonical };

// Streams diagrams with m faces: every structure from enumerate_structures,
// decorated with every first-appearance-normalized labeling, orientation
// assignment and basepoint tuple.  Raw mode emits all of them; Canonical
// mode emits one representative per decorated isomorphism class.  The order
// is deterministic.  Returns the number of diagrams emitted; the callback
// may return false to stop early.
std::uint64_t for_each_davkd(std::uint32_t m, EnumMode mode,
                             const std::function<bool(const Diagram&)>& fn);

// Raw stream size without enumerating decorations: structures * 6^m * Bell(m).
std::uint64_t raw_davkd_count(std::uint32_t m);

// First-appearance-normalized label sequences of length m (restricted growth
// strings); fn may return false to stop.  Used by the raw stream and by
// samplers that decorate structures directly.
void for_each_labeling(std::uint32_t m,
                       const std::function<bool(const std::vector<std::uint32_t>&)>& fn);

}  // namespace rtg
