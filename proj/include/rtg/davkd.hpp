#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtg/letters.hpp"
#include "rtg/relator.hpp"

namespace rtg {

// A decorated abstract triangular diagram: m triangular faces glued along
// sides into a disc.  Sides of face f are darts 3f+s, s in {0,1,2}, listed
// counterclockwise; side s runs from corner s to corner s+1 (mod 3).
//
// alpha pairs darts across glued (internal) edges; -1 marks a boundary side.
// Decorations per face: a label in 1..k (faces sharing a label must be
// fulfilled by the same relator), an orientation bit, and a basepoint corner.
struct FaceDecoration {
  std::uint32_t label = 1;
  bool reversed = false;     // false: relator read counterclockwise
  std::uint8_t basepoint = 0;  // corner in {0,1,2}

  bool operator==(const FaceDecoration&) const = default;
};

struct Diagram {
  std::uint32_t m = 0;
  std::vector<FaceDecoration> faces;  // size m
  std::vector<std::int32_t> alpha;    // size 3m, involution without fixed points

  std::uint32_t internal_edges() const {  // l1
    std::uint32_t paired = 0;
    for (std::int32_t a : alpha) paired += a >= 0;
    return paired / 2;
  }
  std::uint32_t boundary_edges() const {  // l2
    std::uint32_t free_sides = 0;
    for (std::int32_t a : alpha) free_sides += a < 0;
    return free_sides;
  }
  std::uint32_t label_count() const {  // k
    std::uint32_t k = 0;
    for (const FaceDecoration& f : faces) k = f.label > k ? f.label : k;
    return k;
  }
  // Faces per label, indexed by label-1 (not sorted).
  std::vector<std::uint32_t> label_multiplicities() const;

  bool operator==(const Diagram&) const = default;
};

inline std::uint32_t dart_of(std::uint32_t face, std::uint32_t side) {
  return 3 * face + side;
}
inline std::uint32_t next_dart(std::uint32_t d) { return d - d % 3 + (d + 1) % 3; }

// Position (1..3) at which side s appears in face f's relator reading:
// counterclockwise from the basepoint normally, clockwise when reversed.
inline std::uint32_t side_position(const Diagram& d, std::uint32_t face,
                                   std::uint32_t side) {
  const FaceDecoration& fd = d.faces[face];
  std::uint32_t b = fd.basepoint;
  return fd.reversed ? (b + 2 - side + 3) % 3 + 1 : (side + 3 - b) % 3 + 1;
}

// The letter read along dart (face, side) in the face's counterclockwise
// direction, when the face's label is fulfilled by relator r.
inline LetterId letter_along_side(const Diagram& d, std::uint32_t face,
                                  std::uint32_t side, const Relator& r) {
  LetterId x = r.letters[side_position(d, face, side) - 1];
  return d.faces[face].reversed ? inverse(x) : x;
}

// Number of vertex classes of the glued complex (corner orbits).
std::uint32_t vertex_count(const Diagram& d);

// Structural validity: alpha a fixed-point-free partial involution,
// face-connected, Euler characteristic V - E + F = 1 (disc), labels
// contiguous 1..k and normalized by first appearance, basepoints in range.
// Returns an explanation for the first violation, nullopt when valid.
// forbid_self_adjacent additionally rejects edges gluing a face to itself
// (the enumerator's class; loaded diagrams may keep them).
std::optional<std::string> diagram_error(const Diagram& d,
                                         bool forbid_self_adjacent = false);

// False exactly when some internal edge joins two faces carrying the same
// label with opposite orientation bits at equal positions: such a pair
// cancels and the diagram is not reduced.
bool is_reduced(const Diagram& d);

// JSON interchange:
// {"format":"rtg-davkd","version":1,"m":2,
//  "faces":[{"label":1,"orientation":1,"basepoint":0}, ...],
//  "edges":[{"a":[0,2],"b":[1,0]}, {"a":[0,0],"boundary":true}, ...]}
// orientation is +1 (counterclockwise) or -1 (reversed).  No side may appear
// twice; internal edges are required, boundary entries may be omitted.
std::string diagram_json(const Diagram& d);
Diagram parse_diagram_json(const std::string& text);

Diagram load_diagram_file(const std::string& path);
void save_diagram_file(const Diagram& d, const std::string& path);

}  // namespace rtg
