#include "rtg/davkd.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rtg/presentation.hpp"
#include "rtg/unionfind.hpp"

namespace rtg {

std::vector<std::uint32_t> Diagram::label_multiplicities() const {
  std::vector<std::uint32_t> mult(label_count(), 0);
  for (const FaceDecoration& f : faces) ++mult[f.label - 1];
  return mult;
}

std::uint32_t vertex_count(const Diagram& d) {
  // Corners merge only through gluings: the head corner of a glued dart
  // coincides with the tail corner of its partner.  Pinched complexes are
  // not expressible, so corner orbits are exactly the complex's vertices.
  UnionFind corners(3 * d.m);
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd)
    if (d.alpha[dd] >= 0)
      corners.unite(next_dart(dd), static_cast<std::uint32_t>(d.alpha[dd]));
  return corners.components;
}

std::optional<std::string> diagram_error(const Diagram& d,
                                         bool forbid_self_adjacent) {
  if (d.m == 0) return "diagram must have at least one face";
  if (d.faces.size() != d.m) return "face list size disagrees with m";
  if (d.alpha.size() != 3 * d.m) return "side list size disagrees with m";
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd) {
    std::int32_t a = d.alpha[dd];
    if (a < -1 || a >= static_cast<std::int32_t>(3 * d.m))
      return "glued side index out of range";
    if (a < 0) continue;
    if (a == static_cast<std::int32_t>(dd)) return "side glued to itself";
    if (d.alpha[a] != static_cast<std::int32_t>(dd))
      return "gluing is not an involution";
    if (forbid_self_adjacent && static_cast<std::uint32_t>(a) / 3 == dd / 3)
      return "face glued to itself";
  }
  std::uint32_t seen = 0;
  for (std::uint32_t f = 0; f < d.m; ++f) {
    if (d.faces[f].basepoint > 2) return "basepoint out of range";
    std::uint32_t lab = d.faces[f].label;
    if (lab == 0) return "labels start at 1";
    if (lab > seen + 1) return "labels must be normalized by first appearance";
    if (lab == seen + 1) ++seen;
  }
  UnionFind comp(d.m);
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd)
    if (d.alpha[dd] >= 0) comp.unite(dd / 3, static_cast<std::uint32_t>(d.alpha[dd]) / 3);
  if (comp.components != 1) return "faces are not connected";
  std::uint32_t edges = d.internal_edges() + d.boundary_edges();
  // V - E + F = 1 singles out the disc among connected oriented gluings.
  if (vertex_count(d) + d.m != edges + 1) return "gluing is not a disc";
  return std::nullopt;
}

bool is_reduced(const Diagram& d) {
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd) {
    std::int32_t a = d.alpha[dd];
    if (a < static_cast<std::int32_t>(dd)) continue;
    std::uint32_t fa = dd / 3, fb = static_cast<std::uint32_t>(a) / 3;
    if (d.faces[fa].label != d.faces[fb].label) continue;
    if (d.faces[fa].reversed == d.faces[fb].reversed) continue;
    if (side_position(d, fa, dd % 3) ==
        side_position(d, fb, static_cast<std::uint32_t>(a) % 3))
      return false;
  }
  return true;
}

std::string diagram_json(const Diagram& d) {
  nlohmann::json j;
  j["format"] = "rtg-davkd";
  j["version"] = 1;
  j["m"] = d.m;
  nlohmann::json faces = nlohmann::json::array();
  for (const FaceDecoration& f : d.faces)
    faces.push_back({{"label", f.label},
                     {"orientation", f.reversed ? -1 : 1},
                     {"basepoint", f.basepoint}});
  j["faces"] = std::move(faces);
  nlohmann::json edges = nlohmann::json::array();
  for (std::uint32_t dd = 0; dd < 3 * d.m; ++dd) {
    if (d.alpha[dd] < 0)
      edges.push_back({{"a", {dd / 3, dd % 3}}, {"boundary", true}});
    else if (d.alpha[dd] > static_cast<std::int32_t>(dd)) {
      std::uint32_t a = static_cast<std::uint32_t>(d.alpha[dd]);
      edges.push_back({{"a", {dd / 3, dd % 3}}, {"b", {a / 3, a % 3}}});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

namespace {

std::uint32_t parse_side_ref(const nlohmann::json& v, std::uint32_t m) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
      !v[1].is_number_unsigned())
    throw ParseError("edge endpoint must be [face, side]", 1);
  std::uint32_t face = v[0].get<std::uint32_t>(), side = v[1].get<std::uint32_t>();
  if (face >= m || side > 2) throw ParseError("edge endpoint out of range", 1);
  return dart_of(face, side);
}

}  // namespace

Diagram parse_diagram_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what(), 1);
  }
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_unsigned())
    throw ParseError("expected object with integer field 'm'", 1);
  Diagram d;
  d.m = j["m"].get<std::uint32_t>();
  if (d.m == 0 || d.m > 100000) throw ParseError("face count out of range", 1);
  if (!j.contains("faces") || !j["faces"].is_array() || j["faces"].size() != d.m)
    throw ParseError("'faces' must list exactly m faces", 1);
  for (const auto& fj : j["faces"]) {
    if (!fj.is_object() || !fj.contains("label") || !fj.contains("orientation") ||
        !fj.contains("basepoint"))
      throw ParseError("face needs label, orientation, basepoint", 1);
    FaceDecoration f;
    if (!fj["label"].is_number_unsigned() || fj["label"].get<std::uint64_t>() == 0)
      throw ParseError("label must be a positive integer", 1);
    f.label = fj["label"].get<std::uint32_t>();
    int ori = fj["orientation"].is_number_integer() ? fj["orientation"].get<int>() : 0;
    if (ori != 1 && ori != -1) throw ParseError("orientation must be +1 or -1", 1);
    f.reversed = ori < 0;
    if (!fj["basepoint"].is_number_unsigned() || fj["basepoint"].get<std::uint64_t>() > 2)
      throw ParseError("basepoint must be 0, 1 or 2", 1);
    f.basepoint = fj["basepoint"].get<std::uint8_t>();
    d.faces.push_back(f);
  }
  d.alpha.assign(3 * d.m, -1);
  std::vector<bool> listed(3 * d.m, false);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("'edges' must be an array", 1);
  for (const auto& ej : j["edges"]) {
    if (!ej.is_object() || !ej.contains("a"))
      throw ParseError("edge needs endpoint 'a'", 1);
    std::uint32_t a = parse_side_ref(ej["a"], d.m);
    bool boundary = ej.value("boundary", false);
    if (boundary != !ej.contains("b"))
      throw ParseError("edge needs exactly one of 'b' or boundary:true", 1);
    if (listed[a]) throw ParseError("side listed twice", 1);
    listed[a] = true;
    if (boundary) continue;
    std::uint32_t b = parse_side_ref(ej["b"], d.m);
    if (b == a) throw ParseError("side glued to itself", 1);
    if (listed[b]) throw ParseError("side listed twice", 1);
    listed[b] = true;
    d.alpha[a] = static_cast<std::int32_t>(b);
    d.alpha[b] = static_cast<std::int32_t>(a);
  }
  if (std::optional<std::string> err = diagram_error(d))
    throw ParseError(*err, 1);
  return d;
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram_json(buf.str());
}

void save_diagram_file(const Diagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << diagram_json(d) << "\n";
}

}  // namespace rtg
