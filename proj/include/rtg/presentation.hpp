#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/relator.hpp"

namespace rtg {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// A finite set of relators over n generators; kept sorted and deduplicated.
struct Presentation {
  std::uint32_t n = 0;
  std::vector<Relator> relators;

  Presentation() = default;
  // Letter ids are packed into 10 bits, so 2n must stay below 1024.
  explicit Presentation(std::uint32_t n_) : n(n_) {
    if (n_ < 1 || n_ > kMaxGenerators)
      throw std::invalid_argument("Presentation: n must be in [1, " +
                                  std::to_string(kMaxGenerators) + "]");
  }

  // Insert preserving sorted-set semantics.
  void add(const Relator& r);
  bool contains(const Relator& r) const;
  std::size_t size() const { return relators.size(); }

  bool operator==(const Presentation&) const = default;
};

// Text format (versioned header comment, "n=<int>", one relator per line):
//   # rtg presentation format v1
//   n=2
//   g1 g1 G2
Presentation parse_presentation_text(const std::string& text);
std::string serialize_presentation_text(const Presentation& p);

// JSON form: {"format":"rtg-presentation","version":1,"n":2,
//             "relators":[["g1","g1","G2"], ...]}
Presentation parse_presentation_json(const std::string& text);
std::string serialize_presentation_json(const Presentation& p);

// Reads a file, dispatching on a leading '{' to the JSON parser.
Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path);

}  // namespace rtg
