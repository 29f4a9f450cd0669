#include <doctest.h>

#include "rtg/coset.hpp"
#include "rtg/presentation.hpp"

using namespace rtg;

namespace {

Presentation make(std::uint32_t n, std::initializer_list<const char*> lines) {
  std::string text = "n=" + std::to_string(n) + "\n";
  for (const char* l : lines) text += std::string(l) + "\n";
  return parse_presentation_text(text);
}

}  // namespace

TEST_CASE("cyclic group of order three") {
  CosetResult r = coset_enumerate(make(1, {"g1 g1 g1"}), 100);
  REQUIRE(r.finite);
  CHECK(r.order == 3);
  CHECK(r.verified);
}

TEST_CASE("two relators forcing Z/5") {
  // b = a^-2 and a = b^2 give a^5 = e.
  CosetResult r = coset_enumerate(make(2, {"g1 g1 g2", "G1 g2 g2"}), 1000);
  REQUIRE(r.finite);
  CHECK(r.order == 5);
  CHECK(r.verified);
}

TEST_CASE("two relators forcing Z/3") {
  CosetResult r = coset_enumerate(make(2, {"g1 g1 g2", "g2 g2 g1"}), 1000);
  REQUIRE(r.finite);
  CHECK(r.order == 3);
  CHECK(r.verified);
}

TEST_CASE("three relators forcing the trivial group") {
  CosetResult r = coset_enumerate(make(2, {"g1 g1 g2", "g2 g2 g1", "g1 G2 G2"}), 1000);
  REQUIRE(r.finite);
  CHECK(r.order == 1);
  CHECK(r.verified);
}

TEST_CASE("free group exhausts any budget") {
  CosetResult r = coset_enumerate(make(1, {}), 1000);
  CHECK(!r.finite);
  CHECK(r.cosets_defined == 1000);
  CHECK(!r.verified);
}

TEST_CASE("free rank left after killing letters stays infinite") {
  CosetResult r = coset_enumerate(make(3, {"g1 g1 g2", "g3 g3 g2"}), 500);
  CHECK(!r.finite);
}

TEST_CASE("tiny budgets report exceeded rather than guessing") {
  CosetResult r = coset_enumerate(make(1, {"g1 g1 g1"}), 2);
  CHECK(!r.finite);
  CHECK(r.cosets_defined <= 2);
}

TEST_CASE("killed letters act as the identity") {
  // aab with b killed leaves a^2 = e.
  CosetResult r = coset_enumerate(make(2, {"g1 g1 g2"}), 100, {2});
  REQUIRE(r.finite);
  CHECK(r.order == 2);
  CHECK(r.verified);

  // aab with a killed leaves b = e.
  CosetResult s = coset_enumerate(make(2, {"g1 g1 g2"}), 100, {0});
  REQUIRE(s.finite);
  CHECK(s.order == 1);

  // Killing every generator is the trivial group even with no relators.
  CosetResult t = coset_enumerate(make(2, {}), 100, {0, 1, 2, 3});
  REQUIRE(t.finite);
  CHECK(t.order == 1);
}

TEST_CASE("enumeration is deterministic") {
  Presentation p = make(2, {"g1 g1 g2", "G1 g2 g2"});
  CosetResult a = coset_enumerate(p, 1000);
  CosetResult b = coset_enumerate(p, 1000);
  CHECK(a.finite == b.finite);
  CHECK(a.order == b.order);
  CHECK(a.cosets_defined == b.cosets_defined);
}

TEST_CASE("coset order matches abelianization for abelian quotient examples") {
  // aba and bab both force Z/3 (b = a^-2, then a^3 = e).
  CosetResult r = coset_enumerate(make(2, {"g1 g2 g1", "g2 g1 g2"}), 1000);
  REQUIRE(r.finite);
  CHECK(r.order == 3);
}
