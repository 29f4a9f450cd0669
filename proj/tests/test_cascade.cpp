#include <doctest.h>

#include "rtg/cascade.hpp"
#include "rtg/rng.hpp"
#include "rtg/sampling.hpp"

using namespace rtg;

namespace {

Presentation make(std::uint32_t n, std::initializer_list<const char*> lines) {
  std::string text = "n=" + std::to_string(n) + "\n";
  for (const char* l : lines) text += std::string(l) + "\n";
  return parse_presentation_text(text);
}

}  // namespace

TEST_CASE("empty relator set: no merges, 2n+1 singleton classes") {
  Presentation p(3);
  DeductionState s = cascade_close(p);
  CHECK(s.log.empty());
  CHECK(s.classes.components == 7);
  CHECK(!s.all_trivial());
  CHECK(involution_closed(s));
}

TEST_CASE("aab, aac, abC collapses everything") {
  // b ~ c from the shared prefix; then b,C adjacent and mutually inverse
  // forces a ~ e; then the identity rule finishes the collapse.
  Presentation p = make(3, {"g1 g1 g2", "g1 g1 g3", "g1 g2 G3"});
  DeductionState s = cascade_close(p);
  CHECK(s.all_trivial());
  CHECK(involution_closed(s));
  CHECK(validate_cascade_log(p, {}, s));
}

TEST_CASE("all 28 relators over two generators collapse") {
  Presentation p(2);
  for_each_relator(2, [&](const Relator& r) { p.relators.push_back(r); });
  DeductionState s = cascade_close(p);
  CHECK(s.all_trivial());
  CHECK(validate_cascade_log(p, {}, s));
}

TEST_CASE("aab with aaB derives only b ~ b^-1") {
  Presentation p = make(2, {"g1 g1 g2", "g1 g1 G2"});
  DeductionState s = cascade_close(p);
  CHECK(!s.all_trivial());
  const LetterId a = 0, b = 2;
  CHECK(s.classes.same(b, inverse(b)));
  CHECK(!s.classes.same(a, inverse(a)));
  CHECK(!s.letter_trivial(a));
  CHECK(!s.letter_trivial(b));
  CHECK(involution_closed(s));
  CHECK(validate_cascade_log(p, {}, s));
}

TEST_CASE("inverse-pair rule fires on classes created by earlier merges") {
  // aab and aaB merge b with b^-1; then bab contains the adjacent pair
  // (b, b^-1) up to classes, so its remaining letter collapses.
  Presentation p = make(2, {"g1 g1 g2", "g1 g1 G2", "g2 g1 g2"});
  DeductionState s = cascade_close(p);
  CHECK(s.all_trivial());
  bool saw_inverse_pair = false;
  for (const CascadeStep& step : s.log)
    if (step.rule == CascadeRule::InversePair) saw_inverse_pair = true;
  CHECK(saw_inverse_pair);
  CHECK(validate_cascade_log(p, {}, s));
}

TEST_CASE("killed letters seed e's class and propagate") {
  Presentation p = make(2, {"g1 g1 g2"});
  // Killing g1 turns aab into b = e.
  DeductionState s = cascade_close(p, {0});
  CHECK(s.all_trivial());
  CHECK(validate_cascade_log(p, {0}, s));

  Presentation q(2);
  DeductionState t = cascade_close(q, {0});
  CHECK(t.letter_trivial(0));
  CHECK(t.letter_trivial(1));
  CHECK(!t.letter_trivial(2));
  CHECK(validate_cascade_log(q, {0}, t));
}

TEST_CASE("cascade merges are monotone under adding relators") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Presentation big = sample_presentation({.n = 3, .p = 0.06, .seed = derive_seed(501, seed)});
    Presentation small(3);
    Rng pick(derive_seed(502, seed));
    for (const Relator& r : big.relators)
      if (pick.below(2) == 0) small.relators.push_back(r);
    DeductionState ss = cascade_close(small);
    DeductionState sb = cascade_close(big);
    for (std::uint32_t x = 0; x <= 6; ++x)
      for (std::uint32_t y = x + 1; y <= 6; ++y)
        if (ss.classes.same(x, y)) CHECK(sb.classes.same(x, y));
  }
}

TEST_CASE("random presentations: involution closure and replayable logs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    double p_inc = 0.02 + 0.03 * static_cast<double>(seed % 5);
    Presentation p = sample_presentation({.n = 3, .p = p_inc, .seed = derive_seed(77, seed)});
    DeductionState s = cascade_close(p);
    CHECK(involution_closed(s));
    CHECK(validate_cascade_log(p, {}, s));
  }
}
