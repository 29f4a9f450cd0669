#include <doctest.h>

#include <cmath>

#include "rtg/rng.hpp"
#include "rtg/sampling.hpp"
#include "rtg/zgraph.hpp"

using namespace rtg;

namespace {

Presentation make(std::uint32_t n, std::initializer_list<const char*> lines) {
  std::string text = "n=" + std::to_string(n) + "\n";
  for (const char* l : lines) text += std::string(l) + "\n";
  return parse_presentation_text(text);
}

std::vector<LetterId> z_of(std::initializer_list<LetterId> ls) { return ls; }

}  // namespace

TEST_CASE("empty presentation gives an edgeless graph") {
  ZGraphStats st = z_graph_stats(Presentation(4), z_of({0, 1}));
  CHECK(st.edge_count == 0);
  CHECK(st.nontrivial_components == 0);
  CHECK(st.vertex_count == 6);
  CHECK(st.q == 0.0);
}

TEST_CASE("one relator with one z letter gives exactly one edge") {
  // z = g1; relator (g1, g2, g3) yields edge {g2, g3}.
  ZGraphStats st = z_graph_stats(make(3, {"g1 g2 g3"}), z_of({0, 1}));
  CHECK(st.edge_count == 1);
  CHECK(st.nontrivial_components == 1);
  CHECK(st.max_component_edges == 1);
}

TEST_CASE("relators with zero or two z letters contribute nothing") {
  std::vector<LetterId> z = {0, 1, 2, 3};  // g1, g2 and inverses
  // (g1, g2, g3): two z letters; (g3, g4, g3): zero z letters.
  ZGraphStats st = z_graph_stats(make(4, {"g1 g2 g3", "g3 g4 g3"}), z);
  CHECK(st.edge_count == 0);
}

TEST_CASE("repeated outside letters form loops and are skipped") {
  // (g2, g1, g2) has one z letter g1 but its outside letters coincide.
  ZGraphStats st = z_graph_stats(make(2, {"g2 g1 g2"}), z_of({0, 1}));
  CHECK(st.edge_count == 0);
}

TEST_CASE("duplicate edges from different relators are counted once") {
  // Both relators witness the pair {g2, g3} with a z letter.
  ZGraphStats st = z_graph_stats(make(3, {"g1 g2 g3", "g2 g1 g3"}), z_of({0, 1}));
  CHECK(st.edge_count == 1);
}

TEST_CASE("components are tracked with their edge counts") {
  // Edges {g2,g3}, {g2,G3} share vertex g2; edge {g4,G2}... build a second
  // component from letters disjoint from the first.
  Presentation p = make(5, {"g1 g2 g3", "g1 g2 G3", "g1 g4 g5"});
  ZGraphStats st = z_graph_stats(p, z_of({0, 1}));
  CHECK(st.edge_count == 3);
  CHECK(st.nontrivial_components == 2);
  CHECK(st.max_component_edges == 2);
}

TEST_CASE("z must be closed under inversion and in range") {
  CHECK_THROWS_AS(z_graph_stats(Presentation(2), z_of({0})), std::invalid_argument);
  CHECK_THROWS_AS(z_graph_stats(Presentation(2), z_of({9, 8})), std::invalid_argument);
}

TEST_CASE("edge count matches an exact expectation over random samples") {
  // For each unordered outside pair {x, y}, the edge appears unless every
  // relator whose letter multiset is {x, y, z in Z} is excluded.
  const std::uint32_t n = 5;
  const double p = 0.004;
  std::vector<LetterId> z = {0, 1};

  std::vector<bool> in_z(2 * n, false);
  for (LetterId l : z) in_z[l] = true;
  std::vector<std::vector<std::uint64_t>> pair_words(2 * n,
                                                     std::vector<std::uint64_t>(2 * n, 0));
  for_each_relator(n, [&](const Relator& r) {
    LetterId outside[3];
    int zc = 0, oc = 0;
    for (LetterId l : r.letters) {
      if (in_z[l]) ++zc;
      else outside[oc++] = l;
    }
    if (zc != 1 || outside[0] == outside[1]) return;
    LetterId x = std::min(outside[0], outside[1]);
    LetterId y = std::max(outside[0], outside[1]);
    ++pair_words[x][y];
  });
  double expected_edges = 0.0;
  for (LetterId x = 0; x < 2 * n; ++x)
    for (LetterId y = x + 1; y < 2 * n; ++y)
      if (!in_z[x] && !in_z[y])
        expected_edges += 1.0 - std::pow(1.0 - p, static_cast<double>(pair_words[x][y]));

  const int trials = 400;
  double sum = 0.0, sumsq = 0.0;
  for (int t = 0; t < trials; ++t) {
    Presentation sample = sample_presentation({.n = n, .p = p, .seed = derive_seed(4242, t)});
    ZGraphStats st = z_graph_stats(sample, z);
    sum += static_cast<double>(st.edge_count);
    sumsq += static_cast<double>(st.edge_count) * static_cast<double>(st.edge_count);
  }
  double mean = sum / trials;
  double var = (sumsq - sum * sum / trials) / (trials - 1);
  double sigma = std::sqrt(var / trials);
  CHECK(std::abs(mean - expected_edges) <= 3.0 * sigma + 1e-9);
}

TEST_CASE("far below threshold the components stay in the sparse shape") {
  // At this p the expected edge count is ~2 on 58 vertices, so almost every
  // sample has few components, none with more than two edges.
  const std::uint32_t n = 30;
  const double p = 1e-4;
  int ok = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    Presentation sample = sample_presentation({.n = n, .p = p, .seed = derive_seed(777, t)});
    ZGraphStats st = z_graph_stats(sample, {0, 1});
    if (st.within_sparse_shape) ++ok;
  }
  CHECK(ok > trials / 2);
}
