#include <doctest.h>

#include <cmath>

#include "rtg/gprime.hpp"

using namespace rtg;

TEST_CASE("eps = 0 yields an empty graph in every trial") {
  GPrimeConfig cfg;
  cfg.n = 4;
  cfg.m_pairs = 5;
  cfg.eps = 0.0;
  cfg.p = 0.1;
  cfg.trials = 20;
  cfg.seed = 3;
  PathStats st = gprime_path_stats(cfg);
  CHECK(st.mean_edges == 0.0);
  CHECK(st.mean_x == 0.0);
  CHECK(st.mean_y == 0.0);
  CHECK(st.exact_mean_x == 0.0);
}

TEST_CASE("planted pairs are valid, distinct and reproducible") {
  GPrimeConfig cfg;
  cfg.n = 3;
  cfg.m_pairs = 8;
  cfg.eps = 0.1;
  cfg.p = 0.1;
  cfg.trials = 1;
  cfg.seed = 11;
  PathStats a = gprime_path_stats(cfg);
  PathStats b = gprime_path_stats(cfg);
  REQUIRE(a.planted.size() == 8);
  CHECK(a.planted == b.planted);
  for (auto [x, y] : a.planted) {
    CHECK(x < y);
    CHECK(y != inverse(x));
    CHECK(y < 6);
  }
}

TEST_CASE("pair space bound is enforced") {
  GPrimeConfig cfg;
  cfg.n = 2;  // C(4,2) - 2 = 4 valid pairs
  cfg.m_pairs = 5;
  CHECK_THROWS_AS(gprime_path_stats(cfg), std::invalid_argument);
}

TEST_CASE("y is bounded by pairs of paths and reported consistently") {
  GPrimeConfig cfg;
  cfg.n = 4;
  cfg.m_pairs = 12;
  cfg.eps = 1.0;
  cfg.p = 0.25;  // dense enough to see real paths
  cfg.trials = 40;
  cfg.seed = 5150;
  PathStats st = gprime_path_stats(cfg);
  CHECK(st.y_pair_bound_ok);
  CHECK(st.max_y <= st.max_x * (st.max_x > 0 ? st.max_x - 1 : 0) / 2);
  CHECK(st.mean_x > 0.0);  // sanity: the regime produces paths
}

TEST_CASE("thread count does not change the statistics") {
  GPrimeConfig cfg;
  cfg.n = 4;
  cfg.m_pairs = 10;
  cfg.eps = 0.8;
  cfg.p = 0.2;
  cfg.trials = 60;
  cfg.seed = 21;
  PathStats a = gprime_path_stats(cfg);
  cfg.threads = 4;
  PathStats b = gprime_path_stats(cfg);
  CHECK(a.mean_edges == b.mean_edges);
  CHECK(a.mean_x == b.mean_x);
  CHECK(a.mean_y == b.mean_y);
}

TEST_CASE("empirical mean of x matches the exact expectation") {
  GPrimeConfig cfg;
  cfg.n = 6;
  cfg.m_pairs = 10;
  cfg.eps = 1.0;
  cfg.p = 0.05;  // eps * p = 0.05
  cfg.trials = 1000;
  cfg.seed = 90210;
  cfg.threads = 4;
  PathStats st = gprime_path_stats(cfg);
  REQUIRE(st.exact_mean_x > 0.0);
  double sigma = st.std_x / std::sqrt(static_cast<double>(cfg.trials));
  CHECK(std::abs(st.mean_x - st.exact_mean_x) <= 3.0 * sigma + 1e-12);
}

TEST_CASE("exact expectation is consistent with a single-edge construction") {
  // With one planted pair {a, b} and q = 1 every valid third letter is
  // present, so the graph and its path count are deterministic.
  GPrimeConfig cfg;
  cfg.n = 2;
  cfg.m_pairs = 1;
  cfg.eps = 1.0;
  cfg.p = 1.0;
  cfg.trials = 2;
  cfg.seed = 8;
  PathStats st = gprime_path_stats(cfg);
  CHECK(st.std_x == 0.0);
  CHECK(st.mean_x == st.exact_mean_x);
}
