#pragma once

#include <cstdint>

namespace rtg {

// Derived quantities of the asymptotic regime at a concrete n: the slowly
// vanishing exponent f(n) = ln ln n / (ln n)^{1/3}, the density
// d = 1/2 - f/3, the probability p = n^{-3/2-f}, the diagram-size window
// [K^2/2, 240 K^2] with K = 200/f, and the dominant-term tail sum
//   T(n) = sum_{m <= 240 K^2} (6am)^m n^{-f/2}
// in log space together with its closed-form majorant
//   (b/f^2)^{b/f^2} n^{-f/2}.
struct ArithmeticParams {
  std::uint64_t n = 0;
  double a = 0, b = 0;
  double f = 0;
  double density = 0;
  double p = 0;
  double k_window = 0;  // K = 200/f
  double window_lo = 0, window_hi = 0;
  std::uint64_t tail_terms = 0;  // M = floor(240 K^2)
  double log_tail_sum = 0;
  double log_majorant = 0;
  bool majorant_holds = false;
};

// Throws std::domain_error for n < 16 (ln ln n and the exponent relations
// need n above e^e and the window constants blow up below that).
ArithmeticParams arithmetic_params(std::uint64_t n, double a = 30.0,
                                   double b = 3e7);

}  // namespace rtg
