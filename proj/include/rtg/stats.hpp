#pragma once

#include <cmath>
#include <cstdint>

namespace rtg {

// Two-sided 95% normal quantile, to full double precision.
inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for a binomial proportion.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                double z = kZ95) {
  if (trials == 0) return {0.0, 1.0};
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  double lo = center - half, hi = center + half;
  if (successes == 0) lo = 0.0;
  if (successes == trials) hi = 1.0;
  return {lo < 0.0 ? 0.0 : lo, hi > 1.0 ? 1.0 : hi};
}

// Exact one-sided sign-test p-value for paired designs: probability of
// seeing >= wins successes among wins+losses fair coin flips.
inline double paired_sign_test(std::uint64_t wins, std::uint64_t losses) {
  std::uint64_t total = wins + losses;
  if (total == 0) return 1.0;
  // Sum C(total, k) / 2^total for k = wins..total via log-gamma.
  double lg_total = std::lgamma(static_cast<double>(total) + 1.0);
  double acc = 0.0;
  for (std::uint64_t k = wins; k <= total; ++k) {
    double lg = lg_total - std::lgamma(static_cast<double>(k) + 1.0) -
                std::lgamma(static_cast<double>(total - k) + 1.0) -
                static_cast<double>(total) * std::log(2.0);
    acc += std::exp(lg);
  }
  return acc > 1.0 ? 1.0 : acc;
}

}  // namespace rtg
