#include "rtg/arithmetic.hpp"

#include <cmath>
#include <stdexcept>

namespace rtg {

ArithmeticParams arithmetic_params(std::uint64_t n, double a, double b) {
  if (n < 16) throw std::domain_error("arithmetic_params: n must be >= 16");
  if (a <= 0 || b <= 1) throw std::domain_error("arithmetic_params: bad a or b");
  ArithmeticParams out;
  out.n = n;
  out.a = a;
  out.b = b;
  double ln_n = std::log(static_cast<double>(n));
  out.f = std::log(ln_n) / std::cbrt(ln_n);
  out.density = 0.5 - out.f / 3.0;
  out.p = std::pow(static_cast<double>(n), -1.5 - out.f);
  out.k_window = 200.0 / out.f;
  out.window_lo = out.k_window * out.k_window / 2.0;
  out.window_hi = 240.0 * out.k_window * out.k_window;
  out.tail_terms = static_cast<std::uint64_t>(out.window_hi);

  // log of sum_{m<=M} exp(t_m) with t_m = m ln(6am) - (f/2) ln n.  t_m is
  // strictly increasing in m and consecutive terms differ by about
  // ln(6am) + 1, so summing from m = M downward converges after a handful
  // of terms; the cutoff only skips terms below double precision.
  auto term = [&](double m) { return m * std::log(6.0 * a * m); };
  double m_top = static_cast<double>(out.tail_terms);
  double t_top = term(m_top);
  double rest = 0.0;
  for (double m = m_top - 1; m >= 1; m -= 1) {
    double r = std::exp(term(m) - t_top);
    rest += r;
    if (r < 1e-20) break;
  }
  out.log_tail_sum = t_top + std::log1p(rest) - out.f / 2.0 * ln_n;

  double q = b / (out.f * out.f);
  out.log_majorant = q * std::log(q) - out.f / 2.0 * ln_n;
  out.majorant_holds = out.log_tail_sum <= out.log_majorant;
  return out;
}

}  // namespace rtg
