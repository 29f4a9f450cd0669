#include "rtg/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace rtg {

std::vector<long long> exponent_row(const Relator& r, std::uint32_t n) {
  std::vector<long long> row(n, 0);
  for (LetterId l : r.letters) row[l / 2] += is_negative(l) ? -1 : +1;
  return row;
}

std::vector<mpz_class> smith_divisors(std::vector<std::vector<mpz_class>> m,
                                      std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t t = 0;
  std::vector<mpz_class> diag;

  auto find_min_pivot = [&](std::size_t from, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = from; i < rows; ++i)
      for (std::size_t j = from; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        mpz_class a = abs(m[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  };

  while (t < rows && t < cols) {
    std::size_t pi = t, pj = t;
    if (!find_min_pivot(t, pi, pj)) break;
    std::swap(m[pi], m[t]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder became the smaller pivot
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Clear the pivot row.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility: pivot must divide the rest of the submatrix.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }

  diag.resize(cols, mpz_class(0));
  return diag;
}

AbelianizationResult abelianization(const Presentation& p,
                                    const std::vector<LetterId>& killed) {
  std::vector<std::vector<mpz_class>> m;
  for (const Relator& r : p.relators) {
    auto row = exponent_row(r, p.n);
    std::vector<mpz_class> mr(p.n);
    for (std::uint32_t j = 0; j < p.n; ++j) mr[j] = static_cast<long>(row[j]);
    m.push_back(std::move(mr));
  }
  for (LetterId z : killed) {
    std::vector<mpz_class> mr(p.n, mpz_class(0));
    mr[z / 2] = 1;
    m.push_back(std::move(mr));
  }
  return AbelianizationResult{smith_divisors(std::move(m), p.n)};
}

namespace {

// Row basis in echelon form over int64 with overflow detection.
struct Hermite {
  std::uint32_t n;
  std::vector<std::vector<long long>> pivot_row;  // by pivot column; empty = none
  std::uint32_t unit_pivots = 0;
  bool overflow = false;

  explicit Hermite(std::uint32_t n_) : n(n_), pivot_row(n_) {}

  bool sub_scaled(std::vector<long long>& v, const std::vector<long long>& w,
                  long long q, std::uint32_t from) {
    for (std::uint32_t j = from; j < n; ++j) {
      long long prod, res;
      if (__builtin_mul_overflow(q, w[j], &prod) ||
          __builtin_sub_overflow(v[j], prod, &res))
        return false;
      v[j] = res;
    }
    return true;
  }

  // True when the basis spans all of Z^n (every pivot exists and is a unit).
  bool complete() const { return unit_pivots == n; }

  void add_row(std::vector<long long> v) {
    if (overflow) return;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      if (pivot_row[j].empty()) {
        if (v[j] < 0)
          for (std::uint32_t k = j; k < n; ++k) v[k] = -v[k];
        if (v[j] == 1) ++unit_pivots;
        pivot_row[j] = std::move(v);
        return;
      }
      auto& pr = pivot_row[j];
      // Euclid on the pivot column entries; both rows stay in the lattice.
      while (v[j] != 0) {
        long long q = pr[j] / v[j];
        if (!sub_scaled(pr, v, q, j)) {
          overflow = true;
          return;
        }
        std::swap(pr, v);
      }
      if (pr[j] < 0)
        for (std::uint32_t k = j; k < n; ++k) pr[k] = -pr[k];
      // Pivot may have shrunk to a unit.
      // (Recount lazily: exact bookkeeping below.)
    }
  }

  void recount_units() {
    unit_pivots = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      if (!pivot_row[j].empty() && pivot_row[j][j] == 1) ++unit_pivots;
  }
};

}  // namespace

std::optional<bool> abelianization_trivial_fast(const Presentation& p,
                                                const std::vector<LetterId>& killed,
                                                std::uint64_t* rows_used) {
  Hermite h(p.n);
  std::uint64_t used = 0;
  auto feed = [&](std::vector<long long> row) {
    h.add_row(std::move(row));
    ++used;
    if (h.overflow) return true;  // stop feeding; result discarded below
    h.recount_units();
    return h.complete();
  };
  bool done = false;
  for (LetterId z : killed) {
    std::vector<long long> row(p.n, 0);
    row[z / 2] = 1;
    if ((done = feed(std::move(row)))) break;
  }
  if (!done)
    for (const Relator& r : p.relators)
      if (feed(exponent_row(r, p.n))) break;
  if (rows_used) *rows_used = used;
  if (h.overflow) return std::nullopt;
  return h.complete();
}

}  // namespace rtg
