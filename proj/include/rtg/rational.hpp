#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rtg {

// Small exact rational on 64-bit parts; all quantities here are tiny
// (component counts, face counts, parsed decimals), comparisons go through
// 128-bit intermediates.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(|num|, den) == 1

  static Rational of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return of(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return of(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a == b || a < b;
  }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses "0.3", "-1.25", "2" into an exact rational.
inline Rational rational_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_decimal: empty");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  long long num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (dot) throw std::invalid_argument("rational_from_decimal: two dots");
      dot = true;
      continue;
    }
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("rational_from_decimal: bad character");
    digits = true;
    num = num * 10 + (s[i] - '0');
    if (dot) den *= 10;
  }
  if (!digits) throw std::invalid_argument("rational_from_decimal: no digits");
  return Rational::of(neg ? -num : num, den);
}

}  // namespace rtg
