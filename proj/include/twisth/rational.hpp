#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace twisth {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, static_cast<std::uint64_t>(k));
  return r;
}

// Nonnegative exact rational, always reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool operator==(const Rational&) const = default;
};

}  // namespace twisth
