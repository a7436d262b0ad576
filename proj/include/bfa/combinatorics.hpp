#pragma once

#include <cstdint>
#include <stdexcept>

namespace bfa {

/// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
inline int64_t binomial(int64_t a, int64_t b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (int64_t i = 1; i <= b; ++i) {
    r = r * (unsigned __int128)(a - b + i) / (unsigned __int128)i;
    if (r > (unsigned __int128)INT64_MAX) throw std::overflow_error("binomial: exceeds 64 bits");
  }
  return (int64_t)r;
}

/// n! as int64; defined for n <= 20 (20! < 2^63).
inline int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: argument outside [0,20]");
  int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// n! as unsigned 128-bit; defined for n <= 33.
inline unsigned __int128 factorial128(int n) {
  if (n < 0 || n > 33) throw std::out_of_range("factorial128: argument outside [0,33]");
  unsigned __int128 r = 1;
  for (int i = 2; i <= n; ++i) r *= (unsigned)i;
  return r;
}

}  // namespace bfa
