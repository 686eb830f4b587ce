// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <cstdint>

namespace oracles {

// 50-term Maclaurin series: erf(x) = 2/sqrt(pi) * sum (-1)^k x^(2k+1)/(k!(2k+1)).
inline double erf_series_50(double x) {
  long double sum = 0.0L;
  long double power = x;          // x^(2k+1)
  long double factorial = 1.0L;   // k!
  for (int k = 0; k < 50; ++k) {
    if (k > 0) {
      power *= static_cast<long double>(x) * x;
      factorial *= k;
    }
    const long double term = power / (factorial * (2 * k + 1));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(2.0L / std::sqrt(3.14159265358979323846L) * sum);
}

// Reference copy of the documented splitmix64 transition, written out on its
// own so generator tests do not route through the library.
struct SplitMixRef {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace oracles
