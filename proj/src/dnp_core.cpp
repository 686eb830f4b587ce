#include "soco/dnp_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace soco {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// erf(x) = 2/sqrt(pi) * sum_k (-1)^k x^(2k+1) / (k! (2k+1)), |x| <= 3.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;  // k = 0 term before the 2/sqrt(pi) factor
  double sum = x;
  for (int k = 1; k <= 200; ++k) {
    term *= -x2 / static_cast<double>(k);
    const double contrib = term / static_cast<double>(2 * k + 1);
    sum += contrib;
    if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
  }
  return 2.0 / std::sqrt(kPi) * sum;
}

// erfc(x) = exp(-x^2) / (x sqrt(pi)) * 1/(1 + q1/(1 + q2/(1 + ...))),
// q_m = m / (2 x^2), evaluated backward with fixed depth. Valid for x >= 3.
double erfc_continued_fraction(double x) {
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double f = 1.0;
  for (int m = 60; m >= 1; --m) {
    f = 1.0 + static_cast<double>(m) * inv2x2 / f;
  }
  return std::exp(-x * x) / (x * std::sqrt(kPi) * f);
}

}  // namespace

double erf(double x) {
  const double ax = std::fabs(x);
  double mag;
  if (ax <= 3.0) {
    mag = erf_series(ax);
  } else {
    mag = 1.0 - erfc_continued_fraction(ax);
  }
  return x < 0.0 ? -mag : mag;
}

double confidence_unclipped(double x, const DnpParams& p) {
  const double n = p.horizon;
  // Beyond this radius the confidence is guaranteed past saturation; skip the
  // exponential, which could overflow for extreme deviations.
  const double guard = 8.0 * std::sqrt(n * std::log(1.0 / p.zeta));
  if (std::fabs(x) > guard) {
    return x > 0.0 ? 2.0 : -2.0;
  }
  return std::sqrt(n / 8.0) * p.zeta * erf(x / std::sqrt(8.0 * n)) * std::exp(x * x / (16.0 * n));
}

double confidence(double x, const DnpParams& p) {
  const double g = confidence_unclipped(x, p);
  if (g <= 0.0) return 0.0;
  if (g >= 1.0) return 1.0;
  return g;
}

DnpParams make_params(double horizon, double zeta) {
  if (!(zeta > 0.0) || zeta > 1.0 / kE) {
    throw std::invalid_argument("make_params: zeta must satisfy 0 < zeta <= 1/e, got zeta=" +
                                std::to_string(zeta));
  }
  const double n_min = std::max(8.0 * kE, 16.0 * std::log(1.0 / zeta));
  if (!(horizon >= n_min)) {
    throw std::invalid_argument(
        "make_params: horizon must satisfy horizon >= max(8e, 16*ln(1/zeta)) = " +
        std::to_string(n_min) + ", got horizon=" + std::to_string(horizon));
  }

  DnpParams p{horizon, zeta, 1.0 - 1.0 / horizon, 0.0};

  // The unclipped confidence is strictly increasing and provably reaches 1
  // before sqrt(16*n*ln(1/zeta)), so a plain bisection is safe.
  double lo = 0.0;
  double hi = std::sqrt(16.0 * horizon * std::log(1.0 / zeta));
  for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (confidence_unclipped(mid, p) >= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  p.threshold = 0.5 * (lo + hi);
  return p;
}

}  // namespace soco
