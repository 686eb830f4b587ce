#pragma once

namespace soco {

/// Configuration of the discounted-normal confidence function.
///
/// Valid parameter sets satisfy:
///   - zeta in (0, 1/e]
///   - horizon >= max(8e, 16*ln(1/zeta))
///   - discount == 1 - 1/horizon
///   - threshold is the unique positive root of confidence_unclipped(x) == 1
struct DnpParams {
  double horizon;    // effective interval length n (real-valued, need not be integral)
  double zeta;       // scale parameter Z of the confidence function
  double discount;   // 1 - 1/horizon
  double threshold;  // deviation at which the unclipped confidence reaches 1
};

// Error function, 2/sqrt(pi) * integral of exp(-s^2) over [0, x].
// Maclaurin series for |x| <= 3, complementary continued fraction beyond;
// absolute error below 1e-12 everywhere.
double erf(double x);

// Unclipped confidence sqrt(n/8) * zeta * erf(x / sqrt(8n)) * exp(x^2 / (16n)).
// Odd and strictly increasing. For |x| beyond the bisection bracket the
// exponential is not evaluated (it can overflow); a sentinel of magnitude >= 1
// with the correct sign is returned instead, which downstream clipping absorbs.
double confidence_unclipped(double x, const DnpParams& p);

// Confidence clipped to [0, 1]: zero for x <= 0, one for x >= p.threshold.
double confidence(double x, const DnpParams& p);

// Validates (horizon, zeta) and solves the threshold by bisection on
// [0, sqrt(16*horizon*ln(1/zeta))] to absolute x-tolerance 1e-12.
// Throws std::invalid_argument naming the violated inequality.
DnpParams make_params(double horizon, double zeta);

}  // namespace soco
