#pragma once

#include "soco/dnp_core.hpp"

namespace soco {

enum class UpdateMode {
  kPlain,         // deviation always absorbs the bit
  kConservative,  // bit ignored (deviation only shrinks) when confident and correct
};

/// Discounted-normal bit predictor.
///
/// Maintains a geometrically discounted deviation x of the observed bit
/// stream and predicts confidence(x) in [0, 1]. In conservative mode the
/// deviation absorbs a bit only when the predictor is unsure (x in
/// [0, threshold], inclusive) or provably wrong (x < 0 with a positive bit,
/// x > threshold with a negative bit); otherwise x merely shrinks by the
/// discount. This keeps x within [-mu, threshold + mu] forever, which is what
/// makes per-interval guarantees possible.
///
/// Single-owner state machine; transitions are deterministic.
class BitPredictor {
 public:
  // mu is the declared magnitude bound of incoming bits, in (0, 1]. Feeding a
  // larger bit is an error, not a silent renormalization.
  BitPredictor(DnpParams params, UpdateMode mode, double mu);

  // Current prediction g(x) in [0, 1].
  double predict() const { return confidence(x_, params_); }

  // Consumes one bit and advances the deviation. Returns true when the
  // standard update x' = rho*x + b was applied, false when the conservative
  // branch only shrank x. Plain mode always returns true.
  bool update(double bit);

  double deviation() const { return x_; }
  double mu() const { return mu_; }
  UpdateMode mode() const { return mode_; }
  const DnpParams& params() const { return params_; }

 private:
  DnpParams params_;
  double x_ = 0.0;
  UpdateMode mode_;
  double mu_;
};

// Lower bound on the cumulative reward
//   sum_t ( g(x_t) b_t - (1/mu) |g(x_t) - g(x_{t+1})| )
// of a conservative predictor over any interval of length tau whose bits sum
// to bit_sum. `from_start` selects the tighter form valid for intervals
// beginning at round 1 (where the deviation is exactly zero).
double dnp_reward_lower_bound(const DnpParams& p, double mu, double tau, double bit_sum,
                              bool from_start);

// Upper bound on |g(x_t) - g(x_{t+1})| for any single step:
//   mu * sqrt(ln(1/zeta)/n) + zeta * mu / 4.
double prediction_change_bound(const DnpParams& p, double mu);

// Predictor for the lambda-weighted reward
//   sum_t ( g(x_t) b_t - lambda |g(x_t) - g(x_{t+1})| ),
// obtained by feeding bits scaled down by max(sqrt(lambda), 1). The declared
// mu is 1/max(sqrt(lambda), 1); the caller performs the scaling.
BitPredictor make_scaled_predictor(const DnpParams& p, double lambda);

// Lower bound on the lambda-weighted reward of the scaled predictor over an
// interval of length tau, in terms of the unscaled bit sum:
//   max(0, bit_sum - s*U*(tau+n)/n - (2*tau+n)/n) - s*U - 1 - s*zeta*tau,
// where s = max(sqrt(lambda), 1) and U is the threshold.
double scaled_reward_lower_bound(const DnpParams& p, double lambda, double tau, double bit_sum);

}  // namespace soco
