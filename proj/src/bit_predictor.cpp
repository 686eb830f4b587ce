#include "soco/bit_predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace soco {

namespace {
// Slack for bits produced by upstream float arithmetic that may land a hair
// above the declared magnitude.
constexpr double kBitTol = 1e-12;
}  // namespace

BitPredictor::BitPredictor(DnpParams params, UpdateMode mode, double mu)
    : params_(params), mode_(mode), mu_(mu) {
  if (!(mu > 0.0) || mu > 1.0) {
    throw std::invalid_argument("BitPredictor: mu must satisfy 0 < mu <= 1, got mu=" +
                                std::to_string(mu));
  }
}

bool BitPredictor::update(double bit) {
  if (std::fabs(bit) > mu_ + kBitTol) {
    throw std::invalid_argument("BitPredictor: |bit| = " + std::to_string(std::fabs(bit)) +
                                " exceeds declared mu = " + std::to_string(mu_));
  }
  const double rho = params_.discount;
  if (mode_ == UpdateMode::kPlain) {
    x_ = rho * x_ + bit;
    return true;
  }
  const double u = params_.threshold;
  const bool unsure = (x_ >= 0.0 && x_ <= u);
  const bool wrong = (x_ < 0.0 && bit > 0.0) || (x_ > u && bit < 0.0);
  if (unsure || wrong) {
    x_ = rho * x_ + bit;
    return true;
  }
  x_ = rho * x_;
  return false;
}

double dnp_reward_lower_bound(const DnpParams& p, double mu, double tau, double bit_sum,
                              bool from_start) {
  const double n = p.horizon;
  const double u = p.threshold;
  if (from_start) {
    return std::max(0.0, bit_sum - tau * (u + 2.0 * mu) / n - u) - p.zeta * tau;
  }
  return std::max(0.0, bit_sum - (tau / n) * (u + 2.0 * mu) - u - mu) - u - mu - p.zeta * tau;
}

double prediction_change_bound(const DnpParams& p, double mu) {
  return mu * std::sqrt(std::log(1.0 / p.zeta) / p.horizon) + p.zeta * mu / 4.0;
}

BitPredictor make_scaled_predictor(const DnpParams& p, double lambda) {
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("make_scaled_predictor: lambda must be nonnegative");
  }
  const double scale = std::max(std::sqrt(lambda), 1.0);
  return BitPredictor(p, UpdateMode::kConservative, 1.0 / scale);
}

double scaled_reward_lower_bound(const DnpParams& p, double lambda, double tau, double bit_sum) {
  const double s = std::max(std::sqrt(lambda), 1.0);
  const double n = p.horizon;
  const double u = p.threshold;
  const double inner = bit_sum - s * u * (tau + n) / n - (2.0 * tau + n) / n;
  return std::max(0.0, inner) - s * u - 1.0 - s * p.zeta * tau;
}

}  // namespace soco
