#pragma once

#include <cstdint>
#include <vector>

#include "soco/environments.hpp"
#include "soco/oco_experts.hpp"

namespace soco {

/// One algorithm run against one target schedule. Holds T+1 predictions: the
/// trailing point is the one extra step that defines the last forward switch.
/// Loss values are normalized (raw value minus the round's minimum).
struct RunTrace {
  std::vector<Vec> predictions;     // w_1..w_{T+1}
  std::vector<double> loss_values;  // f_t(w_t), t = 1..T
  TargetSchedule targets;
  BallDomain domain;
  double lambda = 0.0;
  double grad_bound = 1.0;
  double diameter = 1.0;

  std::int64_t rounds() const { return static_cast<std::int64_t>(loss_values.size()); }
  void validate() const;  // length consistency; throws on violation
};

struct AdaptiveRow {
  std::int64_t tau = 0;
  std::int64_t r_star = 0;  // start of the worst interval of length tau
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - measured
};

struct DynamicResult {
  double regret = 0.0;
  double path = 0.0;
};

// lambda * G * sum_{t=r}^{s} ||w_t - w_{t+1}||, 1-based inclusive indices.
double switching_cost(const RunTrace& trace, std::int64_t r, std::int64_t s);

struct OracleResult {
  Vec point;
  double value = 0.0;  // cumulative normalized loss of `point` over [r, s]
};

// Best fixed comparator by grid search over the ball at the given resolution,
// refined once around the incumbent at resolution/10. The returned value is
// within G*(s-r+1)*resolution*sqrt(d)/10 of the true minimum. Grid mode is
// limited to dimension <= 2.
OracleResult best_fixed_point(const TargetSchedule& targets, std::int64_t r, std::int64_t s,
                              const BallDomain& dom, double grad_bound, double resolution);

// Regret with switching cost over [r, s] against the grid-oracle comparator.
double interval_regret(const RunTrace& trace, std::int64_t r, std::int64_t s, double resolution);

// For each window length tau, the maximum interval regret over sampled starts
// {1, 1+stride, ...} with stride = max(1, tau/stride_divisor), paired with
// the stack's regret bound. stride_divisor <= 0 selects exhaustive starts
// (stride 1), the reference mode for small horizons.
std::vector<AdaptiveRow> adaptive_profile(const RunTrace& trace,
                                          const std::vector<std::int64_t>& windows,
                                          double resolution, int stride_divisor);

// Regret with switching cost against a full-horizon comparator sequence
// u_1..u_T over [r, s], together with the comparator path length
// sum_{t=r}^{s} ||u_t - u_{t+1}|| (u_{T+1} is defined as u_T).
DynamicResult dynamic_regret(const RunTrace& trace, const std::vector<Vec>& comparators,
                             std::int64_t r, std::int64_t s);

}  // namespace soco
