#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "soco/combiner.hpp"
#include "soco/oco_experts.hpp"

namespace soco {

/// Geometric schedule of the expert stack: level i runs gradient descent
/// tuned for an effective horizon n_i = T * 2^(1-i), and level i >= 2 is
/// chained onto the levels below it through a combiner with the same n_i.
struct StackLevel {
  double horizon;    // n_i, real-valued
  double step_size;  // eta_i
};

struct StackSchedule {
  std::int64_t total_rounds = 0;  // T
  double lambda = 0.0;
  double zeta = 0.0;                   // Z, default 1/T
  double movement_constant = 2.0;      // M
  double grad_bound = 1.0;             // G
  double diameter = 1.0;               // D
  int num_levels = 0;                  // K
  std::vector<StackLevel> levels;      // 1..K
  bool horizon_precondition_met = true;  // T >= max(sqrt(lambda)*log2(T), e)
};

// Builds the schedule: K = floor(log2(T / (32*max(lambda,1)*ln(1/zeta)))) + 1.
// Rejects K < 1, reporting the minimal admissible T. A failing horizon
// precondition only clears horizon_precondition_met (callers may warn).
StackSchedule make_schedule(std::int64_t total_rounds, double lambda, double zeta,
                            double grad_bound, double diameter, double movement_constant = 2.0);

/// The full stack: level 1 is a bare OGD expert; every further level wraps
/// the stack so far and a fresh OGD expert in a combiner. The top of the
/// chain is the played prediction.
///
/// Rounds are two-phase like the combiner: prediction() is w_t before the
/// t-th round() and w_{t+1} after it, so after T rounds the trailing point
/// that defines the last switch is already available.
class SmoothedOgd {
 public:
  SmoothedOgd(StackSchedule schedule, BallDomain domain, Vec init);

  const Vec& prediction() const { return top_->point(); }

  // Advances every level exactly once on the revealed loss. The schedule is
  // horizon-bound: running more than T rounds is rejected.
  void round(const LossRecord& loss);

  std::int64_t rounds_played() const { return rounds_; }
  const StackSchedule& schedule() const { return sched_; }
  const Expert& top() const { return *top_; }

 private:
  StackSchedule sched_;
  BallDomain domain_;
  std::unique_ptr<Expert> top_;
  std::int64_t rounds_ = 0;
};

// Bound on regret with switching cost over any interval of length tau:
//   2 G D sqrt((1+lambda) tau) + 113 G D max(sqrt(lambda),1) sqrt(tau ln T).
double adaptive_regret_bound(double tau, double lambda, double grad_bound, double diameter,
                             double total_rounds);

// Bound on dynamic regret with switching cost against a comparator sequence
// of path length `path` over an interval of length tau:
//   2 G D sqrt((1+lambda) tau (1+2 path/D))
//   + 120 G D max(sqrt(lambda),1) sqrt(tau (1+2 path/D) ln T).
double dynamic_regret_bound(double tau, double lambda, double grad_bound, double diameter,
                            double total_rounds, double path);

}  // namespace soco
