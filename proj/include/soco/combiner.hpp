#pragma once

#include <memory>

#include "soco/bit_predictor.hpp"
#include "soco/oco_experts.hpp"

namespace soco {

// (1 - weight) * w1 + weight * w2, weight in [0, 1].
Vec combine_point(const Vec& w1, const Vec& w2, double weight);

// Per-round cost of one expert: normalized loss value plus the weighted
// movement penalty lambda * G * ||w_t - w_{t+1}||.
double expert_cost(double f_value, double move_norm, double lambda, double grad_bound);

// Relative loss bit (l1 - l2) / ((1 + M) G D) in [-1, 1]. Both costs must lie
// in [0, (1 + M) G D]; a violation means an expert broke its movement bound.
double relative_loss_bit(double l1, double l2, double movement_constant, double grad_bound,
                         double diameter);

struct CombinerConfig {
  double lambda = 0.0;             // switching-cost weight
  double movement_constant = 2.0;  // M: experts promise moves <= M*D/lambda
  double grad_bound = 1.0;         // G
  double diameter = 1.0;           // D
  DnpParams meta_params;           // confidence function of the meta predictor
};

/// Aggregates two experts by steering a scaled-bit conservative predictor
/// with their relative per-round costs, and playing the convex combination
/// given by its confidence.
///
/// A round is two-phase: the currently cached point is the prediction; feed()
/// settles the round by advancing both children, forming the relative-cost
/// bit from their now-observable movements, updating the meta predictor, and
/// caching the next prediction. The combiner is therefore always one step
/// ahead of its own meta-update, and point() after the t-th feed is w_{t+1}.
class Combiner final : public Expert {
 public:
  Combiner(std::unique_ptr<Expert> left, std::unique_ptr<Expert> right, CombinerConfig config);

  const Vec& point() const override { return point_; }
  void feed(const LossRecord& loss) override;

  double weight() const { return weight_; }
  const BitPredictor& meta() const { return meta_; }
  const Expert& left() const { return *left_; }
  const Expert& right() const { return *right_; }

 private:
  std::unique_ptr<Expert> left_;
  std::unique_ptr<Expert> right_;
  CombinerConfig cfg_;
  double bit_scale_;  // max(sqrt(lambda), 1)
  BitPredictor meta_;
  double weight_;
  Vec point_;
};

}  // namespace soco
