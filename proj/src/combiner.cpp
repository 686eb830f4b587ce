#include "soco/combiner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace soco {

Vec combine_point(const Vec& w1, const Vec& w2, double weight) {
  check_same_dim(w1, w2, "combine_point");
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("combine_point: weight must lie in [0, 1]");
  }
  Vec out(w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i) {
    out[i] = (1.0 - weight) * w1[i] + weight * w2[i];
  }
  return out;
}

double expert_cost(double f_value, double move_norm, double lambda, double grad_bound) {
  return f_value + lambda * grad_bound * move_norm;
}

double relative_loss_bit(double l1, double l2, double movement_constant, double grad_bound,
                         double diameter) {
  const double range = (1.0 + movement_constant) * grad_bound * diameter;
  const double tol = 1e-9 * std::max(range, 1.0);
  for (double l : {l1, l2}) {
    if (l < -tol || l > range + tol) {
      throw std::invalid_argument("relative_loss_bit: expert cost " + std::to_string(l) +
                                  " outside [0, " + std::to_string(range) +
                                  "]; an expert broke its movement bound");
    }
  }
  const double bit = (l1 - l2) / range;
  return std::clamp(bit, -1.0, 1.0);
}

Combiner::Combiner(std::unique_ptr<Expert> left, std::unique_ptr<Expert> right,
                   CombinerConfig config)
    : left_(std::move(left)),
      right_(std::move(right)),
      cfg_(config),
      bit_scale_(std::max(std::sqrt(cfg_.lambda), 1.0)),
      meta_(make_scaled_predictor(cfg_.meta_params, cfg_.lambda)),
      weight_(meta_.predict()),
      point_(combine_point(left_->point(), right_->point(), weight_)) {
  if (!(cfg_.lambda >= 0.0) || !(cfg_.movement_constant >= 0.0)) {
    throw std::invalid_argument("Combiner: lambda and movement constant must be nonnegative");
  }
}

void Combiner::feed(const LossRecord& loss) {
  const Vec left_cur = left_->point();
  const Vec right_cur = right_->point();
  const double f1 = loss.value(left_cur) - loss.min_value;
  const double f2 = loss.value(right_cur) - loss.min_value;

  left_->feed(loss);
  right_->feed(loss);

  const double l1 = expert_cost(f1, distance(left_cur, left_->point()), cfg_.lambda,
                                cfg_.grad_bound);
  const double l2 = expert_cost(f2, distance(right_cur, right_->point()), cfg_.lambda,
                                cfg_.grad_bound);
  const double bit = relative_loss_bit(l1, l2, cfg_.movement_constant, cfg_.grad_bound,
                                       cfg_.diameter);

  meta_.update(bit / bit_scale_);
  weight_ = meta_.predict();
  point_ = combine_point(left_->point(), right_->point(), weight_);
}

}  // namespace soco
