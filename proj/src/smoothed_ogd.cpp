#include "soco/smoothed_ogd.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace soco {

namespace {
constexpr double kE = 2.71828182845904523536;
}

StackSchedule make_schedule(std::int64_t total_rounds, double lambda, double zeta,
                            double grad_bound, double diameter, double movement_constant) {
  if (!(zeta > 0.0) || zeta > 1.0 / kE) {
    throw std::invalid_argument("make_schedule: zeta must satisfy 0 < zeta <= 1/e");
  }
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("make_schedule: lambda must be nonnegative");
  }
  const double t = static_cast<double>(total_rounds);
  const double log_inv_zeta = std::log(1.0 / zeta);
  const double floor_arg = t / (32.0 * std::max(lambda, 1.0) * log_inv_zeta);
  if (!(floor_arg >= 1.0)) {
    const auto min_t = static_cast<std::int64_t>(
        std::ceil(32.0 * std::max(lambda, 1.0) * log_inv_zeta));
    throw std::invalid_argument(
        "make_schedule: horizon too short for a single level; need total_rounds >= " +
        std::to_string(min_t) + ", got " + std::to_string(total_rounds));
  }

  StackSchedule s;
  s.total_rounds = total_rounds;
  s.lambda = lambda;
  s.zeta = zeta;
  s.movement_constant = movement_constant;
  s.grad_bound = grad_bound;
  s.diameter = diameter;
  s.num_levels = static_cast<int>(std::floor(std::log2(floor_arg))) + 1;
  s.horizon_precondition_met =
      t >= std::max(std::sqrt(lambda) * std::log2(t), kE);

  s.levels.reserve(static_cast<std::size_t>(s.num_levels));
  for (int i = 1; i <= s.num_levels; ++i) {
    const double n_i = t * std::exp2(1.0 - static_cast<double>(i));
    s.levels.push_back({n_i, ogd_step_size(diameter, grad_bound, lambda, n_i)});
  }
  return s;
}

SmoothedOgd::SmoothedOgd(StackSchedule schedule, BallDomain domain, Vec init)
    : sched_(std::move(schedule)), domain_(std::move(domain)) {
  if (!domain_.contains(init)) {
    throw std::invalid_argument("SmoothedOgd: initial point outside the domain");
  }
  std::unique_ptr<Expert> stack = std::make_unique<OgdExpert>(
      domain_, init, sched_.levels[0].step_size, sched_.grad_bound);
  for (int i = 2; i <= sched_.num_levels; ++i) {
    const StackLevel& lvl = sched_.levels[static_cast<std::size_t>(i - 1)];
    auto leaf = std::make_unique<OgdExpert>(domain_, init, lvl.step_size, sched_.grad_bound);
    CombinerConfig cfg;
    cfg.lambda = sched_.lambda;
    cfg.movement_constant = sched_.movement_constant;
    cfg.grad_bound = sched_.grad_bound;
    cfg.diameter = sched_.diameter;
    // make_params re-validates the per-level horizon against zeta; the level
    // count K guarantees it passes for every level of a valid schedule.
    cfg.meta_params = make_params(lvl.horizon, sched_.zeta);
    stack = std::make_unique<Combiner>(std::move(stack), std::move(leaf), cfg);
  }
  top_ = std::move(stack);
}

void SmoothedOgd::round(const LossRecord& loss) {
  if (rounds_ >= sched_.total_rounds) {
    throw std::runtime_error("SmoothedOgd: schedule is horizon-bound to " +
                             std::to_string(sched_.total_rounds) + " rounds");
  }
  top_->feed(loss);
  ++rounds_;
}

double adaptive_regret_bound(double tau, double lambda, double grad_bound, double diameter,
                             double total_rounds) {
  if (!(tau >= 1.0)) {
    throw std::invalid_argument("adaptive_regret_bound: tau must be >= 1");
  }
  if (!(total_rounds >= kE)) {
    throw std::invalid_argument("adaptive_regret_bound: total_rounds must be >= e");
  }
  const double gd = grad_bound * diameter;
  return 2.0 * gd * std::sqrt((1.0 + lambda) * tau) +
         113.0 * gd * std::max(std::sqrt(lambda), 1.0) * std::sqrt(tau * std::log(total_rounds));
}

double dynamic_regret_bound(double tau, double lambda, double grad_bound, double diameter,
                            double total_rounds, double path) {
  if (!(path >= 0.0)) {
    throw std::invalid_argument("dynamic_regret_bound: path must be nonnegative");
  }
  if (!(tau >= 1.0)) {
    throw std::invalid_argument("dynamic_regret_bound: tau must be >= 1");
  }
  const double gd = grad_bound * diameter;
  const double stretch = tau * (1.0 + 2.0 * path / diameter);
  return 2.0 * gd * std::sqrt((1.0 + lambda) * stretch) +
         120.0 * gd * std::max(std::sqrt(lambda), 1.0) *
             std::sqrt(stretch * std::log(total_rounds));
}

}  // namespace soco
