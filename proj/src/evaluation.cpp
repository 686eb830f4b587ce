#include "soco/evaluation.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "soco/smoothed_ogd.hpp"

namespace soco {

void RunTrace::validate() const {
  if (predictions.size() != loss_values.size() + 1) {
    throw std::invalid_argument("RunTrace: need T+1 predictions for T losses, got " +
                                std::to_string(predictions.size()) + " and " +
                                std::to_string(loss_values.size()));
  }
  if (targets.rounds() != rounds()) {
    throw std::invalid_argument("RunTrace: target schedule length does not match losses");
  }
}

namespace {

void check_interval(std::int64_t r, std::int64_t s, std::int64_t total, const char* where) {
  if (r < 1 || s < r || s > total) {
    throw std::out_of_range(std::string(where) + ": invalid interval [" + std::to_string(r) +
                            ", " + std::to_string(s) + "] for T = " + std::to_string(total));
  }
}

// Cumulative distance loss of a raw candidate point over [r, s], with the
// candidate first projected onto the ball. Dimension is at most 2.
double projected_cum_loss(const TargetSchedule& targets, std::int64_t r, std::int64_t s,
                          const BallDomain& dom, double grad_bound,
                          const std::array<double, 2>& cand, std::size_t d,
                          std::array<double, 2>* projected) {
  std::array<double, 2> w = cand;
  double off2 = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double diff = w[k] - dom.center[k];
    off2 += diff * diff;
  }
  const double off = std::sqrt(off2);
  if (off > dom.radius && off > 0.0) {
    const double shrink = dom.radius / off;
    for (std::size_t k = 0; k < d; ++k) {
      w[k] = dom.center[k] + shrink * (w[k] - dom.center[k]);
    }
  }
  double total = 0.0;
  for (std::int64_t t = r; t <= s; ++t) {
    const Vec& c = targets.targets[static_cast<std::size_t>(t - 1)];
    double n2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double diff = w[k] - c[k];
      n2 += diff * diff;
    }
    total += std::sqrt(n2);
  }
  if (projected) *projected = w;
  return grad_bound * total;
}

// Axis sample positions lo, lo+step, ..., always including hi.
std::vector<double> axis_samples(double lo, double hi, double step) {
  std::vector<double> v;
  for (double x = lo; x <= hi + 1e-12 * std::max(1.0, std::fabs(hi)); x += step) v.push_back(x);
  if (v.empty() || v.back() < hi - 1e-12 * std::max(1.0, std::fabs(hi))) v.push_back(hi);
  return v;
}

}  // namespace

double switching_cost(const RunTrace& trace, std::int64_t r, std::int64_t s) {
  check_interval(r, s, trace.rounds(), "switching_cost");
  double moves = 0.0;
  for (std::int64_t t = r; t <= s; ++t) {
    moves += distance(trace.predictions[static_cast<std::size_t>(t - 1)],
                      trace.predictions[static_cast<std::size_t>(t)]);
  }
  return trace.lambda * trace.grad_bound * moves;
}

OracleResult best_fixed_point(const TargetSchedule& targets, std::int64_t r, std::int64_t s,
                              const BallDomain& dom, double grad_bound, double resolution) {
  check_interval(r, s, targets.rounds(), "best_fixed_point");
  const std::size_t d = dom.dimension();
  if (d < 1 || d > 2) {
    throw std::invalid_argument("best_fixed_point: grid mode supports dimension 1 or 2, got " +
                                std::to_string(d));
  }
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("best_fixed_point: resolution must be positive");
  }

  std::array<double, 2> best{};
  double best_value = 0.0;
  bool have_best = false;

  auto scan = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    std::array<double, 2> cand{};
    std::array<double, 2> proj{};
    for (double x : xs) {
      cand[0] = x;
      for (double y : ys) {
        cand[1] = y;
        const double v = projected_cum_loss(targets, r, s, dom, grad_bound, cand, d, &proj);
        if (!have_best || v < best_value) {
          best_value = v;
          best = proj;
          have_best = true;
        }
      }
    }
  };

  // Coarse pass over the bounding box; out-of-ball points project to the
  // boundary, so no feasible region is missed near the rim.
  {
    const std::vector<double> xs =
        axis_samples(dom.center[0] - dom.radius, dom.center[0] + dom.radius, resolution);
    const std::vector<double> ys =
        d == 2 ? axis_samples(dom.center[1] - dom.radius, dom.center[1] + dom.radius, resolution)
               : std::vector<double>{0.0};
    scan(xs, ys);
  }

  // One refinement around the incumbent. The box is wide enough (1.5x the
  // coarse step each way) that the true minimizer of the convex objective is
  // inside it whenever the incumbent's coarse cell neighbors it.
  {
    const std::array<double, 2> incumbent = best;
    const double half = 1.5 * resolution;
    const double fine = resolution / 10.0;
    const std::vector<double> xs = axis_samples(incumbent[0] - half, incumbent[0] + half, fine);
    const std::vector<double> ys =
        d == 2 ? axis_samples(incumbent[1] - half, incumbent[1] + half, fine)
               : std::vector<double>{0.0};
    scan(xs, ys);
  }

  OracleResult out;
  out.point.assign(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(d));
  out.value = best_value;
  return out;
}

double interval_regret(const RunTrace& trace, std::int64_t r, std::int64_t s, double resolution) {
  check_interval(r, s, trace.rounds(), "interval_regret");
  double cost = 0.0;
  for (std::int64_t t = r; t <= s; ++t) {
    cost += trace.loss_values[static_cast<std::size_t>(t - 1)];
  }
  cost += switching_cost(trace, r, s);
  const OracleResult oracle =
      best_fixed_point(trace.targets, r, s, trace.domain, trace.grad_bound, resolution);
  return cost - oracle.value;
}

std::vector<AdaptiveRow> adaptive_profile(const RunTrace& trace,
                                          const std::vector<std::int64_t>& windows,
                                          double resolution, int stride_divisor) {
  trace.validate();
  const std::int64_t total = trace.rounds();
  std::vector<AdaptiveRow> rows;
  rows.reserve(windows.size());
  for (std::int64_t tau : windows) {
    if (tau < 1 || tau > total) {
      throw std::invalid_argument("adaptive_profile: window " + std::to_string(tau) +
                                  " outside [1, " + std::to_string(total) + "]");
    }
    const std::int64_t stride =
        stride_divisor <= 0 ? 1 : std::max<std::int64_t>(1, tau / stride_divisor);
    AdaptiveRow row;
    row.tau = tau;
    bool first = true;
    for (std::int64_t r = 1; r <= total - tau + 1; r += stride) {
      const double measured = interval_regret(trace, r, r + tau - 1, resolution);
      if (first || measured > row.measured) {
        row.measured = measured;
        row.r_star = r;
        first = false;
      }
    }
    row.bound = adaptive_regret_bound(static_cast<double>(tau), trace.lambda, trace.grad_bound,
                                      trace.diameter, static_cast<double>(total));
    row.margin = row.bound - row.measured;
    rows.push_back(row);
  }
  return rows;
}

DynamicResult dynamic_regret(const RunTrace& trace, const std::vector<Vec>& comparators,
                             std::int64_t r, std::int64_t s) {
  trace.validate();
  const std::int64_t total = trace.rounds();
  check_interval(r, s, total, "dynamic_regret");
  if (static_cast<std::int64_t>(comparators.size()) != total) {
    throw std::invalid_argument("dynamic_regret: need one comparator per round");
  }
  for (const Vec& u : comparators) {
    if (!trace.domain.contains(u)) {
      throw std::invalid_argument("dynamic_regret: comparator point outside the domain");
    }
  }

  double cost = 0.0;
  double comparator_cost = 0.0;
  double path = 0.0;
  for (std::int64_t t = r; t <= s; ++t) {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    cost += trace.loss_values[i];
    comparator_cost +=
        trace.grad_bound * distance(comparators[i], trace.targets.targets[i]);
    const Vec& next = t < total ? comparators[i + 1] : comparators.back();
    path += distance(comparators[i], next);
  }
  cost += switching_cost(trace, r, s);
  return {cost - comparator_cost, path};
}

}  // namespace soco
