#include "soco/oco_experts.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace soco {

bool BallDomain::contains(const Vec& w, double tol) const {
  return distance(w, center) <= radius + tol;
}

Vec project(const BallDomain& dom, const Vec& w) {
  check_same_dim(dom.center, w, "project");
  const double d = distance(w, dom.center);
  if (d <= dom.radius) return w;
  return add_scaled(dom.center, dom.radius / d, sub(w, dom.center));
}

OgdExpert::OgdExpert(BallDomain domain, Vec init, double step_size, double grad_bound)
    : domain_(std::move(domain)), w_(std::move(init)), eta_(step_size), grad_bound_(grad_bound) {
  if (!(eta_ > 0.0)) {
    throw std::invalid_argument("OgdExpert: step size must be positive");
  }
  if (!domain_.contains(w_)) {
    throw std::invalid_argument("OgdExpert: initial point outside the domain");
  }
}

void OgdExpert::feed(const LossRecord& loss) {
  const Vec g = loss.gradient(w_);
  const double gn = norm(g);
  if (gn > grad_bound_ + 1e-9) {
    throw std::invalid_argument("OgdExpert: gradient norm " + std::to_string(gn) +
                                " exceeds bound " + std::to_string(grad_bound_));
  }
  w_ = project(domain_, add_scaled(w_, -eta_, g));
}

double ogd_step_size(double diameter, double grad_bound, double lambda, double horizon) {
  if (!(diameter > 0.0) || !(grad_bound > 0.0) || !(horizon > 0.0)) {
    throw std::invalid_argument("ogd_step_size: diameter, grad_bound and horizon must be positive");
  }
  return (diameter / grad_bound) * std::sqrt(1.0 / ((1.0 + 2.0 * lambda) * horizon));
}

double ogd_regret_bound(double diameter, double grad_bound, double lambda, double eta, double len) {
  if (!(len >= 1.0)) {
    throw std::invalid_argument("ogd_regret_bound: interval length must be >= 1");
  }
  return diameter * diameter / (2.0 * eta) +
         (1.0 + 2.0 * lambda) * eta * len * grad_bound * grad_bound / 2.0;
}

double ogd_dynamic_regret_bound(double diameter, double grad_bound, double lambda, double eta,
                                double len, double path) {
  if (!(path >= 0.0)) {
    throw std::invalid_argument("ogd_dynamic_regret_bound: path length must be nonnegative");
  }
  return ogd_regret_bound(diameter, grad_bound, lambda, eta, len) + (diameter / eta) * path;
}

}  // namespace soco
