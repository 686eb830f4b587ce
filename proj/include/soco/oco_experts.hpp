#pragma once

#include <functional>

#include "soco/vec.hpp"

namespace soco {

/// Euclidean ball decision domain. The only convex body shipped; projection
/// is exact and comparator oracles stay tractable. Other bodies can be added
/// behind the same projection contract.
struct BallDomain {
  Vec center;
  double radius = 1.0;

  double diameter() const { return 2.0 * radius; }
  std::size_t dimension() const { return center.size(); }
  bool contains(const Vec& w, double tol = 1e-9) const;
};

// Euclidean-nearest point of the ball: w itself when inside, otherwise the
// radial projection onto the boundary.
Vec project(const BallDomain& dom, const Vec& w);

/// One round's convex loss, presented as value/gradient oracles plus the
/// known minimum of the raw loss over the domain (used by evaluators to
/// normalize values into [0, G*D]).
struct LossRecord {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  double min_value = 0.0;
};

/// Contract for any online algorithm the combiner can aggregate: expose the
/// current point, advance on a revealed loss. After feed() the point is the
/// prediction for the next round.
class Expert {
 public:
  virtual ~Expert() = default;
  virtual const Vec& point() const = 0;
  virtual void feed(const LossRecord& loss) = 0;
};

/// Projected online gradient descent with a constant step size.
class OgdExpert final : public Expert {
 public:
  // grad_bound is the configured G; gradients whose norm exceeds it (beyond
  // a 1e-9 tolerance) are rejected as an environment bug.
  OgdExpert(BallDomain domain, Vec init, double step_size, double grad_bound);

  const Vec& point() const override { return w_; }
  void feed(const LossRecord& loss) override;

  double step_size() const { return eta_; }

 private:
  BallDomain domain_;
  Vec w_;
  double eta_;
  double grad_bound_;
};

// Step size (D/G) * sqrt(1 / ((1 + 2*lambda) * n)) tuned for an effective
// horizon n under switching-cost weight lambda.
double ogd_step_size(double diameter, double grad_bound, double lambda, double horizon);

// Upper bound on OGD's regret with switching cost over any interval of
// length len: D^2/(2 eta) + (1 + 2*lambda) * eta * len * G^2 / 2.
double ogd_regret_bound(double diameter, double grad_bound, double lambda, double eta, double len);

// Same with a moving comparator of path length `path`: adds (D/eta) * path.
double ogd_dynamic_regret_bound(double diameter, double grad_bound, double lambda, double eta,
                                double len, double path);

}  // namespace soco
