#include "soco/environments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "soco/csv.hpp"

namespace soco {

Vec uniform_in_ball(const BallDomain& dom, SplitMix64& rng) {
  const std::size_t d = dom.dimension();
  Vec q(d);
  while (true) {
    double n2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      q[k] = 2.0 * rng.next_double() - 1.0;
      n2 += q[k] * q[k];
    }
    if (n2 <= 1.0) break;
  }
  return add_scaled(dom.center, dom.radius, q);
}

namespace {

// Uniform direction on the sphere: normalized rejection draw from the unit
// ball, discarding near-zero vectors.
Vec uniform_direction(std::size_t d, SplitMix64& rng) {
  Vec q(d);
  while (true) {
    double n2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      q[k] = 2.0 * rng.next_double() - 1.0;
      n2 += q[k] * q[k];
    }
    if (n2 <= 1.0 && n2 > 1e-24) return scaled(q, 1.0 / std::sqrt(n2));
  }
}

}  // namespace

double TargetSchedule::path_length() const {
  double p = 0.0;
  for (std::size_t t = 0; t + 1 < targets.size(); ++t) {
    p += distance(targets[t], targets[t + 1]);
  }
  return p;
}

LossRecord distance_loss(Vec target, double grad_bound) {
  LossRecord loss;
  loss.min_value = 0.0;
  loss.value = [target, grad_bound](const Vec& w) { return grad_bound * distance(w, target); };
  loss.gradient = [target, grad_bound](const Vec& w) {
    const double d = distance(w, target);
    if (d == 0.0) return Vec(w.size(), 0.0);  // zero subgradient at the kink
    return scaled(sub(w, target), grad_bound / d);
  };
  return loss;
}

TargetSchedule piecewise_targets(std::int64_t rounds, int segments, const BallDomain& dom,
                                 std::uint64_t seed) {
  if (segments < 1 || static_cast<std::int64_t>(segments) > rounds) {
    throw std::invalid_argument("piecewise_targets: need 1 <= segments <= rounds");
  }
  SplitMix64 rng(seed);
  TargetSchedule s;
  s.kind = ScheduleKind::kPiecewise;
  s.seed = seed;
  s.segments = segments;
  s.targets.reserve(static_cast<std::size_t>(rounds));
  std::int64_t t = 1;
  for (int j = 1; j <= segments; ++j) {
    const std::int64_t boundary =
        (static_cast<std::int64_t>(j) * rounds + segments - 1) / segments;  // ceil(j*T/segments)
    const Vec target = uniform_in_ball(dom, rng);
    for (; t <= boundary; ++t) s.targets.push_back(target);
  }
  return s;
}

TargetSchedule drift_targets(std::int64_t rounds, double path_budget, const BallDomain& dom,
                             std::uint64_t seed) {
  if (!(path_budget >= 0.0)) {
    throw std::invalid_argument("drift_targets: path budget must be nonnegative");
  }
  if (rounds < 1) {
    throw std::invalid_argument("drift_targets: need at least one round");
  }
  SplitMix64 rng(seed);
  TargetSchedule s;
  s.kind = ScheduleKind::kDrift;
  s.seed = seed;
  s.path_budget = path_budget;
  s.targets.reserve(static_cast<std::size_t>(rounds));

  Vec cur = uniform_in_ball(dom, rng);
  s.targets.push_back(cur);
  const double step = rounds > 1 ? path_budget / static_cast<double>(rounds - 1) : 0.0;
  for (std::int64_t t = 1; t < rounds; ++t) {
    const Vec dir = uniform_direction(dom.dimension(), rng);
    Vec next = add_scaled(cur, step, dir);
    const double rho = distance(next, dom.center);
    if (rho > dom.radius) {
      // Fold radially back inside, then shrink onto the chord if the fold
      // lengthened the step; the ball is convex so the shrunk point stays in.
      next = add_scaled(dom.center, (2.0 * dom.radius - rho) / rho, sub(next, dom.center));
      if (!dom.contains(next)) next = project(dom, next);
      const double realized = distance(cur, next);
      if (realized > step && realized > 0.0) {
        next = add_scaled(cur, step / realized, sub(next, cur));
      }
    }
    s.targets.push_back(next);
    cur = next;
  }
  return s;
}

BitStream adversarial_bits(BitKind kind, std::int64_t rounds, double mu, std::uint64_t seed,
                           double bias, std::int64_t block_len) {
  if (!(mu > 0.0) || mu > 1.0) {
    throw std::invalid_argument("adversarial_bits: mu must satisfy 0 < mu <= 1");
  }
  if (rounds < 1) {
    throw std::invalid_argument("adversarial_bits: need at least one round");
  }
  if (kind == BitKind::kBlocks && block_len < 1) {
    throw std::invalid_argument("adversarial_bits: block length must be >= 1");
  }
  SplitMix64 rng(seed);
  BitStream s;
  s.kind = kind;
  s.seed = seed;
  s.mu = mu;
  s.bits.reserve(static_cast<std::size_t>(rounds));
  for (std::int64_t t = 1; t <= rounds; ++t) {
    switch (kind) {
      case BitKind::kAlternating:
        s.bits.push_back(t % 2 == 1 ? mu : -mu);
        break;
      case BitKind::kBiased:
        s.bits.push_back(rng.next_double() < bias ? mu : -mu);
        break;
      case BitKind::kBlocks:
        s.bits.push_back(((t - 1) / block_len) % 2 == 0 ? mu : -mu);
        break;
    }
  }
  return s;
}

void write_targets_csv(const std::string& path, const TargetSchedule& schedule) {
  const std::size_t d = schedule.dimension();
  std::vector<std::string> header{"t"};
  for (std::size_t k = 1; k <= d; ++k) header.push_back("c_" + std::to_string(k));
  std::vector<std::vector<std::string>> rows;
  rows.reserve(schedule.targets.size());
  for (std::size_t t = 0; t < schedule.targets.size(); ++t) {
    std::vector<std::string> row{std::to_string(t + 1)};
    for (double c : schedule.targets[t]) row.push_back(csv::format_double(c));
    rows.push_back(std::move(row));
  }
  csv::write_file(path, header, rows);
}

std::vector<Vec> read_targets_csv(const std::string& path) {
  const csv::Table t = csv::read_file(path);
  if (t.header.size() < 2 || t.header[0] != "t") {
    throw std::runtime_error("targets csv: unexpected header in " + path);
  }
  std::vector<Vec> targets;
  targets.reserve(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Vec c;
    for (std::size_t k = 1; k < t.rows[i].size(); ++k) {
      c.push_back(csv::parse_double(t.rows[i][k], path, i + 1));
    }
    targets.push_back(std::move(c));
  }
  return targets;
}

}  // namespace soco
