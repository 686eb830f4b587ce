#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "soco/oco_experts.hpp"

namespace soco {

/// Seeded 64-bit generator (splitmix64). The full algorithm is spelled out so
/// any language can reproduce the streams bit-for-bit:
///
///   state' = state + 0x9E3779B97F4A7C15
///   z = state'
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
///
/// next_double() maps output to [0, 1) as (output >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Uniform draw inside the ball: rejection-sample the cube [-1,1]^d until the
// squared norm is <= 1, then scale by the radius. Consumes d doubles per try.
Vec uniform_in_ball(const BallDomain& dom, SplitMix64& rng);

enum class ScheduleKind { kPiecewise, kDrift };

/// Time-indexed loss targets c_1..c_T, all inside the domain. Piecewise
/// schedules stress interval regret; drift schedules realize a comparator
/// sequence with a controllable path length.
struct TargetSchedule {
  std::vector<Vec> targets;
  ScheduleKind kind = ScheduleKind::kPiecewise;
  std::uint64_t seed = 0;
  int segments = 1;          // piecewise only
  double path_budget = 0.0;  // drift only

  std::int64_t rounds() const { return static_cast<std::int64_t>(targets.size()); }
  std::size_t dimension() const { return targets.empty() ? 0 : targets.front().size(); }

  // Realized sum of ||c_t - c_{t+1}|| over t = 1..T-1.
  double path_length() const;
};

enum class BitKind { kAlternating, kBiased, kBlocks };

/// Adversarial bit stream with |b_t| <= mu.
struct BitStream {
  std::vector<double> bits;
  BitKind kind = BitKind::kAlternating;
  std::uint64_t seed = 0;
  double mu = 1.0;
};

// Distance-to-target loss G * ||w - c||: convex, gradient norm exactly G away
// from the target and zero at the kink, minimum 0 over any domain containing
// the target.
LossRecord distance_loss(Vec target, double grad_bound);

// Piecewise-stationary targets: segment j ends at ceil(j*T/segments); each
// segment's target is one uniform ball draw. Deterministic per seed.
TargetSchedule piecewise_targets(std::int64_t rounds, int segments, const BallDomain& dom,
                                 std::uint64_t seed);

// Random-walk targets with per-step displacement path_budget/(T-1): each step
// moves along a uniform random direction, folds radially back into the ball
// when it would exit, and is shrunk onto the chord if folding lengthened it,
// so every realized step is at most the nominal one.
TargetSchedule drift_targets(std::int64_t rounds, double path_budget, const BallDomain& dom,
                             std::uint64_t seed);

// Alternating: mu, -mu, ... Biased(p): +mu with probability p else -mu.
// Blocks(len): magnitude mu, sign flipping every len rounds.
BitStream adversarial_bits(BitKind kind, std::int64_t rounds, double mu, std::uint64_t seed,
                           double bias = 0.5, std::int64_t block_len = 1);

// CSV persistence, columns t,c_1..c_d.
void write_targets_csv(const std::string& path, const TargetSchedule& schedule);
std::vector<Vec> read_targets_csv(const std::string& path);

}  // namespace soco
