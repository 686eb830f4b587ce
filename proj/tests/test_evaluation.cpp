#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "soco/evaluation.hpp"
#include "soco/smoothed_ogd.hpp"
#include "test_helpers.hpp"

using soco::BallDomain;
using soco::RunTrace;
using soco::TargetSchedule;
using soco::Vec;

namespace {

// Hand-built 3-round 1-D trace: predictions (0, 0.5, 0.5, 0.25) against
// targets (0.5, 0.5, -0.5) with lambda = G = 1 on the unit ball.
RunTrace scripted_trace() {
  RunTrace trace;
  trace.domain = BallDomain{{0.0}, 1.0};
  trace.lambda = 1.0;
  trace.grad_bound = 1.0;
  trace.diameter = 2.0;
  trace.predictions = {{0.0}, {0.5}, {0.5}, {0.25}};
  trace.targets.targets = {{0.5}, {0.5}, {-0.5}};
  trace.loss_values = {0.5, 0.0, 1.0};  // |w_t - c_t|
  return trace;
}

}  // namespace

TEST_CASE("switching cost: anchors") {
  RunTrace trace = scripted_trace();
  // (0, 1, 0) with one trailing point
  trace.predictions = {{0.0}, {1.0}, {0.0}, {0.0}};
  CHECK(soco::switching_cost(trace, 1, 2) == doctest::Approx(2.0).epsilon(1e-15));

  RunTrace flat = scripted_trace();
  flat.predictions = {{0.3}, {0.3}, {0.3}, {0.3}};
  CHECK(soco::switching_cost(flat, 1, 3) == 0.0);

  RunTrace free_moves = scripted_trace();
  free_moves.lambda = 0.0;
  CHECK(soco::switching_cost(free_moves, 1, 3) == 0.0);

  CHECK_THROWS_AS(soco::switching_cost(trace, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(soco::switching_cost(trace, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(soco::switching_cost(trace, 1, 4), std::out_of_range);
}

TEST_CASE("best fixed point: stationary targets recover the target") {
  TargetSchedule targets;
  targets.targets.assign(20, Vec{0.3, -0.4});
  const BallDomain dom{{0.0, 0.0}, 1.0};
  const auto oracle = soco::best_fixed_point(targets, 1, 20, dom, 1.0, 0.01);
  CHECK(soco::distance(oracle.point, {0.3, -0.4}) <= 0.005);
  CHECK(oracle.value <= 1.0 * 20 * 0.01 * std::sqrt(2.0) / 10.0);
}

TEST_CASE("best fixed point: symmetric pair has a flat optimum") {
  // Equal counts of -a and +a: any point between them scores 2a per pair.
  const double a = 0.6;
  TargetSchedule targets;
  for (int i = 0; i < 8; ++i) {
    targets.targets.push_back({i % 2 == 0 ? -a : a});
  }
  const BallDomain dom{{0.0}, 1.0};
  const auto oracle = soco::best_fixed_point(targets, 1, 8, dom, 1.0, 1e-3);
  CHECK(oracle.value == doctest::Approx(4 * 2.0 * a).epsilon(1e-6));
}

TEST_CASE("best fixed point: triangle targets against an independent fine grid") {
  TargetSchedule targets;
  targets.targets = {{0.6, 0.0}, {-0.3, 0.5}, {-0.3, -0.5}};
  const BallDomain dom{{0.0, 0.0}, 1.0};
  const double grad_bound = 1.0;
  const double resolution = 0.05;
  const auto oracle = soco::best_fixed_point(targets, 1, 3, dom, grad_bound, resolution);

  // Flat scan at a much finer resolution, no refinement stage.
  const double fine = 2e-3;
  double fine_best = 1e100;
  for (double x = -1.0; x <= 1.0; x += fine) {
    for (double y = -1.0; y <= 1.0; y += fine) {
      if (x * x + y * y > 1.0) continue;
      double v = 0.0;
      for (const auto& c : targets.targets) {
        v += std::sqrt((x - c[0]) * (x - c[0]) + (y - c[1]) * (y - c[1]));
      }
      fine_best = std::min(fine_best, grad_bound * v);
    }
  }
  const double slack = grad_bound * 3.0 * resolution * std::sqrt(2.0) / 10.0;
  const double fine_slack = grad_bound * 3.0 * fine * std::sqrt(2.0) / 2.0;
  CHECK(oracle.value >= fine_best - 1e-12);  // a feasible point can never beat the minimum
  CHECK(oracle.value <= fine_best + slack + fine_slack);
}

TEST_CASE("best fixed point: rejections") {
  TargetSchedule targets;
  targets.targets = {{0.0, 0.0, 0.0}};
  const BallDomain dom3{{0.0, 0.0, 0.0}, 1.0};
  CHECK_THROWS_AS(soco::best_fixed_point(targets, 1, 1, dom3, 1.0, 0.1), std::invalid_argument);
  TargetSchedule line;
  line.targets = {{0.0}};
  const BallDomain dom1{{0.0}, 1.0};
  CHECK_THROWS_AS(soco::best_fixed_point(line, 1, 1, dom1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(soco::best_fixed_point(line, 1, 2, dom1, 1.0, 0.1), std::out_of_range);
}

TEST_CASE("interval regret: scripted trace matches hand arithmetic") {
  const RunTrace trace = scripted_trace();
  // losses 0.5 + 0 + 1, switching 0.5 + 0 + 0.25, best fixed point 0.5 scores 1
  const double measured = soco::interval_regret(trace, 1, 3, 1e-3);
  CHECK(measured == doctest::Approx(2.25 - 1.0).epsilon(1e-3));
}

TEST_CASE("interval regret: optimal stationary play leaves only oracle slack") {
  const BallDomain dom{{0.0}, 1.0};
  RunTrace trace;
  trace.domain = dom;
  trace.lambda = 2.0;
  trace.grad_bound = 1.0;
  trace.diameter = 2.0;
  trace.targets.targets.assign(16, Vec{0.25});
  trace.predictions.assign(17, Vec{0.25});
  trace.loss_values.assign(16, 0.0);
  const double resolution = 1e-3;
  const double measured = soco::interval_regret(trace, 1, 16, resolution);
  CHECK(measured <= 0.0);  // oracle value is nonnegative
  CHECK(measured >= -(1.0 * 16 * resolution / 10.0));
}

TEST_CASE("adaptive profile: full-horizon window and stride structure") {
  const BallDomain dom{{0.0}, 1.0};
  const auto env = soco::piecewise_targets(128, 4, dom, 81);
  const auto sched = soco::make_schedule(128, 0.0, 0.02, 1.0, 2.0);
  const RunTrace trace = helpers::run_stack(sched, env, dom);
  const double resolution = 0.01;

  SUBCASE("window T reduces to the single full interval") {
    const auto rows = soco::adaptive_profile(trace, {128}, resolution, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].tau == 128);
    CHECK(rows[0].r_star == 1);
    CHECK(rows[0].measured ==
          doctest::Approx(soco::interval_regret(trace, 1, 128, resolution)).epsilon(1e-12));
    CHECK(rows[0].margin == doctest::Approx(rows[0].bound - rows[0].measured).epsilon(1e-12));
  }

  SUBCASE("stride divisor one scans disjoint covers") {
    const auto rows = soco::adaptive_profile(trace, {32}, resolution, 1);
    REQUIRE(rows.size() == 1);
    double manual = -1e100;
    std::int64_t manual_r = 0;
    for (std::int64_t r = 1; r <= 128 - 32 + 1; r += 32) {
      const double v = soco::interval_regret(trace, r, r + 31, resolution);
      if (v > manual) {
        manual = v;
        manual_r = r;
      }
    }
    CHECK(rows[0].measured == doctest::Approx(manual).epsilon(1e-12));
    CHECK(rows[0].r_star == manual_r);
  }

  SUBCASE("strided maximum never exceeds the exhaustive reference") {
    const std::vector<std::int64_t> windows{8, 16, 64};
    const auto exhaustive = soco::adaptive_profile(trace, windows, resolution, 0);
    const auto strided = soco::adaptive_profile(trace, windows, resolution, 2);
    for (std::size_t i = 0; i < windows.size(); ++i) {
      CHECK(strided[i].measured <= exhaustive[i].measured + 1e-12);
    }
    // divisor == window is exhaustive again
    const auto dense = soco::adaptive_profile(trace, {16}, resolution, 16);
    CHECK(dense[0].measured == exhaustive[1].measured);
    CHECK(dense[0].r_star == exhaustive[1].r_star);
  }

  CHECK_THROWS_AS(soco::adaptive_profile(trace, {256}, resolution, 2), std::invalid_argument);
}

TEST_CASE("dynamic regret: cancellation anchors") {
  const RunTrace trace = scripted_trace();

  SUBCASE("comparator equal to the played points leaves only switching cost") {
    const std::vector<Vec> comp{{0.0}, {0.5}, {0.5}};
    const auto res = soco::dynamic_regret(trace, comp, 1, 3);
    CHECK(res.regret == doctest::Approx(soco::switching_cost(trace, 1, 3)).epsilon(1e-12));
    CHECK(res.path == doctest::Approx(0.5).epsilon(1e-15));  // final hop pinned to u_T
  }

  SUBCASE("constant comparator has zero path") {
    const std::vector<Vec> comp{{0.25}, {0.25}, {0.25}};
    const auto res = soco::dynamic_regret(trace, comp, 1, 3);
    CHECK(res.path == 0.0);
    // total cost 2.25 minus comparator losses 0.25 + 0.25 + 0.75
    CHECK(res.regret == doctest::Approx(2.25 - 1.25).epsilon(1e-12));
  }

  SUBCASE("comparator equal to the targets zeroes the hitting term") {
    const auto res = soco::dynamic_regret(trace, trace.targets.targets, 1, 3);
    CHECK(res.regret == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(res.path == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(soco::dynamic_regret(trace, {{0.0}, {0.0}}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(soco::dynamic_regret(trace, {{2.0}, {0.0}, {0.0}}, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(soco::dynamic_regret(trace, trace.targets.targets, 1, 4), std::out_of_range);
  }
}

TEST_CASE("oracle sandwich: refining the resolution moves the regret very little") {
  const BallDomain dom{{0.0}, 1.0};
  const auto env = soco::piecewise_targets(64, 4, dom, 82);
  const auto sched = soco::make_schedule(64, 0.0, 0.15, 1.0, 2.0);
  const RunTrace trace = helpers::run_stack(sched, env, dom);
  for (double eps : {0.02, 0.1}) {
    const double coarse = soco::interval_regret(trace, 1, 64, eps);
    const double fine = soco::interval_regret(trace, 1, 64, eps / 10.0);
    CHECK(std::fabs(coarse - fine) <= 1.0 * 64 * eps / 10.0 + 1e-12);
  }
}

TEST_CASE("run trace validation") {
  RunTrace trace = scripted_trace();
  trace.predictions.pop_back();
  CHECK_THROWS_AS(trace.validate(), std::invalid_argument);
  RunTrace trace2 = scripted_trace();
  trace2.targets.targets.pop_back();
  CHECK_THROWS_AS(trace2.validate(), std::invalid_argument);
  CHECK_NOTHROW(scripted_trace().validate());
}
