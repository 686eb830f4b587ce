// Experiment driver: run the bit predictor or the full stack against seeded
// synthetic environments, persist traces as CSV, and evaluate regret against
// the closed-form bounds.
//
// Exit codes: 0 = all checked bounds respected, 1 = a bound was violated,
// 2 = configuration or input error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soco/bit_predictor.hpp"
#include "soco/csv.hpp"
#include "soco/environments.hpp"
#include "soco/evaluation.hpp"
#include "soco/smoothed_ogd.hpp"

namespace {

using soco::Vec;

constexpr std::uint64_t kIntervalSeedSalt = 0xDA3E39CB94B95BDBULL;

struct BitpredOptions {
  std::int64_t horizon = 4096;        // stream length T
  double predictor_horizon = 0.0;     // n; 0 means "use T"
  double zeta = 0.0;                  // 0 means "use 1/n"
  double mu = 1.0;
  std::string env = "alternating";
  double bias = 0.7;
  std::int64_t block_len = 64;
  std::uint64_t seed = 1;
  std::int64_t intervals = 1000;
  std::string out = "bitpred";
};

struct SocoOptions {
  std::int64_t horizon = 4096;
  double lambda = 1.0;
  double zeta = 0.0;  // 0 means "use 1/T"
  int dim = 1;
  double grad_bound = 1.0;
  double diameter = 2.0;
  std::string env = "piecewise";
  int segments = 4;
  double path_budget = 1.0;
  std::uint64_t seed = 1;
  std::string out = "soco";
};

struct EvalOptions {
  std::string trace_path;
  std::string targets_path;
  double lambda = 1.0;
  double grad_bound = 1.0;
  double diameter = 2.0;
  std::string windows = "dyadic";
  int stride_divisor = 2;
  double grid_res = 0.01;
  std::string out = "report.csv";
};

soco::BitKind parse_bit_kind(const std::string& env) {
  if (env == "alternating") return soco::BitKind::kAlternating;
  if (env == "biased") return soco::BitKind::kBiased;
  if (env == "blocks") return soco::BitKind::kBlocks;
  throw std::invalid_argument("bitpred: --env must be one of alternating|biased|blocks, got '" +
                              env + "'");
}

std::vector<std::int64_t> parse_windows(const std::string& spec, std::int64_t total) {
  std::vector<std::int64_t> windows;
  if (spec == "dyadic") {
    for (std::int64_t tau = 8; tau <= total; tau *= 2) windows.push_back(tau);
    if (windows.empty()) windows.push_back(total);
    return windows;
  }
  std::string cell;
  std::stringstream ss(spec);
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    windows.push_back(std::stoll(cell));
  }
  if (windows.empty()) {
    throw std::invalid_argument("--windows must be 'dyadic' or a comma list of lengths");
  }
  return windows;
}

int run_bitpred(const BitpredOptions& opt) {
  if (opt.horizon < 1) {
    throw std::invalid_argument("bitpred: --horizon must be >= 1 (empty streams are rejected)");
  }
  const double n = opt.predictor_horizon > 0.0 ? opt.predictor_horizon
                                               : static_cast<double>(opt.horizon);
  const double zeta = opt.zeta > 0.0 ? opt.zeta : 1.0 / n;
  const soco::DnpParams params = soco::make_params(n, zeta);
  const soco::BitStream stream = soco::adversarial_bits(parse_bit_kind(opt.env), opt.horizon,
                                                        opt.mu, opt.seed, opt.bias, opt.block_len);

  const std::int64_t total = opt.horizon;
  soco::BitPredictor dnp(params, soco::UpdateMode::kConservative, opt.mu);
  std::vector<double> deviation(static_cast<std::size_t>(total) + 1);
  std::vector<double> pred(static_cast<std::size_t>(total) + 1);
  deviation[0] = dnp.deviation();
  pred[0] = dnp.predict();
  for (std::int64_t t = 1; t <= total; ++t) {
    dnp.update(stream.bits[static_cast<std::size_t>(t - 1)]);
    deviation[static_cast<std::size_t>(t)] = dnp.deviation();
    pred[static_cast<std::size_t>(t)] = dnp.predict();
  }

  // Per-round rows plus prefix sums for O(1) interval queries.
  std::vector<double> reward_prefix(static_cast<std::size_t>(total) + 1, 0.0);
  std::vector<double> bit_prefix(static_cast<std::size_t>(total) + 1, 0.0);
  std::vector<std::vector<std::string>> round_rows;
  round_rows.reserve(static_cast<std::size_t>(total));
  for (std::int64_t t = 1; t <= total; ++t) {
    const std::size_t i = static_cast<std::size_t>(t);
    const double b = stream.bits[i - 1];
    const double reward = pred[i - 1] * b - std::fabs(pred[i - 1] - pred[i]) / opt.mu;
    reward_prefix[i] = reward_prefix[i - 1] + reward;
    bit_prefix[i] = bit_prefix[i - 1] + b;
    round_rows.push_back({std::to_string(t), soco::csv::format_double(b),
                          soco::csv::format_double(deviation[i - 1]),
                          soco::csv::format_double(pred[i - 1]),
                          soco::csv::format_double(reward)});
  }
  soco::csv::write_file(opt.out + "_rounds.csv", {"t", "b", "x", "g", "reward"}, round_rows);

  soco::SplitMix64 interval_rng(opt.seed ^ kIntervalSeedSalt);
  std::vector<std::vector<std::string>> interval_rows;
  interval_rows.reserve(static_cast<std::size_t>(opt.intervals));
  bool violated = false;
  for (std::int64_t k = 0; k < opt.intervals; ++k) {
    std::int64_t r = 1 + static_cast<std::int64_t>(interval_rng.next_double() *
                                                   static_cast<double>(total));
    r = std::min(r, total);
    std::int64_t s = r + static_cast<std::int64_t>(interval_rng.next_double() *
                                                   static_cast<double>(total - r + 1));
    s = std::min(s, total);
    const double tau = static_cast<double>(s - r + 1);
    const double sum_b = bit_prefix[static_cast<std::size_t>(s)] -
                         bit_prefix[static_cast<std::size_t>(r - 1)];
    const double reward = reward_prefix[static_cast<std::size_t>(s)] -
                          reward_prefix[static_cast<std::size_t>(r - 1)];
    const double bound = soco::dnp_reward_lower_bound(params, opt.mu, tau, sum_b, r == 1);
    const double margin = reward - bound;
    if (margin < -1e-9) violated = true;
    interval_rows.push_back({std::to_string(r), std::to_string(s),
                             soco::csv::format_double(tau), soco::csv::format_double(sum_b),
                             soco::csv::format_double(reward), soco::csv::format_double(bound),
                             soco::csv::format_double(margin)});
  }
  soco::csv::write_file(opt.out + "_intervals.csv",
                        {"r", "s", "tau", "sum_b", "reward", "bound", "margin"}, interval_rows);

  std::cout << "bitpred: n=" << n << " zeta=" << zeta << " T=" << total
            << " intervals=" << opt.intervals << (violated ? " BOUND VIOLATION" : " ok")
            << "\n";
  return violated ? 1 : 0;
}

int run_soco(const SocoOptions& opt) {
  if (opt.dim < 1 || opt.dim > 8) {
    throw std::invalid_argument("soco: --dim must be in [1, 8]");
  }
  const double zeta = opt.zeta > 0.0 ? opt.zeta : 1.0 / static_cast<double>(opt.horizon);
  const soco::StackSchedule sched = soco::make_schedule(opt.horizon, opt.lambda, zeta,
                                                        opt.grad_bound, opt.diameter);
  if (!sched.horizon_precondition_met) {
    std::cerr << "warning: horizon " << opt.horizon
              << " is below max(sqrt(lambda)*log2(T), e); bounds may not apply\n";
  }
  const soco::BallDomain domain{Vec(static_cast<std::size_t>(opt.dim), 0.0),
                                opt.diameter / 2.0};

  soco::TargetSchedule targets;
  if (opt.env == "piecewise") {
    targets = soco::piecewise_targets(opt.horizon, opt.segments, domain, opt.seed);
  } else if (opt.env == "drift") {
    targets = soco::drift_targets(opt.horizon, opt.path_budget, domain, opt.seed);
  } else {
    throw std::invalid_argument("soco: --env must be piecewise|drift, got '" + opt.env + "'");
  }

  soco::SmoothedOgd stack(sched, domain, domain.center);
  std::vector<Vec> predictions;
  std::vector<double> losses;
  predictions.reserve(static_cast<std::size_t>(opt.horizon) + 1);
  losses.reserve(static_cast<std::size_t>(opt.horizon));
  for (std::int64_t t = 1; t <= opt.horizon; ++t) {
    const soco::LossRecord loss =
        soco::distance_loss(targets.targets[static_cast<std::size_t>(t - 1)], opt.grad_bound);
    predictions.push_back(stack.prediction());
    losses.push_back(loss.value(predictions.back()) - loss.min_value);
    stack.round(loss);
  }
  predictions.push_back(stack.prediction());  // w_{T+1}, defines the last switch

  std::vector<std::string> header{"t"};
  for (int k = 1; k <= opt.dim; ++k) header.push_back("w_" + std::to_string(k));
  header.push_back("loss");
  header.push_back("switch");
  std::vector<std::vector<std::string>> rows;
  rows.reserve(predictions.size());
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (double c : predictions[i]) row.push_back(soco::csv::format_double(c));
    const bool last = i + 1 == predictions.size();
    row.push_back(soco::csv::format_double(last ? 0.0 : losses[i]));
    row.push_back(soco::csv::format_double(
        last ? 0.0 : soco::distance(predictions[i], predictions[i + 1])));
    rows.push_back(std::move(row));
  }
  soco::csv::write_file(opt.out + "_trace.csv", header, rows);

  std::vector<std::vector<std::string>> sched_rows;
  for (int i = 1; i <= sched.num_levels; ++i) {
    const soco::StackLevel& lvl = sched.levels[static_cast<std::size_t>(i - 1)];
    sched_rows.push_back({std::to_string(i), soco::csv::format_double(lvl.horizon),
                          soco::csv::format_double(lvl.step_size)});
  }
  soco::csv::write_file(opt.out + "_schedule.csv", {"i", "n_i", "eta_i"}, sched_rows);
  soco::write_targets_csv(opt.out + "_targets.csv", targets);

  std::cout << "soco: T=" << opt.horizon << " lambda=" << opt.lambda << " zeta=" << zeta
            << " K=" << sched.num_levels << " out=" << opt.out << "\n";
  return 0;
}

int run_eval(const EvalOptions& opt) {
  const soco::csv::Table trace_csv = soco::csv::read_file(opt.trace_path);
  if (trace_csv.header.size() < 4 || trace_csv.header.front() != "t" ||
      trace_csv.header.back() != "switch") {
    throw std::runtime_error("eval: unexpected trace header in " + opt.trace_path);
  }
  const std::size_t dim = trace_csv.header.size() - 3;
  if (trace_csv.rows.size() < 2) {
    throw std::runtime_error("eval: trace has no rounds");
  }

  soco::RunTrace trace;
  trace.lambda = opt.lambda;
  trace.grad_bound = opt.grad_bound;
  trace.diameter = opt.diameter;
  trace.domain = soco::BallDomain{Vec(dim, 0.0), opt.diameter / 2.0};
  for (std::size_t i = 0; i < trace_csv.rows.size(); ++i) {
    Vec w(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      w[k] = soco::csv::parse_double(trace_csv.rows[i][k + 1], opt.trace_path, i + 1);
    }
    trace.predictions.push_back(std::move(w));
    if (i + 1 < trace_csv.rows.size()) {
      trace.loss_values.push_back(
          soco::csv::parse_double(trace_csv.rows[i][dim + 1], opt.trace_path, i + 1));
    }
  }
  trace.targets.targets = soco::read_targets_csv(opt.targets_path);
  trace.validate();

  const std::int64_t total = trace.rounds();
  const std::vector<std::int64_t> windows = parse_windows(opt.windows, total);
  const std::vector<soco::AdaptiveRow> adaptive =
      soco::adaptive_profile(trace, windows, opt.grid_res, opt.stride_divisor);
  const soco::DynamicResult dyn = soco::dynamic_regret(trace, trace.targets.targets, 1, total);
  const double dyn_bound =
      soco::dynamic_regret_bound(static_cast<double>(total), opt.lambda, opt.grad_bound,
                                 opt.diameter, static_cast<double>(total), dyn.path);

  bool violated = false;
  std::vector<std::vector<std::string>> rows;
  for (const soco::AdaptiveRow& row : adaptive) {
    if (row.margin < 0.0) violated = true;
    rows.push_back({"adaptive", std::to_string(row.tau), std::to_string(row.r_star),
                    soco::csv::format_double(0.0), soco::csv::format_double(row.measured),
                    soco::csv::format_double(row.bound), soco::csv::format_double(row.margin)});
  }
  const double dyn_margin = dyn_bound - dyn.regret;
  if (dyn_margin < 0.0) violated = true;
  rows.push_back({"dynamic", std::to_string(total), "1", soco::csv::format_double(dyn.path),
                  soco::csv::format_double(dyn.regret), soco::csv::format_double(dyn_bound),
                  soco::csv::format_double(dyn_margin)});
  soco::csv::write_file(opt.out, {"kind", "tau", "r_star", "path", "measured", "bound", "margin"},
                        rows);

  std::cout << "eval: T=" << total << " windows=" << windows.size()
            << (violated ? " BOUND VIOLATION" : " ok") << " out=" << opt.out << "\n";
  return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothed online convex optimization harness"};
  app.require_subcommand(1);

  BitpredOptions bp;
  CLI::App* bitpred = app.add_subcommand(
      "bitpred", "Run the conservative bit predictor on an adversarial stream");
  bitpred->add_option("--horizon", bp.horizon, "Stream length T");
  bitpred->add_option("--n", bp.predictor_horizon, "Predictor horizon n (default: T)");
  bitpred->add_option("--zeta", bp.zeta, "Confidence scale Z (default: 1/n)");
  bitpred->add_option("--mu", bp.mu, "Bit magnitude bound in (0, 1]");
  bitpred->add_option("--env", bp.env, "Stream kind: alternating|biased|blocks");
  bitpred->add_option("--bias", bp.bias, "P(+mu) for biased streams");
  bitpred->add_option("--block-len", bp.block_len, "Sign flip period for block streams");
  bitpred->add_option("--seed", bp.seed, "Stream seed");
  bitpred->add_option("--intervals", bp.intervals, "Random intervals to check");
  bitpred->add_option("--out", bp.out, "Output path prefix");

  SocoOptions so;
  CLI::App* socmd = app.add_subcommand("soco", "Run the full stack on a target environment");
  socmd->add_option("--horizon", so.horizon, "Total rounds T");
  socmd->add_option("--lambda", so.lambda, "Switching-cost weight");
  socmd->add_option("--zeta", so.zeta, "Confidence scale Z (default: 1/T)");
  socmd->add_option("--dim", so.dim, "Domain dimension (1..8)");
  socmd->add_option("--G", so.grad_bound, "Gradient norm bound");
  socmd->add_option("--D", so.diameter, "Domain diameter (ball radius D/2)");
  socmd->add_option("--env", so.env, "Environment: piecewise|drift");
  socmd->add_option("--segments", so.segments, "Piecewise segment count");
  socmd->add_option("--path-budget", so.path_budget, "Drift path budget");
  socmd->add_option("--seed", so.seed, "Environment seed");
  socmd->add_option("--out", so.out, "Output path prefix");

  EvalOptions ev;
  CLI::App* evcmd = app.add_subcommand("eval", "Evaluate a persisted trace against the bounds");
  evcmd->add_option("--trace", ev.trace_path, "Trace CSV from the soco subcommand")->required();
  evcmd->add_option("--targets", ev.targets_path, "Targets CSV")->required();
  evcmd->add_option("--lambda", ev.lambda, "Switching-cost weight used in the run");
  evcmd->add_option("--G", ev.grad_bound, "Gradient norm bound");
  evcmd->add_option("--D", ev.diameter, "Domain diameter");
  evcmd->add_option("--windows", ev.windows, "'dyadic' or comma list of interval lengths");
  evcmd->add_option("--stride-divisor", ev.stride_divisor,
                    "Starts sampled every tau/divisor rounds; 0 = exhaustive");
  evcmd->add_option("--grid-res", ev.grid_res, "Comparator grid resolution");
  evcmd->add_option("--out", ev.out, "Report CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bitpred) return run_bitpred(bp);
    if (*socmd) return run_soco(so);
    if (*evcmd) return run_eval(ev);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
