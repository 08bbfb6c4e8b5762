// Copyright 2026 The banditlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Runs every criterion, prints one PASS/FAIL line for each
// and exits non-zero if any of them fails. A criterion also fails if it
// exceeds its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "banditlab/batch.hpp"
#include "banditlab/experiment.hpp"
#include "banditlab/metrics.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/replay.hpp"
#include "banditlab/simulation.hpp"
#include "oracles.hpp"

using namespace banditlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<DecisionRecord> from_counts(std::uint64_t n0, std::uint64_t w0,
                                        std::uint64_t n1, std::uint64_t w1) {
  std::vector<DecisionRecord> out;
  std::uint64_t step = 0;
  for (std::uint64_t i = 0; i < n0; ++i) out.push_back({step++, ArmId{0}, i < w0});
  for (std::uint64_t i = 0; i < n1; ++i) out.push_back({step++, ArmId{1}, i < w1});
  return out;
}

// Share of decisions on `arm` among the trailing `fraction` of records.
double tail_share(const std::vector<DecisionRecord>& records, double fraction,
                  ArmId arm) {
  const auto skip = static_cast<std::size_t>(
      std::llround(static_cast<double>(records.size()) * (1.0 - fraction)));
  return arm_share(std::span(records).subspan(skip), arm);
}

Outcome table_one() {
  const RegretReport a = empirical_regret(from_counts(800, 400, 200, 20));
  const RegretReport b = empirical_regret(from_counts(500, 240, 500, 160));
  const bool pass = a.g_hat_total == 80.0 && b.g_hat_total == 80.0 &&
                    a.total_reward == 420 && b.total_reward == 400;
  return {pass, fmt::format("regret {}/{}, reward {}/{}", a.g_hat_total,
                            b.g_hat_total, a.total_reward, b.total_reward)};
}

Outcome thompson_rule() {
  PolicyState one = make_thompson(std::vector<BetaPosterior>(1, BetaPosterior{1.0, 1.0}));
  update(one, ArmId{0}, 1);
  PolicyState zero = make_thompson(std::vector<BetaPosterior>(1, BetaPosterior{1.0, 1.0}));
  update(zero, ArmId{0}, 0);
  const auto& p1 = std::get<ThompsonState>(one.kind).posteriors[0];
  const auto& p0 = std::get<ThompsonState>(zero.kind).posteriors[0];
  bool pass = p1.alpha == 2.0 && p1.beta == 1.0 && p0.alpha == 1.0 &&
              p0.beta == 2.0;

  Rng rng(2024);
  PolicyState ts = make_thompson(std::vector<BetaPosterior>(4, BetaPosterior{1.0, 1.0}));
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const ArmId arm{rng.uniform_index(4)};
    const auto& post = std::get<ThompsonState>(ts.kind).posteriors[arm.value];
    const double before = post.alpha + post.beta;
    update(ts, arm, rng.bernoulli(0.5));
    if (post.alpha + post.beta != before + 1.0) ++violations;
  }
  pass = pass && violations == 0;
  return {pass, fmt::format("single updates ok, {} violations in 10000",
                            violations)};
}

Outcome ucb1_oracle() {
  Rng rng(77);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t pulls = rng.uniform_index(5000);
    const std::uint64_t sum = pulls == 0 ? 0 : rng.uniform_index(pulls + 1);
    const std::uint64_t t = pulls + 1 + rng.uniform_index(100000);
    const long double expect = oracle::ucb1(pulls, sum, static_cast<long double>(t));
    const double got = ucb1_index(ArmStats{pulls, sum}, t);
    worst = std::max(worst, static_cast<double>(std::fabs((got - expect) / expect)));
  }
  return {worst <= 1e-12, fmt::format("max relative error {:.3g}", worst)};
}

Outcome epsilon_steady_state() {
  const std::vector<double> probs{0.5, 0.1};
  const Environment env = make_stationary(probs, 100000);
  Rng rng(4);
  const EngineRun run = run_sequential(make_epsilon_greedy(2, 0.2), env, rng);
  const double share = tail_share(run.decisions, 0.5, ArmId{0});
  return {std::fabs(share - 0.90) <= 0.03,
          fmt::format("final-half winner share {:.4f}", share)};
}

Outcome thompson_concentration() {
  const std::vector<double> probs{0.5, 0.1};
  const Environment env = make_stationary(probs, 100000);
  Rng rng(5);
  const EngineRun run = run_sequential(make_thompson(std::vector<BetaPosterior>(2, BetaPosterior{1.0, 1.0})), env, rng);
  const double share = tail_share(run.decisions, 0.2, ArmId{0});
  return {share >= 0.95, fmt::format("final-20% winner share {:.4f}", share)};
}

Outcome replay_unbiased() {
  // Fixed arm 1 of a crossing environment, so the target is a time average
  // over a non-constant rate.
  constexpr std::uint64_t kHorizon = 100000;
  const Environment env = make_crossing_scenario(kHorizon, 0.1, 0.3, 40000);
  std::vector<double> replayed, online;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng log_stream = log_rng(seed);
    const EventLog log = generate_uniform_log(env, log_stream);
    Rng policy_stream(seed);
    const ReplayResult r =
        replay_evaluate(make_fixed_arm(2, ArmId{1}), log, policy_stream);
    replayed.push_back(r.mean_reward());

    // Direct online simulation, independent of the library's samplers.
    std::mt19937_64 gen(1000 + seed);
    std::uint64_t wins = 0;
    for (std::uint64_t t = 0; t < kHorizon; ++t) {
      wins += std::bernoulli_distribution(env.prob_at(ArmId{1}, t))(gen) ? 1 : 0;
    }
    online.push_back(static_cast<double>(wins) / kHorizon);
  }
  const MeanStd a = mean_std(replayed), b = mean_std(online);
  const double se = std::sqrt((a.std * a.std + b.std * b.std) / 30.0);
  const double z = std::fabs(a.mean - b.mean) / se;
  return {z <= 3.0, fmt::format("replay {:.5f} vs online {:.5f}, {:.2f} SE",
                                a.mean, b.mean, z)};
}

Outcome batch_degeneracy() {
  const Environment env = make_crossing_scenario(10000, 0.1, 0.4, 3000);
  std::string detail;
  bool pass = true;
  for (const Algorithm algo :
       {Algorithm::kEpsilonGreedy, Algorithm::kThompson, Algorithm::kUcb1}) {
    PolicySpec spec;
    spec.algorithm = algo;
    Rng a(99), b(99);
    const EngineRun seq = run_sequential(make_policy(spec, 2), env, a);
    const EngineRun bat = run_batched(make_policy(spec, 2), env, BatchConfig{}, b);
    const bool same = seq.decisions == bat.decisions &&
                      seq.final_state == bat.final_state;
    pass = pass && same;
    detail += fmt::format("{}{}={}", detail.empty() ? "" : ", ", to_string(algo),
                          same ? "identical" : "DIFFERENT");
  }
  return {pass, detail};
}

Outcome conservation() {
  Rng meta(8);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    PolicySpec spec;
    spec.algorithm = static_cast<Algorithm>(meta.uniform_index(3));
    const std::size_t arms = 2 + meta.uniform_index(4);
    std::vector<double> probs(arms);
    for (double& p : probs) p = meta.uniform();
    const Environment env = make_stationary(probs, 1000);
    BatchConfig cfg;
    cfg.batch_size = 1 + meta.uniform_index(300);
    switch (meta.uniform_index(3)) {
      case 0: cfg.delay = NoDelay{}; break;
      case 1: cfg.delay = ConstantDelay{meta.uniform_index(500)}; break;
      default: cfg.delay = GeometricDelay{meta.uniform() * 200.0}; break;
    }
    Rng rng(i);
    const EngineRun run = run_batched(spec, env, cfg, rng);
    std::uint64_t from_decisions = 0;
    for (const auto& d : run.decisions) from_decisions += d.reward;
    if (run.applied_reward_sum != run.generated_reward_sum ||
        run.generated_reward_sum != from_decisions) {
      ++bad;
    }
  }
  return {bad == 0, fmt::format("{} of 100 configs lost or duplicated reward", bad)};
}

Outcome gap_monotonicity() {
  const std::vector<GapRow> rows = gap_sweep(GapSweepSpec{{0.0, 0.002, 0.02}, 0.01},
                                             PolicySpec{}, 200000, 50, 0);
  // rows: per gap, uniform then the three MAB algorithms.
  bool pass = true;
  std::string detail;
  for (std::size_t a = 1; a < 4; ++a) {
    const double g0 = rows[a].normalized_reward;
    const double g1 = rows[4 + a].normalized_reward;
    const double g2 = rows[8 + a].normalized_reward;
    const bool ok = g0 <= g1 && g1 <= g2 && g2 > 1.0;
    pass = pass && ok;
    detail += fmt::format("{}{} {:.4f}/{:.4f}/{:.4f}", detail.empty() ? "" : "; ",
                          to_string(rows[a].algorithm), g0, g1, g2);
  }
  return {pass, detail};
}

Outcome crossing_beats_uniform() {
  constexpr std::uint64_t kHorizon = 100000;
  const Environment env = make_crossing_scenario(kHorizon, 0.02, 0.04, 50000);
  const std::vector<Algorithm> algos{Algorithm::kUniform, Algorithm::kEpsilonGreedy,
                                     Algorithm::kThompson, Algorithm::kUcb1};
  std::vector<std::vector<double>> totals(algos.size());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng log_stream = log_rng(seed);
    const EventLog log = generate_uniform_log(env, log_stream);
    for (std::size_t a = 0; a < algos.size(); ++a) {
      PolicySpec spec;
      spec.algorithm = algos[a];
      Rng rng(seed);
      totals[a].push_back(static_cast<double>(
          replay_evaluate(make_policy(spec, 2), log, rng).total_reward));
    }
  }
  const double uniform = mean_std(totals[0]).mean;
  bool pass = true;
  std::string detail = fmt::format("uniform_ab {:.1f}", uniform);
  for (std::size_t a = 1; a < algos.size(); ++a) {
    const double mean = mean_std(totals[a]).mean;
    pass = pass && mean > uniform;
    detail += fmt::format("; {} {:.1f}", to_string(algos[a]), mean);
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "comparison table regret and reward", 1, table_one},
      {2, "Thompson posterior update rule", 1, thompson_rule},
      {3, "UCB1 index against closed form", 1, ucb1_oracle},
      {4, "epsilon-greedy steady-state allocation", 5, epsilon_steady_state},
      {5, "Thompson sampling concentration", 10, thompson_concentration},
      {6, "replay estimate is unbiased", 60, replay_unbiased},
      {7, "batch size 1 equals sequential", 5, batch_degeneracy},
      {8, "batch engine conserves reward", 30, conservation},
      {9, "normalized reward grows with gap", 600, gap_monotonicity},
      {10, "crossing scenario beats uniform", 300, crossing_beats_uniform},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, fmt::format("threw: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %-40s %8.2fs  %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, out.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
