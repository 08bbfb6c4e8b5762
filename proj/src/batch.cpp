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

#include "banditlab/batch.hpp"

#include <algorithm>
#include <cmath>

#include "banditlab/error.hpp"
#include "parallel.hpp"

namespace banditlab {
namespace {

// std heap functions build a max-heap; invert for earliest-available first.
bool later(const PendingReward& a, const PendingReward& b) {
  if (a.available_at != b.available_at) return a.available_at > b.available_at;
  return a.decision_step > b.decision_step;
}

std::uint64_t draw_delay(const DelayModel& model, Rng& rng) {
  if (const auto* c = std::get_if<ConstantDelay>(&model)) return c->events;
  if (const auto* g = std::get_if<GeometricDelay>(&model)) {
    return rng.geometric(g->mean);
  }
  return 0;
}

std::vector<SweepRow> sweep(std::span<const std::uint64_t> sizes,
                            const DelayModel& delay, std::size_t n_runs,
                            std::uint64_t base_seed, const auto& run_one) {
  if (sizes.empty()) throw ConfigError("batch sweep needs at least one size");
  if (n_runs == 0) throw ConfigError("n_runs must be >= 1");
  for (std::uint64_t size : sizes) BatchConfig{size, delay}.validate();

  std::vector<SweepRow> rows(sizes.size());
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    rows[s].batch_size = sizes[s];
    rows[s].runs.resize(n_runs);
  }
  detail::parallel_for(sizes.size() * n_runs, [&](std::size_t job) {
    const std::size_t s = job / n_runs;
    const std::size_t r = job % n_runs;
    const std::uint64_t seed = base_seed + r;
    Rng rng(seed);
    rows[s].runs[r] = run_one(BatchConfig{sizes[s], delay}, seed, rng);
  });
  for (auto& row : rows) {
    std::vector<double> totals;
    totals.reserve(row.runs.size());
    for (const auto& run : row.runs) {
      totals.push_back(static_cast<double>(run.total_reward));
    }
    const MeanStd ms = mean_std(totals);
    row.mean_reward = ms.mean;
    row.std_reward = ms.std;
  }
  return rows;
}

}  // namespace

void BatchConfig::validate() const {
  if (batch_size == 0) throw ConfigError("batch_size must be >= 1");
  if (const auto* g = std::get_if<GeometricDelay>(&delay)) {
    if (!(g->mean >= 0.0) || !std::isfinite(g->mean)) {
      throw ConfigError("geometric delay mean must be finite and >= 0");
    }
  }
}

BatchEngine::BatchEngine(PolicyState initial, BatchConfig config)
    : live_(std::move(initial)), frozen_(live_), config_(config) {
  config_.validate();
}

ArmId BatchEngine::decide(Rng& rng) {
  if (step_ > 0 && step_ % config_.batch_size == 0 && last_boundary_ != step_) {
    last_boundary_ = step_;
    apply_available(step_);
    frozen_ = live_;
  }
  return select(frozen_, rng);
}

void BatchEngine::observe(ArmId arm, int reward, Rng& rng) {
  if (reward != 0 && reward != 1) throw DomainError("reward must be 0 or 1");
  if (arm.value >= live_.num_arms()) throw DomainError("arm out of range");
  const std::uint64_t delay = draw_delay(config_.delay, rng);
  pending_.push_back(PendingReward{step_, arm, reward, step_ + 1 + delay});
  std::push_heap(pending_.begin(), pending_.end(), later);
  generated_sum_ += static_cast<std::uint64_t>(reward);
  ++step_;
}

void BatchEngine::skip() { ++step_; }

void BatchEngine::flush() {
  apply_available(UINT64_MAX);
  frozen_ = live_;
}

void BatchEngine::apply_available(std::uint64_t boundary) {
  std::vector<PendingReward> ready;
  while (!pending_.empty() && pending_.front().available_at <= boundary) {
    std::pop_heap(pending_.begin(), pending_.end(), later);
    ready.push_back(pending_.back());
    pending_.pop_back();
  }
  // Credit in decision order.
  std::sort(ready.begin(), ready.end(),
            [](const PendingReward& a, const PendingReward& b) {
              return a.decision_step < b.decision_step;
            });
  for (const auto& p : ready) {
    update(live_, p.arm, p.reward);
    applied_sum_ += static_cast<std::uint64_t>(p.reward);
    ++applied_count_;
  }
}

EngineRun run_sequential(PolicyState policy, const Environment& env,
                         Rng& rng) {
  if (policy.num_arms() != env.num_arms()) {
    throw ConfigError("policy and environment disagree on the arm count");
  }
  EngineRun run;
  run.decisions.reserve(env.horizon());
  for (std::uint64_t t = 0; t < env.horizon(); ++t) {
    const ArmId arm = select(policy, rng);
    const int reward = sample_reward(env, arm, t, rng);
    update(policy, arm, reward);
    run.decisions.push_back(DecisionRecord{t, arm, reward});
    run.generated_reward_sum += static_cast<std::uint64_t>(reward);
  }
  run.applied_reward_sum = run.generated_reward_sum;
  run.final_state = std::move(policy);
  return run;
}

EngineRun run_batched(PolicyState policy, const Environment& env,
                      const BatchConfig& config, Rng& rng) {
  if (policy.num_arms() != env.num_arms()) {
    throw ConfigError("policy and environment disagree on the arm count");
  }
  BatchEngine engine(std::move(policy), config);
  EngineRun run;
  run.decisions.reserve(env.horizon());
  for (std::uint64_t t = 0; t < env.horizon(); ++t) {
    const ArmId arm = engine.decide(rng);
    const int reward = sample_reward(env, arm, t, rng);
    engine.observe(arm, reward, rng);
    run.decisions.push_back(DecisionRecord{t, arm, reward});
  }
  engine.flush();
  run.generated_reward_sum = engine.generated_reward_sum();
  run.applied_reward_sum = engine.applied_reward_sum();
  run.final_state = engine.live();
  return run;
}

EngineRun run_batched(const PolicySpec& spec, const Environment& env,
                      const BatchConfig& config, Rng& rng) {
  return run_batched(make_policy(spec, env.num_arms()), env, config, rng);
}

ReplayResult replay_batched(PolicyState policy, const EventLog& log,
                            const BatchConfig& config, Rng& rng) {
  const std::size_t num_arms = policy.num_arms();
  BatchEngine engine(std::move(policy), config);
  ReplayResult result;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const LoggedEvent& e = log[i];
    if (e.arm.value >= num_arms || (e.reward != 0 && e.reward != 1)) {
      throw DataError("log line " + std::to_string(i + 2) +
                      ": invalid arm or reward");
    }
    if (engine.decide(rng) != e.arm) {
      engine.skip();
      continue;
    }
    engine.observe(e.arm, e.reward, rng);
    result.matched_events += 1;
    result.total_reward += static_cast<std::uint64_t>(e.reward);
    result.decisions.push_back(DecisionRecord{e.step, e.arm, e.reward});
  }
  engine.flush();
  result.final_state = engine.live();
  return result;
}

std::vector<SweepRow> batch_sweep(const PolicySpec& spec,
                                  const Environment& env,
                                  std::span<const std::uint64_t> sizes,
                                  const DelayModel& delay, std::size_t n_runs,
                                  std::uint64_t base_seed) {
  const PolicyState initial = make_policy(spec, env.num_arms());
  return sweep(sizes, delay, n_runs, base_seed,
               [&](const BatchConfig& cfg, std::uint64_t seed, Rng& rng) {
                 const EngineRun run = run_batched(initial, env, cfg, rng);
                 return RunOutcome{seed, env.horizon(), run.total_reward()};
               });
}

std::vector<SweepRow> batch_sweep(const PolicySpec& spec, std::size_t num_arms,
                                  const EventLog& log,
                                  std::span<const std::uint64_t> sizes,
                                  const DelayModel& delay, std::size_t n_runs,
                                  std::uint64_t base_seed) {
  const PolicyState initial = make_policy(spec, num_arms);
  return sweep(sizes, delay, n_runs, base_seed,
               [&](const BatchConfig& cfg, std::uint64_t seed, Rng& rng) {
                 const ReplayResult r = replay_batched(initial, log, cfg, rng);
                 return RunOutcome{seed, r.matched_events, r.total_reward};
               });
}

}  // namespace banditlab
