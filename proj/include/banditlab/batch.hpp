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

#ifndef BANDITLAB_BATCH_HPP_
#define BANDITLAB_BATCH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "banditlab/policies.hpp"
#include "banditlab/replay.hpp"
#include "banditlab/rng.hpp"
#include "banditlab/simulation.hpp"

namespace banditlab {

struct NoDelay {};
struct ConstantDelay {
  std::uint64_t events = 0;
};
struct GeometricDelay {
  double mean = 0.0;
};
using DelayModel = std::variant<NoDelay, ConstantDelay, GeometricDelay>;

// Time is counted in events (visits), not wall-clock hours.
struct BatchConfig {
  std::uint64_t batch_size = 1;
  DelayModel delay = NoDelay{};

  // Throws ConfigError for batch_size 0 or a negative/non-finite delay mean.
  void validate() const;
};

// A reward produced at decision_step becomes observable at available_at,
// which is decision_step + 1 + delay: with no delay it can be credited at
// the very next boundary.
struct PendingReward {
  std::uint64_t decision_step = 0;
  ArmId arm;
  int reward = 0;
  std::uint64_t available_at = 0;
};

// Batch-update engine. Decisions are served from a frozen snapshot; rewards
// are queued and credited to the live state at batch boundaries (steps that
// are positive multiples of batch_size), after which the snapshot is
// refreshed from the live state. A pull and its reward are always applied
// together.
//
// Per step, call decide() once and then observe() or skip().
class BatchEngine {
 public:
  BatchEngine(PolicyState initial, BatchConfig config);

  // Runs the boundary for the current step if one is due, then selects from
  // the frozen snapshot.
  ArmId decide(Rng& rng);

  // Queues the reward of the current step's decision and advances the step.
  void observe(ArmId arm, int reward, Rng& rng);

  // Advances the step without a decision to credit (replay non-match).
  void skip();

  // Applies everything still pending and refreshes the snapshot.
  void flush();

  const PolicyState& live() const { return live_; }
  const PolicyState& frozen() const { return frozen_; }
  std::span<const PendingReward> pending() const { return pending_; }
  std::uint64_t step() const { return step_; }
  const BatchConfig& config() const { return config_; }

  std::uint64_t generated_reward_sum() const { return generated_sum_; }
  std::uint64_t applied_reward_sum() const { return applied_sum_; }
  std::uint64_t applied_updates() const { return applied_count_; }

 private:
  void apply_available(std::uint64_t boundary);

  PolicyState live_;
  PolicyState frozen_;
  BatchConfig config_;
  std::vector<PendingReward> pending_;  // min-heap on (available_at, step)
  std::uint64_t step_ = 0;
  std::uint64_t last_boundary_ = 0;
  std::uint64_t generated_sum_ = 0;
  std::uint64_t applied_sum_ = 0;
  std::uint64_t applied_count_ = 0;
};

struct EngineRun {
  std::vector<DecisionRecord> decisions;
  PolicyState final_state;
  std::uint64_t generated_reward_sum = 0;
  std::uint64_t applied_reward_sum = 0;

  std::uint64_t total_reward() const { return generated_reward_sum; }
};

// Fully sequential online run: select, draw reward, update, every step.
EngineRun run_sequential(PolicyState policy, const Environment& env,
                         Rng& rng);

// Online run through BatchEngine over the environment's horizon, ending
// with a flush.
EngineRun run_batched(PolicyState policy, const Environment& env,
                      const BatchConfig& config, Rng& rng);
EngineRun run_batched(const PolicySpec& spec, const Environment& env,
                      const BatchConfig& config, Rng& rng);

// Replay over a uniform log with batched updates. Boundaries and delays are
// counted in log events.
ReplayResult replay_batched(PolicyState policy, const EventLog& log,
                            const BatchConfig& config, Rng& rng);

struct SweepRow {
  std::uint64_t batch_size = 0;
  double mean_reward = 0.0;
  double std_reward = 0.0;
  std::vector<RunOutcome> runs;  // ordered by seed
};

// One row per batch size. Each (size, seed) pair uses Rng(seed), so all
// sizes see the same seeds.
std::vector<SweepRow> batch_sweep(const PolicySpec& spec,
                                  const Environment& env,
                                  std::span<const std::uint64_t> sizes,
                                  const DelayModel& delay, std::size_t n_runs,
                                  std::uint64_t base_seed);
std::vector<SweepRow> batch_sweep(const PolicySpec& spec, std::size_t num_arms,
                                  const EventLog& log,
                                  std::span<const std::uint64_t> sizes,
                                  const DelayModel& delay, std::size_t n_runs,
                                  std::uint64_t base_seed);

}  // namespace banditlab

#endif  // BANDITLAB_BATCH_HPP_
