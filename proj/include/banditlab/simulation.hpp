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

#ifndef BANDITLAB_SIMULATION_HPP_
#define BANDITLAB_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "banditlab/policies.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

// Constant success probability on [start_step, end_step).
struct ScheduleSegment {
  std::uint64_t start_step = 0;
  std::uint64_t end_step = 0;
  double prob = 0.0;

  friend bool operator==(const ScheduleSegment&, const ScheduleSegment&) =
      default;
};

// Per-arm piecewise-constant Bernoulli success probabilities over
// [0, horizon). Immutable after construction.
class Environment {
 public:
  // Throws ConfigError unless every arm's segments are ordered, contiguous
  // and cover exactly [0, horizon), with probabilities in [0, 1].
  Environment(std::vector<std::vector<ScheduleSegment>> arms,
              std::uint64_t horizon);

  std::size_t num_arms() const { return arms_.size(); }
  std::uint64_t horizon() const { return horizon_; }
  std::span<const ScheduleSegment> schedule(ArmId arm) const;

  // Throws DomainError if t >= horizon or the arm is out of range.
  double prob_at(ArmId arm, std::uint64_t t) const;

  // Success probability averaged over the whole horizon.
  double mean_prob(ArmId arm) const;

  // Largest mean_prob over arms, i.e. the winner's true rate.
  double best_mean_prob() const;

 private:
  std::vector<std::vector<ScheduleSegment>> arms_;
  std::uint64_t horizon_;
};

Environment make_stationary(std::span<const double> probs,
                            std::uint64_t horizon);

// Two arms. Arm 1 ("v2") runs at p_high before cross_step and p_low after;
// arm 0 ("v1") is constant at the rate that equalises both arms' overall
// conversion: (p_high * cross + p_low * (horizon - cross)) / horizon.
Environment make_crossing_scenario(std::uint64_t horizon, double p_low,
                                   double p_high, std::uint64_t cross_step);

// Bernoulli draw at prob_at(arm, t).
int sample_reward(const Environment& env, ArmId arm, std::uint64_t t,
                  Rng& rng);

// One record of a uniformly-random logging policy.
struct LoggedEvent {
  std::uint64_t step = 0;
  ArmId arm;
  int reward = 0;

  friend bool operator==(const LoggedEvent&, const LoggedEvent&) = default;
};

using EventLog = std::vector<LoggedEvent>;

// For each step: arm ~ Uniform{0..K-1}, then its reward.
EventLog generate_uniform_log(const Environment& env, Rng& rng);

}  // namespace banditlab

#endif  // BANDITLAB_SIMULATION_HPP_
