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

#ifndef BANDITLAB_REPLAY_HPP_
#define BANDITLAB_REPLAY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "banditlab/policies.hpp"
#include "banditlab/rng.hpp"
#include "banditlab/simulation.hpp"

namespace banditlab {

struct ReplayResult {
  std::uint64_t matched_events = 0;
  std::uint64_t total_reward = 0;
  // One record per matched event; `step` is the logged event's step.
  std::vector<DecisionRecord> decisions;
  PolicyState final_state;

  double mean_reward() const {
    return matched_events == 0 ? 0.0
                               : static_cast<double>(total_reward) /
                                     static_cast<double>(matched_events);
  }
};

// Rejection-sampling replay over a log written by a uniformly random logging
// policy. For every event the policy picks an arm; on a match the logged
// reward is credited and the policy updated, otherwise the event is dropped
// and the state is left untouched. Uniform logging is assumed, not checked.
//
// Throws DataError naming the event's CSV line if an event has arm >= K or a
// non-binary reward.
ReplayResult replay_evaluate(PolicyState policy, const EventLog& log,
                             Rng& rng);

struct RunOutcome {
  std::uint64_t seed = 0;
  std::uint64_t matched_events = 0;
  std::uint64_t total_reward = 0;
};

struct ReplaySummary {
  std::vector<RunOutcome> runs;  // ordered by seed
  double mean_total_reward = 0.0;
  double std_total_reward = 0.0;  // sample standard deviation, 0 for n = 1
};

// n_runs replays on fresh states with seeds base_seed .. base_seed+n_runs-1.
ReplaySummary replay_many(const PolicySpec& spec, std::size_t num_arms,
                          const EventLog& log, std::size_t n_runs,
                          std::uint64_t base_seed);

// Mean and sample standard deviation (n - 1 denominator; 0 when n < 2).
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(const std::vector<double>& values);

}  // namespace banditlab

#endif  // BANDITLAB_REPLAY_HPP_
