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

#include "banditlab/simulation.hpp"

#include <algorithm>
#include <string>

#include "banditlab/error.hpp"

namespace banditlab {

Environment::Environment(std::vector<std::vector<ScheduleSegment>> arms,
                         std::uint64_t horizon)
    : arms_(std::move(arms)), horizon_(horizon) {
  if (arms_.empty()) throw ConfigError("environment needs at least one arm");
  if (horizon_ == 0) throw ConfigError("environment horizon must be >= 1");
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    const auto& segs = arms_[a];
    const std::string where = "arm " + std::to_string(a) + ": ";
    if (segs.empty()) throw ConfigError(where + "empty schedule");
    std::uint64_t expected_start = 0;
    for (const auto& seg : segs) {
      if (seg.start_step != expected_start) {
        throw ConfigError(where + "segments must be contiguous from step 0");
      }
      if (seg.start_step >= seg.end_step) {
        throw ConfigError(where + "segment start must precede its end");
      }
      if (!(seg.prob >= 0.0 && seg.prob <= 1.0)) {
        throw ConfigError(where + "probability outside [0, 1]");
      }
      expected_start = seg.end_step;
    }
    if (expected_start != horizon_) {
      throw ConfigError(where + "schedule must end at the horizon");
    }
  }
}

std::span<const ScheduleSegment> Environment::schedule(ArmId arm) const {
  if (arm.value >= arms_.size()) throw DomainError("arm out of range");
  return arms_[arm.value];
}

double Environment::prob_at(ArmId arm, std::uint64_t t) const {
  if (t >= horizon_) {
    throw DomainError("step " + std::to_string(t) + " is past the horizon " +
                      std::to_string(horizon_));
  }
  const auto segs = schedule(arm);
  // First segment whose end is beyond t.
  const auto it = std::upper_bound(
      segs.begin(), segs.end(), t,
      [](std::uint64_t step, const ScheduleSegment& s) {
        return step < s.end_step;
      });
  return it->prob;
}

double Environment::mean_prob(ArmId arm) const {
  double weighted = 0.0;
  for (const auto& s : schedule(arm)) {
    weighted += s.prob * static_cast<double>(s.end_step - s.start_step);
  }
  return weighted / static_cast<double>(horizon_);
}

double Environment::best_mean_prob() const {
  double best = 0.0;
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    best = std::max(best, mean_prob(ArmId{a}));
  }
  return best;
}

Environment make_stationary(std::span<const double> probs,
                            std::uint64_t horizon) {
  std::vector<std::vector<ScheduleSegment>> arms;
  arms.reserve(probs.size());
  for (double p : probs) arms.push_back({ScheduleSegment{0, horizon, p}});
  return Environment(std::move(arms), horizon);
}

Environment make_crossing_scenario(std::uint64_t horizon, double p_low,
                                   double p_high, std::uint64_t cross_step) {
  if (!(cross_step > 0 && cross_step < horizon)) {
    throw ConfigError("crossing step must lie strictly inside the horizon");
  }
  if (!(p_low >= 0.0 && p_low < p_high && p_high <= 1.0)) {
    throw ConfigError("crossing scenario needs 0 <= p_low < p_high <= 1");
  }
  const double cross = static_cast<double>(cross_step);
  const double total = static_cast<double>(horizon);
  const double v1 = (p_high * cross + p_low * (total - cross)) / total;
  return Environment(
      {
          {ScheduleSegment{0, horizon, v1}},
          {ScheduleSegment{0, cross_step, p_high},
           ScheduleSegment{cross_step, horizon, p_low}},
      },
      horizon);
}

int sample_reward(const Environment& env, ArmId arm, std::uint64_t t,
                  Rng& rng) {
  return rng.bernoulli(env.prob_at(arm, t));
}

EventLog generate_uniform_log(const Environment& env, Rng& rng) {
  EventLog log;
  log.reserve(env.horizon());
  for (std::uint64_t t = 0; t < env.horizon(); ++t) {
    const ArmId arm{rng.uniform_index(env.num_arms())};
    log.push_back(LoggedEvent{t, arm, sample_reward(env, arm, t, rng)});
  }
  return log;
}

}  // namespace banditlab
