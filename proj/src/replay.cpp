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

#include "banditlab/replay.hpp"

#include <cmath>
#include <string>

#include "banditlab/error.hpp"
#include "parallel.hpp"

namespace banditlab {
namespace {

void validate_event(const LoggedEvent& e, std::size_t index,
                    std::size_t num_arms) {
  // Line 1 of the CSV is the header.
  const std::string where = "log line " + std::to_string(index + 2) + ": ";
  if (e.arm.value >= num_arms) {
    throw DataError(where + "arm " + std::to_string(e.arm.value) +
                    " out of range for " + std::to_string(num_arms) + " arms");
  }
  if (e.reward != 0 && e.reward != 1) {
    throw DataError(where + "reward must be 0 or 1");
  }
}

}  // namespace

ReplayResult replay_evaluate(PolicyState policy, const EventLog& log,
                             Rng& rng) {
  const std::size_t num_arms = policy.num_arms();
  ReplayResult result;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const LoggedEvent& e = log[i];
    validate_event(e, i, num_arms);
    if (select(policy, rng) != e.arm) continue;
    update(policy, e.arm, e.reward);
    result.matched_events += 1;
    result.total_reward += static_cast<std::uint64_t>(e.reward);
    result.decisions.push_back(DecisionRecord{e.step, e.arm, e.reward});
  }
  result.final_state = std::move(policy);
  return result;
}

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return out;
}

ReplaySummary replay_many(const PolicySpec& spec, std::size_t num_arms,
                          const EventLog& log, std::size_t n_runs,
                          std::uint64_t base_seed) {
  if (n_runs == 0) throw ConfigError("n_runs must be >= 1");
  // Build once up front so configuration errors surface before any work.
  const PolicyState initial = make_policy(spec, num_arms);

  ReplaySummary summary;
  summary.runs.resize(n_runs);
  detail::parallel_for(n_runs, [&](std::size_t i) {
    const std::uint64_t seed = base_seed + i;
    Rng rng(seed);
    const ReplayResult r = replay_evaluate(initial, log, rng);
    summary.runs[i] = RunOutcome{seed, r.matched_events, r.total_reward};
  });

  std::vector<double> totals;
  totals.reserve(n_runs);
  for (const auto& run : summary.runs) {
    totals.push_back(static_cast<double>(run.total_reward));
  }
  const MeanStd ms = mean_std(totals);
  summary.mean_total_reward = ms.mean;
  summary.std_total_reward = ms.std;
  return summary;
}

}  // namespace banditlab
