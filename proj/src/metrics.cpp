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

#include "banditlab/metrics.hpp"

#include <algorithm>
#include <string>

#include "banditlab/error.hpp"

namespace banditlab {

RegretReport empirical_regret(std::span<const DecisionRecord> records) {
  if (records.empty()) {
    throw DomainError("regret is undefined for an empty decision sequence");
  }
  std::vector<ArmStats> stats;
  RegretReport report;
  for (const auto& r : records) {
    if (r.arm.value >= stats.size()) stats.resize(r.arm.value + 1);
    stats[r.arm.value].pulls += 1;
    stats[r.arm.value].reward_sum += static_cast<std::uint64_t>(r.reward);
    report.total_reward += static_cast<std::uint64_t>(r.reward);
  }
  report.horizon = records.size();

  // Keep the winner as an exact fraction so T * mu_hat is formed as
  // (T * wins) / pulls without an intermediate rounding.
  const ArmStats* best = nullptr;
  for (const auto& s : stats) {
    if (s.pulls == 0) continue;
    if (best == nullptr || s.reward_sum * best->pulls > best->reward_sum * s.pulls) {
      best = &s;
    }
  }
  report.mu_hat_star = best->mean();
  const double t_mu_hat =
      static_cast<double>(report.horizon * best->reward_sum) /
      static_cast<double>(best->pulls);
  report.g_hat_total = t_mu_hat - static_cast<double>(report.total_reward);
  report.g_hat_per_trial =
      report.g_hat_total / static_cast<double>(report.horizon);
  return report;
}

RegretReport theoretical_regret(std::span<const DecisionRecord> records,
                                double mu_star) {
  RegretReport report = empirical_regret(records);
  const double t = static_cast<double>(report.horizon);
  report.mu_star = mu_star;
  report.g_per_trial =
      (t * mu_star - static_cast<double>(report.total_reward)) / t;
  return report;
}

AllocationSeries traffic_allocation(std::span<const DecisionRecord> records,
                                    std::uint64_t window,
                                    std::size_t num_arms) {
  if (window == 0) throw DomainError("allocation window must be >= 1");
  AllocationSeries series;
  series.window = window;
  series.num_arms = num_arms;
  for (std::size_t start = 0; start < records.size(); start += window) {
    const std::size_t end =
        std::min<std::size_t>(records.size(), start + window);
    std::vector<std::uint64_t> counts(num_arms, 0);
    for (std::size_t i = start; i < end; ++i) {
      const std::size_t arm = records[i].arm.value;
      if (arm >= num_arms) {
        throw DomainError("decision arm " + std::to_string(arm) +
                          " out of range");
      }
      ++counts[arm];
    }
    std::vector<double> shares(num_arms);
    for (std::size_t a = 0; a < num_arms; ++a) {
      shares[a] =
          static_cast<double>(counts[a]) / static_cast<double>(end - start);
    }
    series.bucket_starts.push_back(start);
    series.shares.push_back(std::move(shares));
  }
  return series;
}

std::vector<std::uint64_t> cumulative_reward(
    std::span<const DecisionRecord> records) {
  std::vector<std::uint64_t> out;
  out.reserve(records.size());
  std::uint64_t running = 0;
  for (const auto& r : records) {
    running += static_cast<std::uint64_t>(r.reward);
    out.push_back(running);
  }
  return out;
}

double arm_share(std::span<const DecisionRecord> records, ArmId arm) {
  if (records.empty()) return 0.0;
  const auto hits = std::count_if(records.begin(), records.end(),
                                  [&](const auto& r) { return r.arm == arm; });
  return static_cast<double>(hits) / static_cast<double>(records.size());
}

}  // namespace banditlab
