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

#ifndef BANDITLAB_METRICS_HPP_
#define BANDITLAB_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "banditlab/policies.hpp"

namespace banditlab {

// Regret of a decision sequence of length T (the horizon).
//
//   g(T)     = (T * mu_star     - sum r) / T   true winner rate, if known
//   g_hat(T) = (T * mu_hat_star - sum r) / T   best empirical arm rate
//
// g_hat_total is T * g_hat(T), the form in which per-experiment comparison
// tables usually report empirical regret.
struct RegretReport {
  std::uint64_t horizon = 0;
  std::uint64_t total_reward = 0;
  std::optional<double> mu_star;
  double mu_hat_star = 0.0;
  std::optional<double> g_per_trial;
  double g_hat_per_trial = 0.0;
  double g_hat_total = 0.0;
};

// Throws DomainError for an empty record sequence.
RegretReport empirical_regret(std::span<const DecisionRecord> records);

// empirical_regret plus the g(T) fields against a known winner rate.
RegretReport theoretical_regret(std::span<const DecisionRecord> records,
                                double mu_star);

// Per-bucket share of decisions going to each arm. Buckets hold `window`
// consecutive decisions; the last one may be partial.
struct AllocationSeries {
  std::uint64_t window = 0;
  std::size_t num_arms = 0;
  std::vector<std::uint64_t> bucket_starts;   // index of first decision
  std::vector<std::vector<double>> shares;   // [bucket][arm]
};

// Throws DomainError for window == 0 or a record with arm >= num_arms.
AllocationSeries traffic_allocation(std::span<const DecisionRecord> records,
                                    std::uint64_t window,
                                    std::size_t num_arms);

// Prefix sums of rewards.
std::vector<std::uint64_t> cumulative_reward(
    std::span<const DecisionRecord> records);

// Fraction of records that chose `arm`; 0 for an empty sequence.
double arm_share(std::span<const DecisionRecord> records, ArmId arm);

}  // namespace banditlab

#endif  // BANDITLAB_METRICS_HPP_
