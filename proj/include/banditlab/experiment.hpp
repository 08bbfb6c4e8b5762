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

#ifndef BANDITLAB_EXPERIMENT_HPP_
#define BANDITLAB_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "banditlab/batch.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/simulation.hpp"

namespace banditlab {

struct StationarySpec {
  std::vector<double> probs;
};
struct CrossingSpec {
  double p_low = 0.0;
  double p_high = 0.0;
  std::uint64_t cross_step = 0;
};
struct ScheduleSpec {
  std::vector<std::vector<ScheduleSegment>> arms;
};
using EnvironmentSpec = std::variant<StationarySpec, CrossingSpec, ScheduleSpec>;

Environment build_environment(const EnvironmentSpec& spec,
                              std::uint64_t horizon);

struct GapSweepSpec {
  std::vector<double> gaps;
  double baseline = 0.01;
};

// One JSON document drives every command. See README for the schema.
struct ExperimentConfig {
  PolicySpec policy;
  std::optional<EnvironmentSpec> environment;
  std::optional<std::filesystem::path> log_path;
  std::optional<std::size_t> num_arms;  // log input only; inferred if absent
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> batch_sizes{1};
  DelayModel delay = NoDelay{};
  std::size_t n_runs = 1;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir = "out";
  std::uint64_t window = 1000;
  // Treat every logged event as a decision and only compute metrics.
  bool metrics_only = false;
  std::optional<GapSweepSpec> gap_sweep;
};

// Throws ConfigError on malformed JSON, unknown keys or wrongly typed
// values. Cross-field checks happen in validate_for().
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

enum class Command { kSimulate, kReplay, kBatchSweep, kGapSweep };

// "simulate", "replay", "batch-sweep", "gap-sweep".
Command parse_command(std::string_view name);
std::string_view to_string(Command command);

// Throws ConfigError if the configuration cannot drive `command`.
void validate_for(Command command, const ExperimentConfig& config);

// Validates, computes everything, then writes the command's files into
// config.output_dir. Returns the paths written.
std::vector<std::filesystem::path> run_command(Command command,
                                               const ExperimentConfig& config);

// Log stream used for a given replication seed. Policy streams use the
// seed directly, so the two never coincide.
Rng log_rng(std::uint64_t seed);

struct GapRow {
  double gap = 0.0;
  Algorithm algorithm = Algorithm::kUniform;
  double mean_reward = 0.0;  // per-trial replay reward, averaged over seeds
  double std_reward = 0.0;
  double normalized_reward = 0.0;  // mean_reward / uniform baseline's
};

// For each gap: a stationary two-arm environment (baseline, baseline + gap),
// one uniform log per seed shared by all algorithms, and a replay of the
// uniform baseline, epsilon-greedy, Thompson sampling and UCB1 on it.
// Rows are ordered by gap, then uniform_ab, epsilon_greedy, thompson, ucb1.
std::vector<GapRow> gap_sweep(const GapSweepSpec& spec, const PolicySpec& params,
                              std::uint64_t horizon, std::size_t n_runs,
                              std::uint64_t base_seed);

}  // namespace banditlab

#endif  // BANDITLAB_EXPERIMENT_HPP_
