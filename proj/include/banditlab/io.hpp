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

#ifndef BANDITLAB_IO_HPP_
#define BANDITLAB_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>

#include "banditlab/batch.hpp"
#include "banditlab/metrics.hpp"
#include "banditlab/replay.hpp"
#include "banditlab/simulation.hpp"

namespace banditlab {

// Event log CSV: header `step,arm,reward`, one row per event, LF endings.
std::string format_log_csv(const EventLog& log);

// Parses the event log CSV. A trailing CR on each line is tolerated. When
// num_arms is given, arms >= num_arms are rejected. Throws DataError naming
// the offending line.
EventLog parse_log_csv(std::istream& in,
                       std::optional<std::size_t> num_arms = std::nullopt);
EventLog read_log_file(const std::filesystem::path& path,
                       std::optional<std::size_t> num_arms = std::nullopt);

// `step,arm,reward,cum_reward`
std::string format_decisions_csv(std::span<const DecisionRecord> records);
// `step,cum_reward`
std::string format_reward_csv(std::span<const DecisionRecord> records);
// `bucket_start,arm,share`
std::string format_alloc_csv(const AllocationSeries& series);
// `batch_size,run_seed,total_reward`
std::string format_sweep_runs_csv(std::span<const SweepRow> rows);
// `batch_size,mean_reward,std_reward`
std::string format_sweep_summary_csv(std::span<const SweepRow> rows);

// All RegretReport fields; absent optionals are written as null.
std::string format_regret_json(const RegretReport& report);
// {"matched", "total_reward", "mean_reward"}
std::string format_replay_summary_json(const ReplayResult& result);

// Shortest representation that round-trips.
std::string format_number(double value);

// Writes the whole file at once. Throws DataError on failure.
void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace banditlab

#endif  // BANDITLAB_IO_HPP_
