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

#include "banditlab/io.hpp"

#include <charconv>
#include <fstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "banditlab/error.hpp"

namespace banditlab {
namespace {

std::uint64_t parse_field(std::string_view text, std::size_t line,
                          const char* name) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DataError("log line " + std::to_string(line) + ": invalid " + name +
                    " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{}", value); }

std::string format_log_csv(const EventLog& log) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "step,arm,reward\n");
  for (const auto& e : log) {
    fmt::format_to(std::back_inserter(out), "{},{},{}\n", e.step, e.arm.value,
                   e.reward);
  }
  return fmt::to_string(out);
}

EventLog parse_log_csv(std::istream& in,
                       std::optional<std::size_t> num_arms) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw DataError("log is empty (missing header)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "step,arm,reward") {
    throw DataError("log line 1: expected header 'step,arm,reward'");
  }
  EventLog log;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string_view view(line);
    const auto c1 = view.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos ||
        view.find(',', c2 + 1) != std::string_view::npos) {
      throw DataError("log line " + std::to_string(line_no) +
                      ": expected 3 fields");
    }
    LoggedEvent e;
    e.step = parse_field(view.substr(0, c1), line_no, "step");
    e.arm.value = parse_field(view.substr(c1 + 1, c2 - c1 - 1), line_no, "arm");
    const std::uint64_t reward =
        parse_field(view.substr(c2 + 1), line_no, "reward");
    if (reward > 1) {
      throw DataError("log line " + std::to_string(line_no) +
                      ": reward must be 0 or 1");
    }
    e.reward = static_cast<int>(reward);
    if (num_arms && e.arm.value >= *num_arms) {
      throw DataError("log line " + std::to_string(line_no) + ": arm " +
                      std::to_string(e.arm.value) + " out of range");
    }
    log.push_back(e);
  }
  return log;
}

EventLog read_log_file(const std::filesystem::path& path,
                       std::optional<std::size_t> num_arms) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open log file '" + path.string() + "'");
  return parse_log_csv(in, num_arms);
}

std::string format_decisions_csv(std::span<const DecisionRecord> records) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "step,arm,reward,cum_reward\n");
  std::uint64_t cum = 0;
  for (const auto& r : records) {
    cum += static_cast<std::uint64_t>(r.reward);
    fmt::format_to(std::back_inserter(out), "{},{},{},{}\n", r.step,
                   r.arm.value, r.reward, cum);
  }
  return fmt::to_string(out);
}

std::string format_reward_csv(std::span<const DecisionRecord> records) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "step,cum_reward\n");
  std::uint64_t cum = 0;
  for (const auto& r : records) {
    cum += static_cast<std::uint64_t>(r.reward);
    fmt::format_to(std::back_inserter(out), "{},{}\n", r.step, cum);
  }
  return fmt::to_string(out);
}

std::string format_alloc_csv(const AllocationSeries& series) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "bucket_start,arm,share\n");
  for (std::size_t b = 0; b < series.bucket_starts.size(); ++b) {
    for (std::size_t a = 0; a < series.num_arms; ++a) {
      fmt::format_to(std::back_inserter(out), "{},{},{}\n",
                     series.bucket_starts[b], a, series.shares[b][a]);
    }
  }
  return fmt::to_string(out);
}

std::string format_sweep_runs_csv(std::span<const SweepRow> rows) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "batch_size,run_seed,total_reward\n");
  for (const auto& row : rows) {
    for (const auto& run : row.runs) {
      fmt::format_to(std::back_inserter(out), "{},{},{}\n", row.batch_size,
                     run.seed, run.total_reward);
    }
  }
  return fmt::to_string(out);
}

std::string format_sweep_summary_csv(std::span<const SweepRow> rows) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "batch_size,mean_reward,std_reward\n");
  for (const auto& row : rows) {
    fmt::format_to(std::back_inserter(out), "{},{},{}\n", row.batch_size,
                   row.mean_reward, row.std_reward);
  }
  return fmt::to_string(out);
}

std::string format_regret_json(const RegretReport& report) {
  nlohmann::ordered_json j;
  j["horizon"] = report.horizon;
  j["total_reward"] = report.total_reward;
  j["mu_star"] = report.mu_star ? nlohmann::ordered_json(*report.mu_star)
                                : nlohmann::ordered_json(nullptr);
  j["mu_hat_star"] = report.mu_hat_star;
  j["g_per_trial"] = report.g_per_trial
                         ? nlohmann::ordered_json(*report.g_per_trial)
                         : nlohmann::ordered_json(nullptr);
  j["g_hat_per_trial"] = report.g_hat_per_trial;
  j["g_hat_total"] = report.g_hat_total;
  return j.dump(2) + "\n";
}

std::string format_replay_summary_json(const ReplayResult& result) {
  nlohmann::ordered_json j;
  j["matched"] = result.matched_events;
  j["total_reward"] = result.total_reward;
  j["mean_reward"] = result.mean_reward();
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << contents;
  out.close();
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace banditlab
