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

#include "banditlab/experiment.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>

#include <fmt/format.h>
#include <json.hpp>

#include "banditlab/error.hpp"
#include "banditlab/io.hpp"
#include "banditlab/metrics.hpp"
#include "banditlab/replay.hpp"
#include "parallel.hpp"

namespace banditlab {
namespace {

using nlohmann::json;

constexpr std::uint64_t kLogStream = 0x6c6f67;  // "log"

void reject_unknown_keys(const json& object, std::string_view where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(fmt::format("{}: unknown key '{}'", where, key));
    }
  }
}

// nlohmann converts -1 or 2.5 to an unsigned integer without complaint.
template <class T>
bool fits(const json& value) {
  if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
    return value.is_number_unsigned();
  } else if constexpr (requires { typename T::value_type; } &&
                       !std::is_same_v<T, std::string>) {
    return !value.is_array() ||
           std::all_of(value.begin(), value.end(),
                       fits<typename T::value_type>);
  } else {
    return true;
  }
}

template <class T>
T get_as(const json& object, const char* key, std::string_view where) {
  try {
    const json& value = object.at(key);
    if (fits<T>(value)) return value.get<T>();
  } catch (const json::exception&) {
  }
  throw ConfigError(fmt::format("{}: missing or invalid '{}'", where, key));
}

template <class T>
void read_optional(const json& object, const char* key, std::string_view where,
                   T& out) {
  if (object.contains(key)) out = get_as<T>(object, key, where);
}

EnvironmentSpec parse_environment(const json& j) {
  if (!j.is_object()) throw ConfigError("environment must be an object");
  const auto type = get_as<std::string>(j, "type", "environment");
  if (type == "stationary") {
    reject_unknown_keys(j, "environment", {"type", "probs"});
    return StationarySpec{get_as<std::vector<double>>(j, "probs", "environment")};
  }
  if (type == "crossing") {
    reject_unknown_keys(j, "environment",
                        {"type", "p_low", "p_high", "cross_step"});
    return CrossingSpec{get_as<double>(j, "p_low", "environment"),
                        get_as<double>(j, "p_high", "environment"),
                        get_as<std::uint64_t>(j, "cross_step", "environment")};
  }
  if (type == "schedule") {
    reject_unknown_keys(j, "environment", {"type", "arms"});
    ScheduleSpec spec;
    const json& arms = j.at("arms");
    if (!arms.is_array()) throw ConfigError("environment.arms must be an array");
    for (const auto& arm : arms) {
      if (!arm.is_array()) throw ConfigError("each arm schedule must be an array");
      std::vector<ScheduleSegment> segments;
      for (const auto& seg : arm) {
        reject_unknown_keys(seg, "schedule segment",
                            {"start_step", "end_step", "prob"});
        segments.push_back(ScheduleSegment{
            get_as<std::uint64_t>(seg, "start_step", "schedule segment"),
            get_as<std::uint64_t>(seg, "end_step", "schedule segment"),
            get_as<double>(seg, "prob", "schedule segment")});
      }
      spec.arms.push_back(std::move(segments));
    }
    return spec;
  }
  throw ConfigError("unknown environment type '" + type + "'");
}

DelayModel parse_delay(const json& j) {
  const auto type = get_as<std::string>(j, "type", "batch.delay");
  if (type == "none") {
    reject_unknown_keys(j, "batch.delay", {"type"});
    return NoDelay{};
  }
  if (type == "constant") {
    reject_unknown_keys(j, "batch.delay", {"type", "events"});
    return ConstantDelay{get_as<std::uint64_t>(j, "events", "batch.delay")};
  }
  if (type == "geometric") {
    reject_unknown_keys(j, "batch.delay", {"type", "mean"});
    return GeometricDelay{get_as<double>(j, "mean", "batch.delay")};
  }
  throw ConfigError("unknown delay type '" + type + "'");
}

Environment config_environment(const ExperimentConfig& config) {
  return build_environment(*config.environment, config.horizon);
}

EventLog config_log(const ExperimentConfig& config) {
  if (config.environment) {
    Rng rng = log_rng(config.base_seed);
    return generate_uniform_log(config_environment(config), rng);
  }
  return read_log_file(*config.log_path, config.num_arms);
}

std::size_t log_arm_count(const ExperimentConfig& config, const EventLog& log) {
  if (config.environment) return config_environment(config).num_arms();
  if (config.num_arms) return *config.num_arms;
  std::size_t k = 0;
  for (const auto& e : log) k = std::max(k, e.arm.value + 1);
  if (k == 0) throw ConfigError("cannot infer num_arms from an empty log");
  return k;
}

std::string empty_regret_json() {
  nlohmann::ordered_json j;
  j["horizon"] = 0;
  j["total_reward"] = 0;
  for (const char* key : {"mu_star", "mu_hat_star", "g_per_trial",
                          "g_hat_per_trial", "g_hat_total"}) {
    j[key] = nullptr;
  }
  return j.dump(2) + "\n";
}

// Buffers output files so nothing is written until all work has succeeded.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void add(const std::string& name, std::string contents) {
    files_.emplace_back(name, std::move(contents));
  }

  std::vector<std::filesystem::path> commit() const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
      throw DataError("cannot create output directory '" + dir_.string() +
                      "': " + ec.message());
    }
    std::vector<std::filesystem::path> written;
    for (const auto& [name, contents] : files_) {
      const auto path = dir_ / name;
      write_text_file(path, contents);
      written.push_back(path);
    }
    return written;
  }

 private:
  std::filesystem::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::vector<std::filesystem::path> run_simulate(const ExperimentConfig& config) {
  const Environment env = config_environment(config);
  Rng rng = log_rng(config.base_seed);
  OutputSet out(config.output_dir);
  out.add("log.csv", format_log_csv(generate_uniform_log(env, rng)));
  return out.commit();
}

std::vector<std::filesystem::path> run_replay(const ExperimentConfig& config) {
  const EventLog log = config_log(config);
  const std::size_t num_arms = log_arm_count(config, log);
  std::optional<double> mu_star;
  if (config.environment) mu_star = config_environment(config).best_mean_prob();

  ReplayResult result;
  if (config.metrics_only) {
    for (const auto& e : log) {
      if (e.arm.value >= num_arms) throw DataError("log arm out of range");
      result.decisions.push_back(DecisionRecord{e.step, e.arm, e.reward});
      result.total_reward += static_cast<std::uint64_t>(e.reward);
    }
    result.matched_events = result.decisions.size();
  } else {
    Rng rng(config.base_seed);
    result = replay_evaluate(make_policy(config.policy, num_arms), log, rng);
  }

  OutputSet out(config.output_dir);
  out.add("decisions.csv", format_decisions_csv(result.decisions));
  out.add("reward.csv", format_reward_csv(result.decisions));
  out.add("alloc.csv", format_alloc_csv(traffic_allocation(
                           result.decisions, config.window, num_arms)));
  if (result.decisions.empty()) {
    out.add("regret.json", empty_regret_json());
  } else {
    const RegretReport report =
        mu_star ? theoretical_regret(result.decisions, *mu_star)
                : empirical_regret(result.decisions);
    out.add("regret.json", format_regret_json(report));
  }

  nlohmann::ordered_json summary =
      nlohmann::ordered_json::parse(format_replay_summary_json(result));
  if (config.n_runs > 1 && !config.metrics_only) {
    const ReplaySummary many = replay_many(config.policy, num_arms, log,
                                           config.n_runs, config.base_seed);
    std::string runs = "run_seed,matched,total_reward\n";
    for (const auto& run : many.runs) {
      runs += fmt::format("{},{},{}\n", run.seed, run.matched_events,
                          run.total_reward);
    }
    out.add("runs.csv", std::move(runs));
    summary["n_runs"] = config.n_runs;
    summary["mean_total_reward"] = many.mean_total_reward;
    summary["std_total_reward"] = many.std_total_reward;
  }
  out.add("summary.json", summary.dump(2) + "\n");
  return out.commit();
}

std::vector<std::filesystem::path> run_batch_sweep(
    const ExperimentConfig& config) {
  std::vector<SweepRow> rows;
  if (config.environment) {
    rows = batch_sweep(config.policy, config_environment(config),
                       config.batch_sizes, config.delay, config.n_runs,
                       config.base_seed);
  } else {
    const EventLog log = config_log(config);
    rows = batch_sweep(config.policy, log_arm_count(config, log), log,
                       config.batch_sizes, config.delay, config.n_runs,
                       config.base_seed);
  }
  OutputSet out(config.output_dir);
  out.add("sweep_runs.csv", format_sweep_runs_csv(rows));
  out.add("sweep_summary.csv", format_sweep_summary_csv(rows));
  return out.commit();
}

std::vector<std::filesystem::path> run_gap_sweep(const ExperimentConfig& config) {
  const auto rows = gap_sweep(*config.gap_sweep, config.policy, config.horizon,
                              config.n_runs, config.base_seed);
  std::string csv = "gap,algorithm,mean_reward,std_reward,normalized_reward\n";
  for (const auto& row : rows) {
    csv += fmt::format("{},{},{},{},{}\n", row.gap, to_string(row.algorithm),
                       row.mean_reward, row.std_reward, row.normalized_reward);
  }
  OutputSet out(config.output_dir);
  out.add("gap_sweep.csv", std::move(csv));
  return out.commit();
}

}  // namespace

Rng log_rng(std::uint64_t seed) { return Rng::derive(seed, kLogStream); }

Environment build_environment(const EnvironmentSpec& spec,
                              std::uint64_t horizon) {
  if (const auto* s = std::get_if<StationarySpec>(&spec)) {
    return make_stationary(s->probs, horizon);
  }
  if (const auto* c = std::get_if<CrossingSpec>(&spec)) {
    return make_crossing_scenario(horizon, c->p_low, c->p_high, c->cross_step);
  }
  return Environment(std::get<ScheduleSpec>(spec).arms, horizon);
}

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  constexpr std::string_view kWhere = "config";
  reject_unknown_keys(
      j, kWhere,
      {"algorithm", "epsilon", "prior_alpha", "prior_beta", "fixed_arm",
       "environment", "log_path", "num_arms", "horizon", "batch", "n_runs",
       "base_seed", "output_dir", "window", "metrics_only", "gap_sweep"});

  ExperimentConfig config;
  if (j.contains("algorithm")) {
    config.policy.algorithm =
        parse_algorithm(get_as<std::string>(j, "algorithm", kWhere));
  }
  read_optional(j, "epsilon", kWhere, config.policy.epsilon);
  read_optional(j, "prior_alpha", kWhere, config.policy.prior_alpha);
  read_optional(j, "prior_beta", kWhere, config.policy.prior_beta);
  read_optional(j, "fixed_arm", kWhere, config.policy.fixed_arm);
  if (j.contains("environment")) {
    config.environment = parse_environment(j.at("environment"));
  }
  if (j.contains("log_path")) {
    config.log_path = get_as<std::string>(j, "log_path", kWhere);
  }
  if (j.contains("num_arms")) {
    config.num_arms = get_as<std::size_t>(j, "num_arms", kWhere);
  }
  read_optional(j, "horizon", kWhere, config.horizon);
  if (j.contains("batch")) {
    const json& b = j.at("batch");
    if (!b.is_object()) throw ConfigError("batch must be an object");
    reject_unknown_keys(b, "batch", {"sizes", "delay"});
    read_optional(b, "sizes", "batch", config.batch_sizes);
    if (b.contains("delay")) config.delay = parse_delay(b.at("delay"));
  }
  read_optional(j, "n_runs", kWhere, config.n_runs);
  read_optional(j, "base_seed", kWhere, config.base_seed);
  if (j.contains("output_dir")) {
    config.output_dir = get_as<std::string>(j, "output_dir", kWhere);
  }
  read_optional(j, "window", kWhere, config.window);
  read_optional(j, "metrics_only", kWhere, config.metrics_only);
  if (j.contains("gap_sweep")) {
    const json& g = j.at("gap_sweep");
    if (!g.is_object()) throw ConfigError("gap_sweep must be an object");
    reject_unknown_keys(g, "gap_sweep", {"gaps", "baseline"});
    GapSweepSpec spec;
    spec.gaps = get_as<std::vector<double>>(g, "gaps", "gap_sweep");
    read_optional(g, "baseline", "gap_sweep", spec.baseline);
    config.gap_sweep = std::move(spec);
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::kSimulate, Command::kReplay, Command::kBatchSweep,
                    Command::kGapSweep}) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kSimulate:
      return "simulate";
    case Command::kReplay:
      return "replay";
    case Command::kBatchSweep:
      return "batch-sweep";
    case Command::kGapSweep:
      return "gap-sweep";
  }
  return "unknown";
}

void validate_for(Command command, const ExperimentConfig& config) {
  if (config.n_runs == 0) throw ConfigError("n_runs must be >= 1");
  if (config.window == 0) throw ConfigError("window must be >= 1");

  if (command == Command::kGapSweep) {
    if (!config.gap_sweep) throw ConfigError("gap-sweep needs a gap_sweep block");
    if (config.horizon == 0) throw ConfigError("horizon must be >= 1");
    const auto& g = *config.gap_sweep;
    if (g.gaps.empty()) throw ConfigError("gap_sweep.gaps must not be empty");
    for (double gap : g.gaps) {
      if (!(gap >= 0.0) || !(g.baseline >= 0.0) || !(g.baseline + gap <= 1.0)) {
        throw ConfigError("gap sweep rates must satisfy 0 <= p <= p + gap <= 1");
      }
    }
    // Checks epsilon and prior ranges.
    for (Algorithm a : {Algorithm::kEpsilonGreedy, Algorithm::kThompson}) {
      PolicySpec spec = config.policy;
      spec.algorithm = a;
      make_policy(spec, 2);
    }
    return;
  }

  if (config.environment.has_value() == config.log_path.has_value()) {
    throw ConfigError("exactly one of 'environment' and 'log_path' is required");
  }
  if (command == Command::kSimulate && !config.environment) {
    throw ConfigError("simulate needs an environment");
  }
  std::size_t num_arms = 0;
  if (config.environment) {
    if (config.horizon == 0) throw ConfigError("horizon must be >= 1");
    num_arms = config_environment(config).num_arms();
  } else if (config.num_arms) {
    num_arms = *config.num_arms;
  }
  if (num_arms > 0 && !config.metrics_only) make_policy(config.policy, num_arms);
  if (command == Command::kBatchSweep) {
    if (config.batch_sizes.empty()) throw ConfigError("batch.sizes must not be empty");
    for (std::uint64_t size : config.batch_sizes) {
      BatchConfig{size, config.delay}.validate();
    }
  }
}

std::vector<std::filesystem::path> run_command(Command command,
                                               const ExperimentConfig& config) {
  validate_for(command, config);
  switch (command) {
    case Command::kSimulate:
      return run_simulate(config);
    case Command::kReplay:
      return run_replay(config);
    case Command::kBatchSweep:
      return run_batch_sweep(config);
    case Command::kGapSweep:
      return run_gap_sweep(config);
  }
  throw ConfigError("unknown command");
}

std::vector<GapRow> gap_sweep(const GapSweepSpec& spec, const PolicySpec& params,
                              std::uint64_t horizon, std::size_t n_runs,
                              std::uint64_t base_seed) {
  if (n_runs == 0) throw ConfigError("n_runs must be >= 1");
  constexpr std::array kAlgorithms{Algorithm::kUniform, Algorithm::kEpsilonGreedy,
                                   Algorithm::kThompson, Algorithm::kUcb1};
  constexpr std::size_t kNumAlgorithms = kAlgorithms.size();

  std::vector<PolicyState> initial;
  for (Algorithm a : kAlgorithms) {
    PolicySpec s = params;
    s.algorithm = a;
    initial.push_back(make_policy(s, 2));
  }
  std::vector<Environment> envs;
  for (double gap : spec.gaps) {
    const std::array probs{spec.baseline, spec.baseline + gap};
    envs.push_back(make_stationary(probs, horizon));
  }

  // per_trial[gap][algorithm][run]
  std::vector<std::vector<std::vector<double>>> per_trial(
      spec.gaps.size(), std::vector<std::vector<double>>(
                            kNumAlgorithms, std::vector<double>(n_runs)));
  detail::parallel_for(spec.gaps.size() * n_runs, [&](std::size_t job) {
    const std::size_t g = job / n_runs;
    const std::size_t r = job % n_runs;
    const std::uint64_t seed = base_seed + r;
    Rng lrng = log_rng(seed);
    const EventLog log = generate_uniform_log(envs[g], lrng);
    for (std::size_t a = 0; a < kNumAlgorithms; ++a) {
      Rng rng(seed);
      per_trial[g][a][r] = replay_evaluate(initial[a], log, rng).mean_reward();
    }
  });

  std::vector<GapRow> rows;
  for (std::size_t g = 0; g < spec.gaps.size(); ++g) {
    const double baseline_mean = mean_std(per_trial[g][0]).mean;
    for (std::size_t a = 0; a < kNumAlgorithms; ++a) {
      const MeanStd ms = mean_std(per_trial[g][a]);
      rows.push_back(GapRow{spec.gaps[g], kAlgorithms[a], ms.mean, ms.std,
                            baseline_mean > 0.0 ? ms.mean / baseline_mean : 0.0});
    }
  }
  return rows;
}

}  // namespace banditlab
