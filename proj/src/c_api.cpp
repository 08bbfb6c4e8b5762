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

#include "banditlab/banditlab.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "banditlab/batch.hpp"
#include "banditlab/error.hpp"
#include "banditlab/experiment.hpp"
#include "banditlab/io.hpp"
#include "banditlab/metrics.hpp"
#include "banditlab/policies.hpp"
#include "banditlab/replay.hpp"
#include "banditlab/rng.hpp"
#include "banditlab/simulation.hpp"

struct bl_rng {
  banditlab::Rng rng;
};
struct bl_policy {
  banditlab::PolicyState state;
};
struct bl_env {
  banditlab::Environment env;
};
struct bl_log {
  banditlab::EventLog events;
};
struct bl_experiment {
  banditlab::ExperimentConfig config;
};

namespace {

thread_local std::string g_last_error;

bl_status fail(bl_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

bl_status status_of(banditlab::ErrorKind kind) {
  switch (kind) {
    case banditlab::ErrorKind::kConfig:
      return BL_ERR_CONFIG;
    case banditlab::ErrorKind::kData:
      return BL_ERR_DATA;
    case banditlab::ErrorKind::kDomain:
      return BL_ERR_DOMAIN;
    case banditlab::ErrorKind::kState:
      return BL_ERR_STATE;
  }
  return BL_ERR_UNKNOWN;
}

// Runs fn and converts any exception into a status code.
template <class Fn>
bl_status guarded(Fn&& fn) {
  try {
    fn();
    return BL_OK;
  } catch (const banditlab::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BL_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(BL_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(BL_ERR_UNKNOWN, "unknown error");
  }
}

#define BL_REQUIRE(ptr)                                               \
  do {                                                                \
    if ((ptr) == nullptr) {                                           \
      return fail(BL_ERR_INVALID_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                 \
  } while (0)

std::vector<banditlab::DecisionRecord> to_records(const size_t* arms,
                                                  const int* rewards,
                                                  size_t n) {
  std::vector<banditlab::DecisionRecord> records;
  records.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (rewards[i] != 0 && rewards[i] != 1) {
      throw banditlab::DomainError("reward must be 0 or 1");
    }
    records.push_back(banditlab::DecisionRecord{i, banditlab::ArmId{arms[i]},
                                                rewards[i]});
  }
  return records;
}

void fill_report(const banditlab::RegretReport& r, bl_regret_report* out) {
  out->horizon = r.horizon;
  out->total_reward = r.total_reward;
  out->mu_hat_star = r.mu_hat_star;
  out->g_hat_per_trial = r.g_hat_per_trial;
  out->g_hat_total = r.g_hat_total;
  out->has_mu_star = r.mu_star.has_value() ? 1 : 0;
  out->mu_star = r.mu_star.value_or(0.0);
  out->g_per_trial = r.g_per_trial.value_or(0.0);
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "0.1.0"; }

const char* bl_last_error(void) { return g_last_error.c_str(); }

bl_status bl_rng_create(uint64_t seed, bl_rng** out) {
  BL_REQUIRE(out);
  return guarded([&] { *out = new bl_rng{banditlab::Rng(seed)}; });
}

void bl_rng_destroy(bl_rng* rng) { delete rng; }

bl_status bl_policy_create(const char* algorithm, size_t num_arms,
                           double epsilon, double prior_alpha,
                           double prior_beta, bl_policy** out) {
  BL_REQUIRE(algorithm);
  BL_REQUIRE(out);
  return guarded([&] {
    banditlab::PolicySpec spec;
    spec.algorithm = banditlab::parse_algorithm(algorithm);
    spec.epsilon = epsilon;
    spec.prior_alpha = prior_alpha;
    spec.prior_beta = prior_beta;
    *out = new bl_policy{banditlab::make_policy(spec, num_arms)};
  });
}

bl_status bl_policy_clone(const bl_policy* policy, bl_policy** out) {
  BL_REQUIRE(policy);
  BL_REQUIRE(out);
  return guarded([&] { *out = new bl_policy{policy->state}; });
}

void bl_policy_destroy(bl_policy* policy) { delete policy; }

bl_status bl_policy_select(const bl_policy* policy, bl_rng* rng, size_t* arm) {
  BL_REQUIRE(policy);
  BL_REQUIRE(rng);
  BL_REQUIRE(arm);
  return guarded(
      [&] { *arm = banditlab::select(policy->state, rng->rng).value; });
}

bl_status bl_policy_update(bl_policy* policy, size_t arm, int reward) {
  BL_REQUIRE(policy);
  return guarded([&] {
    banditlab::update(policy->state, banditlab::ArmId{arm}, reward);
  });
}

bl_status bl_policy_step(const bl_policy* policy, uint64_t* step) {
  BL_REQUIRE(policy);
  BL_REQUIRE(step);
  *step = policy->state.step;
  return BL_OK;
}

bl_status bl_policy_num_arms(const bl_policy* policy, size_t* num_arms) {
  BL_REQUIRE(policy);
  BL_REQUIRE(num_arms);
  *num_arms = policy->state.num_arms();
  return BL_OK;
}

bl_status bl_policy_empirical_winner(const bl_policy* policy, size_t* arm) {
  BL_REQUIRE(policy);
  BL_REQUIRE(arm);
  return guarded(
      [&] { *arm = banditlab::empirical_winner(policy->state).value; });
}

bl_status bl_policy_arm_stats(const bl_policy* policy, size_t arm,
                              uint64_t* pulls, uint64_t* reward_sum) {
  BL_REQUIRE(policy);
  BL_REQUIRE(pulls);
  BL_REQUIRE(reward_sum);
  return guarded([&] {
    if (arm >= policy->state.num_arms()) {
      throw banditlab::DomainError("arm out of range");
    }
    const banditlab::ArmStats* stats = std::visit(
        [&](const auto& s) -> const banditlab::ArmStats* {
          if constexpr (requires { s.stats; }) {
            return &s.stats[arm];
          } else {
            return nullptr;
          }
        },
        policy->state.kind);
    if (stats == nullptr) {
      throw banditlab::ConfigError("policy keeps no pull counts");
    }
    *pulls = stats->pulls;
    *reward_sum = stats->reward_sum;
  });
}

bl_status bl_policy_posterior(const bl_policy* policy, size_t arm,
                              double* alpha, double* beta) {
  BL_REQUIRE(policy);
  BL_REQUIRE(alpha);
  BL_REQUIRE(beta);
  return guarded([&] {
    const auto* ts = std::get_if<banditlab::ThompsonState>(&policy->state.kind);
    if (ts == nullptr) throw banditlab::ConfigError("policy has no posterior");
    if (arm >= ts->posteriors.size()) {
      throw banditlab::DomainError("arm out of range");
    }
    *alpha = ts->posteriors[arm].alpha;
    *beta = ts->posteriors[arm].beta;
  });
}

bl_status bl_ucb1_index(uint64_t pulls, uint64_t reward_sum, uint64_t t,
                        double* index) {
  BL_REQUIRE(index);
  return guarded([&] {
    if (reward_sum > pulls) {
      throw banditlab::DomainError("reward_sum exceeds pulls");
    }
    *index = banditlab::ucb1_index(banditlab::ArmStats{pulls, reward_sum}, t);
  });
}

bl_status bl_env_create_stationary(const double* probs, size_t num_arms,
                                   uint64_t horizon, bl_env** out) {
  BL_REQUIRE(out);
  if (num_arms > 0) BL_REQUIRE(probs);
  return guarded([&] {
    *out = new bl_env{banditlab::make_stationary(
        std::span<const double>(probs, num_arms), horizon)};
  });
}

bl_status bl_env_create_crossing(uint64_t horizon, double p_low, double p_high,
                                 uint64_t cross_step, bl_env** out) {
  BL_REQUIRE(out);
  return guarded([&] {
    *out = new bl_env{
        banditlab::make_crossing_scenario(horizon, p_low, p_high, cross_step)};
  });
}

void bl_env_destroy(bl_env* env) { delete env; }

bl_status bl_env_num_arms(const bl_env* env, size_t* num_arms) {
  BL_REQUIRE(env);
  BL_REQUIRE(num_arms);
  *num_arms = env->env.num_arms();
  return BL_OK;
}

bl_status bl_env_prob_at(const bl_env* env, size_t arm, uint64_t t,
                         double* prob) {
  BL_REQUIRE(env);
  BL_REQUIRE(prob);
  return guarded([&] { *prob = env->env.prob_at(banditlab::ArmId{arm}, t); });
}

bl_status bl_log_generate(const bl_env* env, bl_rng* rng, bl_log** out) {
  BL_REQUIRE(env);
  BL_REQUIRE(rng);
  BL_REQUIRE(out);
  return guarded([&] {
    *out = new bl_log{banditlab::generate_uniform_log(env->env, rng->rng)};
  });
}

bl_status bl_log_read(const char* path, bl_log** out) {
  BL_REQUIRE(path);
  BL_REQUIRE(out);
  return guarded([&] { *out = new bl_log{banditlab::read_log_file(path)}; });
}

bl_status bl_log_write(const bl_log* log, const char* path) {
  BL_REQUIRE(log);
  BL_REQUIRE(path);
  return guarded([&] {
    banditlab::write_text_file(path, banditlab::format_log_csv(log->events));
  });
}

bl_status bl_log_size(const bl_log* log, size_t* size) {
  BL_REQUIRE(log);
  BL_REQUIRE(size);
  *size = log->events.size();
  return BL_OK;
}

bl_status bl_log_event(const bl_log* log, size_t index, uint64_t* step,
                       size_t* arm, int* reward) {
  BL_REQUIRE(log);
  if (index >= log->events.size()) {
    return fail(BL_ERR_DOMAIN, "event index out of range");
  }
  const auto& e = log->events[index];
  if (step != nullptr) *step = e.step;
  if (arm != nullptr) *arm = e.arm.value;
  if (reward != nullptr) *reward = e.reward;
  return BL_OK;
}

void bl_log_destroy(bl_log* log) { delete log; }

bl_status bl_replay_evaluate(const bl_policy* policy, const bl_log* log,
                             bl_rng* rng, bl_replay_summary* out) {
  BL_REQUIRE(policy);
  BL_REQUIRE(log);
  BL_REQUIRE(rng);
  BL_REQUIRE(out);
  return guarded([&] {
    const auto r =
        banditlab::replay_evaluate(policy->state, log->events, rng->rng);
    out->matched_events = r.matched_events;
    out->total_reward = r.total_reward;
  });
}

bl_status bl_run_batched(const bl_policy* policy, const bl_env* env,
                         const bl_batch_config* config, bl_rng* rng,
                         uint64_t* total_reward) {
  BL_REQUIRE(policy);
  BL_REQUIRE(env);
  BL_REQUIRE(config);
  BL_REQUIRE(rng);
  BL_REQUIRE(total_reward);
  return guarded([&] {
    banditlab::BatchConfig cfg;
    cfg.batch_size = config->batch_size;
    switch (config->delay_type) {
      case BL_DELAY_NONE:
        cfg.delay = banditlab::NoDelay{};
        break;
      case BL_DELAY_CONSTANT:
        cfg.delay = banditlab::ConstantDelay{config->delay_events};
        break;
      case BL_DELAY_GEOMETRIC:
        cfg.delay = banditlab::GeometricDelay{config->delay_mean};
        break;
      default:
        throw banditlab::ConfigError("unknown delay type");
    }
    *total_reward =
        banditlab::run_batched(policy->state, env->env, cfg, rng->rng)
            .total_reward();
  });
}

bl_status bl_empirical_regret(const size_t* arms, const int* rewards, size_t n,
                              bl_regret_report* out) {
  BL_REQUIRE(out);
  if (n > 0) {
    BL_REQUIRE(arms);
    BL_REQUIRE(rewards);
  }
  return guarded([&] {
    fill_report(banditlab::empirical_regret(to_records(arms, rewards, n)), out);
  });
}

bl_status bl_theoretical_regret(const size_t* arms, const int* rewards,
                                size_t n, double mu_star,
                                bl_regret_report* out) {
  BL_REQUIRE(out);
  if (n > 0) {
    BL_REQUIRE(arms);
    BL_REQUIRE(rewards);
  }
  return guarded([&] {
    fill_report(
        banditlab::theoretical_regret(to_records(arms, rewards, n), mu_star),
        out);
  });
}

bl_status bl_experiment_load(const char* path, bl_experiment** out) {
  BL_REQUIRE(path);
  BL_REQUIRE(out);
  return guarded(
      [&] { *out = new bl_experiment{banditlab::load_config(path)}; });
}

bl_status bl_experiment_parse(const char* json_text, bl_experiment** out) {
  BL_REQUIRE(json_text);
  BL_REQUIRE(out);
  return guarded(
      [&] { *out = new bl_experiment{banditlab::parse_config(json_text)}; });
}

bl_status bl_experiment_set_seed(bl_experiment* experiment, uint64_t seed) {
  BL_REQUIRE(experiment);
  experiment->config.base_seed = seed;
  return BL_OK;
}

bl_status bl_experiment_set_output_dir(bl_experiment* experiment,
                                       const char* dir) {
  BL_REQUIRE(experiment);
  BL_REQUIRE(dir);
  return guarded([&] { experiment->config.output_dir = dir; });
}

bl_status bl_experiment_run(const bl_experiment* experiment,
                            const char* command) {
  BL_REQUIRE(experiment);
  BL_REQUIRE(command);
  return guarded([&] {
    banditlab::run_command(banditlab::parse_command(command),
                           experiment->config);
  });
}

void bl_experiment_destroy(bl_experiment* experiment) { delete experiment; }

}  // extern "C"
