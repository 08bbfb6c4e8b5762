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

/* C interface to banditlab.
 *
 * Objects are opaque handles created by bl_*_create / bl_*_load functions and
 * released with the matching bl_*_destroy (destroying NULL is a no-op).
 * Every fallible call returns a bl_status; on failure a message describing the
 * error is available from bl_last_error() on the same thread until the next
 * failing call.
 *
 * Handles are not internally synchronised. A handle may be moved between
 * threads but must not be used from two threads at once.
 */
#ifndef BANDITLAB_BANDITLAB_H_
#define BANDITLAB_BANDITLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BL_BUILDING_LIBRARY)
#    define BL_API __declspec(dllexport)
#  else
#    define BL_API __declspec(dllimport)
#  endif
#else
#  define BL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2 and 3 double as CLI exit codes. */
typedef enum bl_status {
  BL_OK = 0,
  BL_ERR_UNKNOWN = 1,
  BL_ERR_CONFIG = 2,
  BL_ERR_DATA = 3,
  BL_ERR_DOMAIN = 4,
  BL_ERR_STATE = 5,
  BL_ERR_INVALID_ARGUMENT = 6 /* NULL handle or output pointer */
} bl_status;

typedef enum bl_delay_type {
  BL_DELAY_NONE = 0,
  BL_DELAY_CONSTANT = 1,
  BL_DELAY_GEOMETRIC = 2
} bl_delay_type;

typedef struct bl_rng bl_rng;
typedef struct bl_policy bl_policy;
typedef struct bl_env bl_env;
typedef struct bl_log bl_log;
typedef struct bl_experiment bl_experiment;

typedef struct bl_replay_summary {
  uint64_t matched_events;
  uint64_t total_reward;
} bl_replay_summary;

typedef struct bl_regret_report {
  uint64_t horizon;
  uint64_t total_reward;
  double mu_hat_star;
  double g_hat_per_trial;
  double g_hat_total;
  int has_mu_star; /* mu_star and g_per_trial are valid only when set */
  double mu_star;
  double g_per_trial;
} bl_regret_report;

typedef struct bl_batch_config {
  uint64_t batch_size;
  bl_delay_type delay_type;
  uint64_t delay_events; /* BL_DELAY_CONSTANT */
  double delay_mean;     /* BL_DELAY_GEOMETRIC */
} bl_batch_config;

BL_API const char* bl_version(void);
BL_API const char* bl_last_error(void);

/* Random streams */
BL_API bl_status bl_rng_create(uint64_t seed, bl_rng** out);
BL_API void bl_rng_destroy(bl_rng* rng);

/* Policies. algorithm is one of "epsilon_greedy", "thompson", "ucb1",
 * "uniform_ab". epsilon is used by epsilon_greedy, the prior by thompson. */
BL_API bl_status bl_policy_create(const char* algorithm, size_t num_arms,
                                  double epsilon, double prior_alpha,
                                  double prior_beta, bl_policy** out);
BL_API bl_status bl_policy_clone(const bl_policy* policy, bl_policy** out);
BL_API void bl_policy_destroy(bl_policy* policy);
BL_API bl_status bl_policy_select(const bl_policy* policy, bl_rng* rng,
                                  size_t* arm);
BL_API bl_status bl_policy_update(bl_policy* policy, size_t arm, int reward);
BL_API bl_status bl_policy_step(const bl_policy* policy, uint64_t* step);
BL_API bl_status bl_policy_num_arms(const bl_policy* policy, size_t* num_arms);
BL_API bl_status bl_policy_empirical_winner(const bl_policy* policy,
                                            size_t* arm);
/* Counts for count-based policies; BL_ERR_CONFIG for thompson. */
BL_API bl_status bl_policy_arm_stats(const bl_policy* policy, size_t arm,
                                     uint64_t* pulls, uint64_t* reward_sum);
/* Beta posterior for thompson; BL_ERR_CONFIG otherwise. */
BL_API bl_status bl_policy_posterior(const bl_policy* policy, size_t arm,
                                     double* alpha, double* beta);
BL_API bl_status bl_ucb1_index(uint64_t pulls, uint64_t reward_sum, uint64_t t,
                               double* index);

/* Environments */
BL_API bl_status bl_env_create_stationary(const double* probs, size_t num_arms,
                                          uint64_t horizon, bl_env** out);
BL_API bl_status bl_env_create_crossing(uint64_t horizon, double p_low,
                                        double p_high, uint64_t cross_step,
                                        bl_env** out);
BL_API void bl_env_destroy(bl_env* env);
BL_API bl_status bl_env_num_arms(const bl_env* env, size_t* num_arms);
BL_API bl_status bl_env_prob_at(const bl_env* env, size_t arm, uint64_t t,
                                double* prob);

/* Uniformly logged event streams */
BL_API bl_status bl_log_generate(const bl_env* env, bl_rng* rng, bl_log** out);
BL_API bl_status bl_log_read(const char* path, bl_log** out);
BL_API bl_status bl_log_write(const bl_log* log, const char* path);
BL_API bl_status bl_log_size(const bl_log* log, size_t* size);
BL_API bl_status bl_log_event(const bl_log* log, size_t index, uint64_t* step,
                              size_t* arm, int* reward);
BL_API void bl_log_destroy(bl_log* log);

/* Replays the log against a copy of `policy`; the handle is not modified. */
BL_API bl_status bl_replay_evaluate(const bl_policy* policy, const bl_log* log,
                                    bl_rng* rng, bl_replay_summary* out);

/* Online batched run against a copy of `policy`. */
BL_API bl_status bl_run_batched(const bl_policy* policy, const bl_env* env,
                                const bl_batch_config* config, bl_rng* rng,
                                uint64_t* total_reward);

/* Regret of n decisions given as parallel arm / reward arrays. */
BL_API bl_status bl_empirical_regret(const size_t* arms, const int* rewards,
                                     size_t n, bl_regret_report* out);
BL_API bl_status bl_theoretical_regret(const size_t* arms, const int* rewards,
                                       size_t n, double mu_star,
                                       bl_regret_report* out);

/* Experiments driven by a JSON config. command is one of "simulate",
 * "replay", "batch-sweep", "gap-sweep". */
BL_API bl_status bl_experiment_load(const char* path, bl_experiment** out);
BL_API bl_status bl_experiment_parse(const char* json_text,
                                     bl_experiment** out);
BL_API bl_status bl_experiment_set_seed(bl_experiment* experiment,
                                        uint64_t seed);
BL_API bl_status bl_experiment_set_output_dir(bl_experiment* experiment,
                                              const char* dir);
BL_API bl_status bl_experiment_run(const bl_experiment* experiment,
                                   const char* command);
BL_API void bl_experiment_destroy(bl_experiment* experiment);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* BANDITLAB_BANDITLAB_H_ */
