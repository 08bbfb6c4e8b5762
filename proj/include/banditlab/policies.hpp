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

#ifndef BANDITLAB_POLICIES_HPP_
#define BANDITLAB_POLICIES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// Index of an arm ("experience") in [0, K).
struct ArmId {
  std::size_t value = 0;

  friend bool operator==(ArmId, ArmId) = default;
  friend auto operator<=>(ArmId, ArmId) = default;
};

// One policy decision: the arm shown at `step` and the binary reward seen.
struct DecisionRecord {
  std::uint64_t step = 0;
  ArmId arm;
  int reward = 0;

  friend bool operator==(const DecisionRecord&, const DecisionRecord&) =
      default;
};

// Pull and success counts for one arm. mean() is 0 for an unplayed arm.
struct ArmStats {
  std::uint64_t pulls = 0;
  std::uint64_t reward_sum = 0;

  double mean() const {
    return pulls == 0 ? 0.0
                      : static_cast<double>(reward_sum) /
                            static_cast<double>(pulls);
  }

  friend bool operator==(const ArmStats&, const ArmStats&) = default;
};

struct BetaPosterior {
  double alpha = 1.0;
  double beta = 1.0;

  double mean() const { return alpha / (alpha + beta); }

  friend bool operator==(const BetaPosterior&, const BetaPosterior&) = default;
};

struct EpsilonGreedyState {
  double epsilon = 0.0;
  std::vector<ArmStats> stats;

  friend bool operator==(const EpsilonGreedyState&,
                         const EpsilonGreedyState&) = default;
};

struct ThompsonState {
  std::vector<BetaPosterior> posteriors;

  friend bool operator==(const ThompsonState&, const ThompsonState&) = default;
};

struct Ucb1State {
  std::vector<ArmStats> stats;

  friend bool operator==(const Ucb1State&, const Ucb1State&) = default;
};

// A/B-test baseline: uniform selection, no learning. Stats are kept for
// reporting only.
struct UniformState {
  std::vector<ArmStats> stats;

  friend bool operator==(const UniformState&, const UniformState&) = default;
};

// Always shows the same arm. Used as the fixed policy when checking the
// replay evaluator against online simulation.
struct FixedArmState {
  ArmId arm;
  std::vector<ArmStats> stats;

  friend bool operator==(const FixedArmState&, const FixedArmState&) = default;
};

enum class Algorithm {
  kEpsilonGreedy,
  kThompson,
  kUcb1,
  kUniform,
  kFixedArm,
};

// Names used in configuration files: epsilon_greedy, thompson, ucb1,
// uniform_ab, fixed_arm.
std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

// Learned state of one policy plus the global decision counter. `step` counts
// applied updates; for UCB1 the decision time is step + 1.
struct PolicyState {
  std::variant<EpsilonGreedyState, ThompsonState, Ucb1State, UniformState,
               FixedArmState>
      kind;
  std::uint64_t step = 0;

  Algorithm algorithm() const;
  std::size_t num_arms() const;

  friend bool operator==(const PolicyState&, const PolicyState&) = default;
};

// Parameters from which fresh policy states are built.
struct PolicySpec {
  Algorithm algorithm = Algorithm::kThompson;
  double epsilon = 0.2;
  double prior_alpha = 1.0;
  double prior_beta = 1.0;
  std::size_t fixed_arm = 0;
};

// Throws ConfigError for K = 0 or out-of-range parameters.
PolicyState make_policy(const PolicySpec& spec, std::size_t num_arms);
PolicyState make_epsilon_greedy(std::size_t num_arms, double epsilon);
PolicyState make_thompson(std::vector<BetaPosterior> priors);
PolicyState make_ucb1(std::size_t num_arms);
PolicyState make_uniform(std::size_t num_arms);
PolicyState make_fixed_arm(std::size_t num_arms, ArmId arm);

// With probability epsilon an arm drawn uniformly over all K arms (winner
// included), otherwise empirical_winner(). P(winner) = 1 - eps + eps / K.
ArmId select_epsilon_greedy(const PolicyState& state, Rng& rng);

// Argmax of one Beta draw per arm. Throws StateError on non-finite or
// non-positive posterior parameters.
ArmId select_thompson(const PolicyState& state, Rng& rng);

// Argmax of ucb1_index at t = state.step + 1. Deterministic.
ArmId select_ucb1(const PolicyState& state);

// p + sqrt(2 ln t / (pulls + 1)). Throws DomainError when t < 1.
double ucb1_index(const ArmStats& stats, std::uint64_t t);
// Same bound at a real-valued time t >= 1.
double ucb1_index_at(const ArmStats& stats, double t);

// Dispatches on the state's algorithm.
ArmId select(const PolicyState& state, Rng& rng);

// Credits one binary reward to `arm` and advances the step counter.
// Throws DomainError if reward is not 0 or 1 or arm is out of range.
void update(PolicyState& state, ArmId arm, int reward);

// Highest empirical mean (posterior mean for Thompson sampling); ties go to
// the smallest index.
ArmId empirical_winner(const PolicyState& state);

}  // namespace banditlab

#endif  // BANDITLAB_POLICIES_HPP_
