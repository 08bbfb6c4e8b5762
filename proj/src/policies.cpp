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

#include "banditlab/policies.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "banditlab/error.hpp"

namespace banditlab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_arms(std::size_t num_arms) {
  if (num_arms == 0) throw ConfigError("policy needs at least one arm");
}

// Smallest index wins ties.
template <class Score>
ArmId argmax(std::size_t n, Score score) {
  std::size_t best = 0;
  double best_value = score(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = score(i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return ArmId{best};
}

ArmId stats_winner(const std::vector<ArmStats>& stats) {
  return argmax(stats.size(), [&](std::size_t i) { return stats[i].mean(); });
}

const std::vector<ArmStats>* stats_of(const PolicyState& state) {
  return std::visit(
      Overloaded{
          [](const ThompsonState&) -> const std::vector<ArmStats>* {
            return nullptr;
          },
          [](const auto& s) -> const std::vector<ArmStats>* {
            return &s.stats;
          },
      },
      state.kind);
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEpsilonGreedy:
      return "epsilon_greedy";
    case Algorithm::kThompson:
      return "thompson";
    case Algorithm::kUcb1:
      return "ucb1";
    case Algorithm::kUniform:
      return "uniform_ab";
    case Algorithm::kFixedArm:
      return "fixed_arm";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kEpsilonGreedy, Algorithm::kThompson,
                      Algorithm::kUcb1, Algorithm::kUniform,
                      Algorithm::kFixedArm}) {
    if (to_string(a) == name) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

Algorithm PolicyState::algorithm() const {
  return std::visit(
      Overloaded{
          [](const EpsilonGreedyState&) { return Algorithm::kEpsilonGreedy; },
          [](const ThompsonState&) { return Algorithm::kThompson; },
          [](const Ucb1State&) { return Algorithm::kUcb1; },
          [](const UniformState&) { return Algorithm::kUniform; },
          [](const FixedArmState&) { return Algorithm::kFixedArm; },
      },
      kind);
}

std::size_t PolicyState::num_arms() const {
  if (const auto* ts = std::get_if<ThompsonState>(&kind)) {
    return ts->posteriors.size();
  }
  return stats_of(*this)->size();
}

PolicyState make_epsilon_greedy(std::size_t num_arms, double epsilon) {
  require_arms(num_arms);
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ConfigError("epsilon must lie in [0, 1]");
  }
  return PolicyState{EpsilonGreedyState{epsilon, std::vector<ArmStats>(num_arms)},
                     0};
}

PolicyState make_thompson(std::vector<BetaPosterior> priors) {
  require_arms(priors.size());
  for (const auto& p : priors) {
    if (!(p.alpha > 0.0 && p.beta > 0.0) || !std::isfinite(p.alpha) ||
        !std::isfinite(p.beta)) {
      throw ConfigError("beta prior parameters must be finite and positive");
    }
  }
  return PolicyState{ThompsonState{std::move(priors)}, 0};
}

PolicyState make_ucb1(std::size_t num_arms) {
  require_arms(num_arms);
  return PolicyState{Ucb1State{std::vector<ArmStats>(num_arms)}, 0};
}

PolicyState make_uniform(std::size_t num_arms) {
  require_arms(num_arms);
  return PolicyState{UniformState{std::vector<ArmStats>(num_arms)}, 0};
}

PolicyState make_fixed_arm(std::size_t num_arms, ArmId arm) {
  require_arms(num_arms);
  if (arm.value >= num_arms) throw ConfigError("fixed arm out of range");
  return PolicyState{FixedArmState{arm, std::vector<ArmStats>(num_arms)}, 0};
}

PolicyState make_policy(const PolicySpec& spec, std::size_t num_arms) {
  switch (spec.algorithm) {
    case Algorithm::kEpsilonGreedy:
      return make_epsilon_greedy(num_arms, spec.epsilon);
    case Algorithm::kThompson:
      return make_thompson(std::vector<BetaPosterior>(
          num_arms, BetaPosterior{spec.prior_alpha, spec.prior_beta}));
    case Algorithm::kUcb1:
      return make_ucb1(num_arms);
    case Algorithm::kUniform:
      return make_uniform(num_arms);
    case Algorithm::kFixedArm:
      return make_fixed_arm(num_arms, ArmId{spec.fixed_arm});
  }
  throw ConfigError("unknown algorithm");
}

ArmId select_epsilon_greedy(const PolicyState& state, Rng& rng) {
  const auto& s = std::get<EpsilonGreedyState>(state.kind);
  require_arms(s.stats.size());
  if (rng.uniform() < s.epsilon) {
    return ArmId{rng.uniform_index(s.stats.size())};
  }
  return stats_winner(s.stats);
}

ArmId select_thompson(const PolicyState& state, Rng& rng) {
  const auto& s = std::get<ThompsonState>(state.kind);
  require_arms(s.posteriors.size());
  for (const auto& p : s.posteriors) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || p.alpha <= 0.0 ||
        p.beta <= 0.0) {
      throw StateError("corrupt beta posterior");
    }
  }
  // Draw every sample in arm order first so the stream consumption does not
  // depend on the values.
  std::vector<double> samples(s.posteriors.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = rng.beta(s.posteriors[i].alpha, s.posteriors[i].beta);
  }
  return argmax(samples.size(), [&](std::size_t i) { return samples[i]; });
}

double ucb1_index_at(const ArmStats& stats, double t) {
  if (!(t >= 1.0)) throw DomainError("ucb1_index requires t >= 1");
  const double bonus =
      std::sqrt(2.0 * std::log(t) / (static_cast<double>(stats.pulls) + 1.0));
  return stats.mean() + bonus;
}

double ucb1_index(const ArmStats& stats, std::uint64_t t) {
  if (t < 1) throw DomainError("ucb1_index requires t >= 1");
  return ucb1_index_at(stats, static_cast<double>(t));
}

ArmId select_ucb1(const PolicyState& state) {
  const auto& s = std::get<Ucb1State>(state.kind);
  require_arms(s.stats.size());
  const std::uint64_t t = state.step + 1;
  return argmax(s.stats.size(),
                [&](std::size_t i) { return ucb1_index(s.stats[i], t); });
}

ArmId select(const PolicyState& state, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const EpsilonGreedyState&) {
            return select_epsilon_greedy(state, rng);
          },
          [&](const ThompsonState&) { return select_thompson(state, rng); },
          [&](const Ucb1State&) { return select_ucb1(state); },
          [&](const UniformState& s) {
            require_arms(s.stats.size());
            return ArmId{rng.uniform_index(s.stats.size())};
          },
          [&](const FixedArmState& s) { return s.arm; },
      },
      state.kind);
}

void update(PolicyState& state, ArmId arm, int reward) {
  if (reward != 0 && reward != 1) {
    throw DomainError("reward must be 0 or 1, got " + std::to_string(reward));
  }
  if (arm.value >= state.num_arms()) {
    throw DomainError("arm " + std::to_string(arm.value) + " out of range");
  }
  std::visit(Overloaded{
                 [&](ThompsonState& s) {
                   auto& p = s.posteriors[arm.value];
                   p.alpha += reward;
                   p.beta += 1 - reward;
                 },
                 [&](auto& s) {
                   auto& st = s.stats[arm.value];
                   st.pulls += 1;
                   st.reward_sum += static_cast<std::uint64_t>(reward);
                 },
             },
             state.kind);
  state.step += 1;
}

ArmId empirical_winner(const PolicyState& state) {
  if (const auto* ts = std::get_if<ThompsonState>(&state.kind)) {
    return argmax(ts->posteriors.size(),
                  [&](std::size_t i) { return ts->posteriors[i].mean(); });
  }
  return stats_winner(*stats_of(state));
}

}  // namespace banditlab
