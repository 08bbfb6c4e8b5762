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

#include "banditlab/simulation.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

#include "banditlab/error.hpp"
#include "banditlab/io.hpp"
#include "oracles.hpp"

using namespace banditlab;

TEST_CASE("prob_at") {
  const std::array p{0.3};
  const Environment flat = make_stationary(p, 100);
  CHECK(flat.prob_at(ArmId{0}, 50) == 0.3);

  const Environment steps({{ScheduleSegment{0, 50, 0.1},
                            ScheduleSegment{50, 100, 0.2}}},
                          100);
  CHECK(steps.prob_at(ArmId{0}, 49) == 0.1);
  CHECK(steps.prob_at(ArmId{0}, 50) == 0.2);
  CHECK(steps.prob_at(ArmId{0}, 99) == 0.2);
  CHECK_THROWS_AS(steps.prob_at(ArmId{0}, 100), DomainError);
  CHECK_THROWS_AS(steps.prob_at(ArmId{1}, 0), DomainError);
}

TEST_CASE("environment validation") {
  CHECK_THROWS_AS(Environment({}, 10), ConfigError);
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 10, 0.1}}}, 0), ConfigError);
  // gap
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 4, 0.1},
                                ScheduleSegment{5, 10, 0.1}}},
                              10),
                  ConfigError);
  // overlap
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 6, 0.1},
                                ScheduleSegment{5, 10, 0.1}}},
                              10),
                  ConfigError);
  // short of horizon
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 9, 0.1}}}, 10), ConfigError);
  // empty segment
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 0, 0.1},
                                ScheduleSegment{0, 10, 0.1}}},
                              10),
                  ConfigError);
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 10, 1.5}}}, 10), ConfigError);
  CHECK_THROWS_AS(Environment({{ScheduleSegment{0, 10, -0.1}}}, 10),
                  ConfigError);
}

TEST_CASE("sample_reward") {
  const std::array p{0.0, 1.0, 0.5};
  const Environment env = make_stationary(p, 100000);
  Rng rng(17);
  std::uint64_t ones = 0;
  for (std::uint64_t t = 0; t < 100000; ++t) {
    CHECK(sample_reward(env, ArmId{0}, t % 100, rng) == 0);
    CHECK(sample_reward(env, ArmId{1}, t % 100, rng) == 1);
    ones += static_cast<std::uint64_t>(sample_reward(env, ArmId{2}, t, rng));
  }
  CHECK(std::abs(static_cast<double>(ones) / 100000 - 0.5) <= 0.005);
  CHECK_THROWS_AS(sample_reward(env, ArmId{0}, 100000, rng), DomainError);
}

TEST_CASE("crossing scenario") {
  SUBCASE("midpoint crossing") {
    const Environment env = make_crossing_scenario(100, 0.2, 0.4, 50);
    CHECK(env.num_arms() == 2);
    CHECK(env.prob_at(ArmId{0}, 0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(env.prob_at(ArmId{1}, 49) == 0.4);
    CHECK(env.prob_at(ArmId{1}, 50) == 0.2);
    CHECK(env.mean_prob(ArmId{0}) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(env.mean_prob(ArmId{1}) == doctest::Approx(0.3).epsilon(1e-15));
  }
  SUBCASE("weighted average") {
    const Environment env = make_crossing_scenario(1000, 0.01, 0.03, 300);
    CHECK(env.prob_at(ArmId{0}, 999) == doctest::Approx(0.016).epsilon(1e-14));
    CHECK(env.mean_prob(ArmId{1}) == doctest::Approx(0.016).epsilon(1e-14));
  }
  SUBCASE("any midpoint is the average") {
    for (double lo : {0.0, 0.05, 0.3}) {
      const Environment env = make_crossing_scenario(200, lo, lo + 0.1, 100);
      CHECK(env.prob_at(ArmId{0}, 0) ==
            doctest::Approx(lo + 0.05).epsilon(1e-14));
    }
  }
  SUBCASE("rejects invalid parameters") {
    CHECK_THROWS_AS(make_crossing_scenario(100, 0.2, 0.4, 0), ConfigError);
    CHECK_THROWS_AS(make_crossing_scenario(100, 0.2, 0.4, 100), ConfigError);
    CHECK_THROWS_AS(make_crossing_scenario(100, 0.4, 0.2, 50), ConfigError);
    CHECK_THROWS_AS(make_crossing_scenario(100, 0.2, 1.2, 50), ConfigError);
  }
}

TEST_CASE("uniform log generation") {
  SUBCASE("uniform arm counts (chi-square, alpha = 0.001)") {
    const std::array p{0.1, 0.2, 0.3, 0.4};
    const Environment env = make_stationary(p, 100000);
    Rng rng(99);
    const EventLog log = generate_uniform_log(env, rng);
    REQUIRE(log.size() == 100000);
    std::array<double, 4> counts{};
    for (std::size_t i = 0; i < log.size(); ++i) {
      CHECK(log[i].step == i);
      counts[log[i].arm.value] += 1;
    }
    const double expected = 25000.0;
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
    // chi-square 0.999 quantile, 3 degrees of freedom.
    CHECK(chi2 < 16.266);
  }
  SUBCASE("two arms split 50% +- 0.5%") {
    const std::array p{0.5, 0.5};
    Rng rng(3);
    const EventLog log = generate_uniform_log(make_stationary(p, 100000), rng);
    std::size_t arm0 = 0;
    for (const auto& e : log) arm0 += e.arm.value == 0 ? 1 : 0;
    CHECK(std::abs(static_cast<double>(arm0) / 100000 - 0.5) <= 0.005);
  }
  SUBCASE("all-zero environment") {
    const std::array p{0.0, 0.0};
    Rng rng(4);
    for (const auto& e : generate_uniform_log(make_stationary(p, 1000), rng)) {
      CHECK(e.reward == 0);
    }
  }
  SUBCASE("deterministic per seed") {
    const Environment env = make_crossing_scenario(5000, 0.1, 0.3, 2000);
    Rng a(123), b(123), c(124);
    const std::string la = format_log_csv(generate_uniform_log(env, a));
    CHECK(la == format_log_csv(generate_uniform_log(env, b)));
    CHECK(la != format_log_csv(generate_uniform_log(env, c)));
  }
}

TEST_CASE("crossing log: cumulative CVR curves cross and converge") {
  const std::uint64_t horizon = 200000;
  const Environment env = make_crossing_scenario(horizon, 0.2, 0.4, 100000);
  Rng rng(5);
  const EventLog log = generate_uniform_log(env, rng);
  std::array<double, 2> wins{}, trials{};
  bool v2_ahead_early = false;
  for (const auto& e : log) {
    wins[e.arm.value] += e.reward;
    trials[e.arm.value] += 1;
    if (e.step == horizon / 4) {
      v2_ahead_early = wins[1] / trials[1] > wins[0] / trials[0];
    }
  }
  CHECK(v2_ahead_early);
  const double cvr0 = wins[0] / trials[0];
  const double cvr1 = wins[1] / trials[1];
  const double pooled = (wins[0] + wins[1]) / (trials[0] + trials[1]);
  const double se = std::sqrt(pooled * (1 - pooled) *
                              (1 / trials[0] + 1 / trials[1]));
  CHECK(std::abs(cvr0 - cvr1) <= 3 * se);
}

TEST_CASE("overall CVR equality at horizon 1e6") {
  const std::uint64_t horizon = 1000000;
  const Environment env = make_crossing_scenario(horizon, 0.02, 0.04, 300000);
  Rng rng(6);
  std::array<double, 2> wins{}, trials{};
  for (const auto& e : generate_uniform_log(env, rng)) {
    wins[e.arm.value] += e.reward;
    trials[e.arm.value] += 1;
  }
  const double pooled = (wins[0] + wins[1]) / (trials[0] + trials[1]);
  const double se = std::sqrt(pooled * (1 - pooled) *
                              (1 / trials[0] + 1 / trials[1]));
  CHECK(std::abs(wins[0] / trials[0] - wins[1] / trials[1]) <= 3 * se);
}
