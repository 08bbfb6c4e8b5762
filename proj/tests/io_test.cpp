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

#include <doctest.h>

#include <sstream>
#include <string>

#include "banditlab/error.hpp"

using namespace banditlab;

namespace {

EventLog parse(const std::string& text,
               std::optional<std::size_t> arms = std::nullopt) {
  std::istringstream in(text);
  return parse_log_csv(in, arms);
}

std::string error_of(const std::string& text) {
  try {
    parse(text, 2);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("log CSV round trip") {
  Rng rng(10);
  const Environment env = make_crossing_scenario(2000, 0.1, 0.5, 700);
  const EventLog log = generate_uniform_log(env, rng);
  const std::string text = format_log_csv(log);
  CHECK(text.rfind("step,arm,reward\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(parse(text) == log);
}

TEST_CASE("log parsing tolerates CRLF and blank lines") {
  const EventLog log = parse("step,arm,reward\r\n0,1,1\r\n\r\n1,0,0\r\n");
  REQUIRE(log.size() == 2);
  CHECK(log[0] == LoggedEvent{0, ArmId{1}, 1});
  CHECK(log[1] == LoggedEvent{1, ArmId{0}, 0});
}

TEST_CASE("log parse errors identify the line") {
  CHECK(error_of("").find("empty") != std::string::npos);
  CHECK(error_of("a,b,c\n").find("line 1") != std::string::npos);
  CHECK(error_of("step,arm,reward\n0,0,1\n1,0\n").find("line 3") !=
        std::string::npos);
  CHECK(error_of("step,arm,reward\n0,0,1,4\n").find("line 2") !=
        std::string::npos);
  CHECK(error_of("step,arm,reward\n0,x,1\n").find("invalid arm") !=
        std::string::npos);
  CHECK(error_of("step,arm,reward\n0,0,2\n").find("reward") != std::string::npos);
  CHECK(error_of("step,arm,reward\n0,2,1\n").find("out of range") !=
        std::string::npos);
  CHECK(error_of("step,arm,reward\n-1,0,1\n").find("line 2") !=
        std::string::npos);
}

TEST_CASE("decision and metric CSVs") {
  const std::vector<DecisionRecord> recs{
      {5, ArmId{0}, 1}, {9, ArmId{1}, 0}, {12, ArmId{1}, 1}};
  CHECK(format_decisions_csv(recs) ==
        "step,arm,reward,cum_reward\n5,0,1,1\n9,1,0,1\n12,1,1,2\n");
  CHECK(format_reward_csv(recs) == "step,cum_reward\n5,1\n9,1\n12,2\n");
  CHECK(format_alloc_csv(traffic_allocation(recs, 2, 2)) ==
        "bucket_start,arm,share\n0,0,0.5\n0,1,0.5\n2,0,0\n2,1,1\n");
}

TEST_CASE("regret JSON carries every field") {
  RegretReport r;
  r.horizon = 1000;
  r.total_reward = 420;
  r.mu_hat_star = 0.5;
  r.g_hat_per_trial = 0.08;
  r.g_hat_total = 80;
  const std::string json = format_regret_json(r);
  for (const char* key : {"\"horizon\": 1000", "\"total_reward\": 420",
                          "\"mu_star\": null", "\"mu_hat_star\": 0.5",
                          "\"g_per_trial\": null", "\"g_hat_per_trial\": 0.08",
                          "\"g_hat_total\": 80.0"}) {
    CHECK_MESSAGE(json.find(key) != std::string::npos, key);
  }
}

TEST_CASE("sweep CSVs") {
  std::vector<SweepRow> rows(1);
  rows[0].batch_size = 10;
  rows[0].mean_reward = 2.5;
  rows[0].std_reward = 0.5;
  rows[0].runs = {{1, 100, 2}, {2, 100, 3}};
  CHECK(format_sweep_runs_csv(rows) ==
        "batch_size,run_seed,total_reward\n10,1,2\n10,2,3\n");
  CHECK(format_sweep_summary_csv(rows) ==
        "batch_size,mean_reward,std_reward\n10,2.5,0.5\n");
}

TEST_CASE("numbers are shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
