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

// banditlab: seeded bandit experiments from a JSON config.
//
//   banditlab simulate    --config cfg.json [--seed N] [--out DIR]
//   banditlab replay      --config cfg.json [--seed N] [--out DIR]
//   banditlab batch-sweep --config cfg.json [--seed N] [--out DIR]
//   banditlab gap-sweep   --config cfg.json [--seed N] [--out DIR]
//
// Exit codes: 0 success, 2 config error, 3 data error, 1 anything else.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "banditlab/banditlab.h"

namespace {

struct ExperimentDeleter {
  void operator()(bl_experiment* e) const { bl_experiment_destroy(e); }
};
using ExperimentPtr = std::unique_ptr<bl_experiment, ExperimentDeleter>;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

int exit_code(bl_status status) {
  switch (status) {
    case BL_OK:
      return 0;
    case BL_ERR_CONFIG:
      return 2;
    case BL_ERR_DATA:
      return 3;
    default:
      return 1;
  }
}

int report(bl_status status) {
  if (status != BL_OK) std::cerr << "banditlab: " << bl_last_error() << "\n";
  return exit_code(status);
}

int run(const std::string& command, const Options& opts) {
  bl_experiment* raw = nullptr;
  if (bl_status s = bl_experiment_load(opts.config.c_str(), &raw); s != BL_OK) {
    return report(s);
  }
  ExperimentPtr experiment(raw);
  if (opts.seed) bl_experiment_set_seed(experiment.get(), *opts.seed);
  if (opts.out) {
    if (bl_status s = bl_experiment_set_output_dir(experiment.get(),
                                                   opts.out->c_str());
        s != BL_OK) {
      return report(s);
    }
  }
  return report(bl_experiment_run(experiment.get(), command.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-armed bandit experiments: simulation, replay "
               "evaluation, batch and gap sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bl_version()));

  Options opts;
  const char* commands[][2] = {
      {"simulate", "Generate a uniformly logged event stream"},
      {"replay", "Replay a policy over a log and emit metrics"},
      {"batch-sweep", "Compare batch sizes of the batch-update engine"},
      {"gap-sweep", "Replay all policies over stationary logs per reward gap"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", opts.config, "JSON experiment config")
        ->required();
    sub->add_option("--seed", opts.seed, "Override base_seed");
    sub->add_option("--out", opts.out, "Override output_dir");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return run(app.get_subcommands().front()->get_name(), opts);
}
