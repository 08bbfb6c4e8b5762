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

#ifndef BANDITLAB_RNG_HPP_
#define BANDITLAB_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace banditlab {

// Explicitly seeded random stream. Every stochastic operation in the library
// takes one of these by reference; nothing keeps hidden generator state.
//
// uniform() and uniform_index() are computed directly from the raw 64-bit
// engine output so that streams are identical across standard libraries.
// beta() and geometric() go through std::gamma_distribution and are only
// reproducible within one standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent sub-stream for (seed, stream) pairs, e.g. one for the log and
  // one per policy in a single replication.
  static Rng derive(std::uint64_t seed, std::uint64_t stream);

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform();

  // Uniform integer in [0, n). Requires n >= 1.
  std::size_t uniform_index(std::size_t n);

  // 1 with probability p, else 0. p <= 0 never succeeds, p >= 1 always does.
  int bernoulli(double p);

  // Draw from Beta(alpha, beta) as the ratio of two gamma variates.
  double beta(double alpha, double beta);

  // Number of failures before the first success when the success
  // probability is 1 / (1 + mean); the expectation is `mean`.
  std::uint64_t geometric(double mean);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace banditlab

#endif  // BANDITLAB_RNG_HPP_
