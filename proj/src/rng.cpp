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

#include "banditlab/rng.hpp"

#include <cmath>
#include <limits>

#include "banditlab/error.hpp"

namespace banditlab {

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw DomainError("uniform_index: empty range");
  const std::uint64_t range = n;
  // Rejection sampling on the largest multiple of `range`.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::size_t>(draw % range);
}

int Rng::bernoulli(double p) { return uniform() < p ? 1 : 0; }

double Rng::beta(double alpha, double beta) {
  std::gamma_distribution<double> ga(alpha, 1.0);
  std::gamma_distribution<double> gb(beta, 1.0);
  const double x = ga(engine_);
  const double y = gb(engine_);
  const double sum = x + y;
  // Both gammas can underflow to zero for tiny shapes.
  if (sum <= 0.0) return alpha >= beta ? 1.0 : 0.0;
  return x / sum;
}

std::uint64_t Rng::geometric(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("geometric: mean must be finite and non-negative");
  }
  if (mean == 0.0) return 0;
  std::geometric_distribution<std::uint64_t> dist(1.0 / (1.0 + mean));
  return dist(engine_);
}

}  // namespace banditlab
