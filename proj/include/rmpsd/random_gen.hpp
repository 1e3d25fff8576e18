// Copyright 2026 The rmpsd Authors
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

#ifndef RMPSD_RANDOM_GEN_HPP
#define RMPSD_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "rmpsd/market.hpp"

namespace rmpsd {

enum class RandomFamily {
  kRelatedUniform,
  kUnrelatedUniform,
  kProperForced,  // related, then useless buyers removed
};

struct RandomParams {
  int buyers = 3;
  int items = 5;
  long max_value = 6;
  long max_quality = 6;
  long max_demand = 3;
};

/// Deterministic per seed and identical across platforms (the engine is the
/// standardized mt19937_64; bounded draws avoid library distributions).
InstanceData random_instance(RandomFamily family, const RandomParams& params, std::uint64_t seed);

/// Small deterministic helper shared by the generators and tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rmpsd

#endif  // RMPSD_RANDOM_GEN_HPP
