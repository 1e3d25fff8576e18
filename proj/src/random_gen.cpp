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

#include "rmpsd/random_gen.hpp"

#include <algorithm>

namespace rmpsd {

InstanceData random_instance(RandomFamily family, const RandomParams& params, std::uint64_t seed) {
  Rng rng(seed);
  InstanceData data;
  const int n = params.buyers;
  const int m = params.items;
  // Demands are capped at the item count: the highest-value buyer then never
  // violates properness, so the proper-forced family stays non-empty.
  const long demand_cap = std::max<long>(1, std::min<long>(params.max_demand, m));

  if (family == RandomFamily::kUnrelatedUniform) {
    data.related = false;
    data.valuations.resize(n);
    for (int i = 0; i < n; ++i) {
      data.demands.push_back(static_cast<int>(rng.uniform(1, demand_cap)));
      for (int j = 0; j < m; ++j) {
        data.valuations[i].push_back(Rational(rng.uniform(0, params.max_value)));
      }
    }
    return data;
  }

  data.related = true;
  for (int i = 0; i < n; ++i) {
    data.values.push_back(Rational(rng.uniform(1, params.max_value)));
    data.demands.push_back(static_cast<int>(rng.uniform(1, demand_cap)));
  }
  for (int j = 0; j < m; ++j) {
    data.qualities.push_back(Rational(rng.uniform(1, params.max_quality)));
  }
  if (family == RandomFamily::kProperForced) {
    return properize(Instance(data)).instance.data();
  }
  return data;
}

}  // namespace rmpsd
