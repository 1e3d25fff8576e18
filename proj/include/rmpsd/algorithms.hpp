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

#ifndef RMPSD_ALGORITHMS_HPP
#define RMPSD_ALGORITHMS_HPP

#include "rmpsd/market.hpp"

namespace rmpsd {

/// 2-approximation for proper related instances (still envy-free, without
/// the ratio guarantee, on improper ones). Evaluates the best consecutive
/// block assignment for every eligible winner-count prefix under the
/// a-tilde-first order, plus every full-class prefix extended by one buyer
/// of the next class, and returns the best priced outcome. O(n^3 m).
/// Throws UnrelatedValuations.
Outcome prefix_algorithm(const Instance& instance);

struct BestResult {
  Outcome outcome;
  int chosen_buyer = -1;       // canonical index; -1 when nothing is sold
  Rational rate;               // best per-item rate R among fitting buyers
  std::vector<int> bundle;     // the chosen buyer's top items
};

/// m-approximation for related and unrelated valuations: sell the single
/// buyer with the best per-item rate its favourite bundle at the uniform
/// per-item rate. Buyers whose demand exceeds the item count are skipped;
/// throws NoBuyerFits when no buyer fits. A zero best rate sells nothing
/// (prices must stay strictly positive).
BestResult best_algorithm(const Instance& instance);

}  // namespace rmpsd

#endif  // RMPSD_ALGORITHMS_HPP
