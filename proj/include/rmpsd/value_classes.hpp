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

#ifndef RMPSD_VALUE_CLASSES_HPP
#define RMPSD_VALUE_CLASSES_HPP

#include "rmpsd/market.hpp"

namespace rmpsd {

/// Buyers grouped by distinct value (non-increasing), with the cutoff class
/// and its maximal feasible sub-class.
///
/// Class indices are 0-based here. cutoff is the first class whose cumulative
/// demand exceeds the item count; when no real class does, an internal dummy
/// class (value half the smallest, demand m+1) is appended so the cutoff is
/// always defined — the dummy never wins and never appears in `order` or in
/// the class buyer lists.
///
/// a_tilde is the subset of the cutoff class with maximum total demand that
/// still fits after all earlier classes (subset-sum; lexicographically
/// smallest among maximizers). Buyers of the cutoff class are reordered
/// a_tilde-first in `classes` and `order`.
///
/// alpha[k] is the number of buyers of classes 0..k that the Prefix algorithm
/// may use: full classes below the cutoff, only a_tilde at the cutoff. Every
/// prefix of `order` up to alpha[cutoff] has total demand at most m.
struct ValueClasses {
  std::vector<std::vector<int>> classes;  // canonical buyer ids; dummy class empty
  std::vector<Rational> class_value;
  std::vector<long> class_demand;
  std::vector<long> cumulative_demand;
  int distinct_values = 0;  // including the dummy class when added
  int cutoff = 0;           // 0-based delta*
  bool dummy_added = false;
  std::vector<int> a_tilde;
  std::vector<int> alpha;   // size cutoff + 1
  std::vector<int> order;   // all real buyers, classes concatenated

  long demand_before(int cls) const { return cls == 0 ? 0 : cumulative_demand[cls - 1]; }
};

/// Throws UnrelatedValuations; requires at least one buyer.
ValueClasses value_classes(const Instance& instance);

/// Maximal subset-sum: the lexicographically smallest subset of `demands`
/// (by index set) whose total is maximum among totals <= capacity.
std::vector<int> knapsack_max_demand(const std::vector<int>& demands, long capacity);

}  // namespace rmpsd

#endif  // RMPSD_VALUE_CLASSES_HPP
