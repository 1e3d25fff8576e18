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

#include "rmpsd/value_classes.hpp"

#include <algorithm>

namespace rmpsd {

std::vector<int> knapsack_max_demand(const std::vector<int>& demands, long capacity) {
  const int n = static_cast<int>(demands.size());
  if (capacity < 0) capacity = 0;
  const int cap = static_cast<int>(std::min<long>(capacity, [&] {
    long total = 0;
    for (int d : demands) total += d;
    return total;
  }()));
  // best[i][c]: max total demand from items i.. within capacity c.
  std::vector<std::vector<int>> best(n + 1, std::vector<int>(cap + 1, 0));
  for (int i = n - 1; i >= 0; --i) {
    for (int c = 0; c <= cap; ++c) {
      best[i][c] = best[i + 1][c];
      if (demands[i] <= c) {
        best[i][c] = std::max(best[i][c], demands[i] + best[i + 1][c - demands[i]]);
      }
    }
  }
  // Greedy reconstruction preferring lower indices gives the
  // lexicographically smallest maximizing subset.
  std::vector<int> chosen;
  int c = cap;
  int needed = best[0][cap];
  for (int i = 0; i < n && needed > 0; ++i) {
    if (demands[i] <= c && demands[i] + best[i + 1][c - demands[i]] >= needed) {
      chosen.push_back(i);
      c -= demands[i];
      needed -= demands[i];
    }
  }
  return chosen;
}

ValueClasses value_classes(const Instance& instance) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "value classes need related valuations");
  }
  const int n = instance.buyer_count();
  if (n == 0) fail(ErrorCode::kShapeMismatch, "value classes need at least one buyer");
  const long m = instance.item_count();

  ValueClasses vc;
  int i = 0;
  while (i < n) {
    int j = i;
    std::vector<int> cls;
    long demand = 0;
    while (j < n && instance.value(j) == instance.value(i)) {
      cls.push_back(j);
      demand += instance.demand(j);
      ++j;
    }
    vc.classes.push_back(std::move(cls));
    vc.class_value.push_back(instance.value(i));
    vc.class_demand.push_back(demand);
    vc.cumulative_demand.push_back((vc.cumulative_demand.empty() ? 0 : vc.cumulative_demand.back()) + demand);
    i = j;
  }

  vc.cutoff = -1;
  for (std::size_t k = 0; k < vc.classes.size(); ++k) {
    if (vc.cumulative_demand[k] > m) {
      vc.cutoff = static_cast<int>(k);
      break;
    }
  }
  if (vc.cutoff < 0) {
    // Dummy buyer: value below everyone, demand m + 1. Never wins.
    vc.dummy_added = true;
    vc.classes.emplace_back();
    vc.class_value.push_back(instance.value(n - 1) / Rational(2));
    vc.class_demand.push_back(m + 1);
    vc.cumulative_demand.push_back(vc.cumulative_demand.back() + m + 1);
    vc.cutoff = static_cast<int>(vc.classes.size()) - 1;
  }
  vc.distinct_values = static_cast<int>(vc.classes.size());

  // Maximal feasible sub-class of the cutoff class, then reorder it
  // a_tilde-first (keeping relative order on both sides).
  auto& cut_class = vc.classes[vc.cutoff];
  const long capacity = m - vc.demand_before(vc.cutoff);
  std::vector<int> cut_demands;
  cut_demands.reserve(cut_class.size());
  for (int b : cut_class) cut_demands.push_back(instance.demand(b));
  const std::vector<int> picked = knapsack_max_demand(cut_demands, capacity);
  std::vector<char> in_tilde(cut_class.size(), 0);
  for (int p : picked) in_tilde[p] = 1;
  std::vector<int> reordered;
  for (std::size_t t = 0; t < cut_class.size(); ++t) {
    if (in_tilde[t]) {
      reordered.push_back(cut_class[t]);
      vc.a_tilde.push_back(cut_class[t]);
    }
  }
  for (std::size_t t = 0; t < cut_class.size(); ++t) {
    if (!in_tilde[t]) reordered.push_back(cut_class[t]);
  }
  cut_class = std::move(reordered);

  vc.alpha.assign(vc.cutoff + 1, 0);
  int position = 0;
  for (int k = 0; k < vc.cutoff; ++k) {
    position += static_cast<int>(vc.classes[k].size());
    vc.alpha[k] = position;
  }
  vc.alpha[vc.cutoff] = position + static_cast<int>(vc.a_tilde.size());

  for (const auto& cls : vc.classes) {
    for (int b : cls) vc.order.push_back(b);
  }
  return vc;
}

}  // namespace rmpsd
