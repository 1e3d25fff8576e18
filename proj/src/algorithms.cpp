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

#include "rmpsd/algorithms.hpp"

#include <algorithm>
#include <optional>

#include "rmpsd/prefix_dp.hpp"
#include "rmpsd/value_classes.hpp"

namespace rmpsd {

Outcome prefix_algorithm(const Instance& instance) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "the prefix algorithm needs related valuations");
  }
  if (instance.buyer_count() == 0) return empty_outcome(instance);

  const ValueClasses vc = value_classes(instance);
  const long m = instance.item_count();

  std::optional<PrefixResult> best;
  auto consider = [&](PrefixResult candidate) {
    if (!best || candidate.revenue > best->revenue) best = std::move(candidate);
  };

  // Every prefix of the a-tilde-first order that is known to fit.
  for (int h = 1; h <= vc.alpha[vc.cutoff]; ++h) {
    consider(compute_prefix(instance, vc.order, h));
  }

  // Every full prefix of classes below some class, extended by exactly one
  // buyer of that class. The candidate buyer is passed explicitly instead of
  // reordering anything globally.
  int class_start = 0;
  for (int cls = 0; cls <= vc.cutoff && cls < static_cast<int>(vc.classes.size()); ++cls) {
    const long base_demand = vc.demand_before(cls);
    for (int buyer : vc.classes[cls]) {
      if (base_demand + instance.demand(buyer) > m) continue;
      std::vector<int> candidate(vc.order.begin(), vc.order.begin() + class_start);
      candidate.push_back(buyer);
      consider(compute_prefix(instance, candidate, class_start + 1));
    }
    class_start += static_cast<int>(vc.classes[cls].size());
  }

  if (!best) return empty_outcome(instance);
  Outcome outcome;
  outcome.allocation = std::move(best->allocation);
  outcome.prices = std::move(best->prices);
  return outcome;
}

BestResult best_algorithm(const Instance& instance) {
  const int n = instance.buyer_count();
  const int m = instance.item_count();

  BestResult result;
  std::vector<int> best_items;
  for (int i = 0; i < n; ++i) {
    const int d = instance.demand(i);
    if (d > m) continue;
    // Top-d items by valuation, ties toward lower item index.
    std::vector<int> idx(m);
    for (int j = 0; j < m; ++j) idx[j] = j;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return instance.valuation(i, a) > instance.valuation(i, b);
    });
    Rational total = 0;
    for (int t = 0; t < d; ++t) total += instance.valuation(i, idx[t]);
    Rational rate = total / Rational(d);
    if (result.chosen_buyer < 0 || rate > result.rate) {
      result.chosen_buyer = i;
      result.rate = std::move(rate);
      best_items.assign(idx.begin(), idx.begin() + d);
    }
  }
  if (result.chosen_buyer < 0) {
    fail(ErrorCode::kNoBuyerFits, "every buyer demands more items than exist");
  }
  std::sort(best_items.begin(), best_items.end());
  result.bundle = best_items;

  result.outcome = empty_outcome(instance);
  if (result.rate.sign() > 0) {
    result.outcome.allocation.bundles[result.chosen_buyer] = best_items;
    for (int j : best_items) result.outcome.prices.prices[j] = result.rate;
  } else {
    result.chosen_buyer = -1;  // nothing sellable at a positive price
    result.bundle.clear();
  }
  return result;
}

}  // namespace rmpsd
