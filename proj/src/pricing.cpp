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

#include "rmpsd/pricing.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmpsd {

PriceVector tilde_prices_with_order(const Instance& instance, const Allocation& allocation,
                                    std::span<const int> winner_order) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "tilde prices need related valuations");
  }
  if (!is_monotone(instance, allocation)) {
    fail(ErrorCode::kNotMonotone, "tilde prices need a monotone allocation");
  }
  {
    std::vector<int> sorted_order(winner_order.begin(), winner_order.end());
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != allocation.winners()) {
      fail(ErrorCode::kShapeMismatch, "winner order must list exactly the winners");
    }
    for (std::size_t k = 1; k < winner_order.size(); ++k) {
      if (instance.value(winner_order[k - 1]) < instance.value(winner_order[k])) {
        fail(ErrorCode::kShapeMismatch, "winner order must be non-increasing in value");
      }
    }
  }

  const std::size_t w = winner_order.size();
  // suffix[k] = sum over t > k of (v_{t-1} - v_t) * q_{f(t)}.
  std::vector<Rational> suffix(w, Rational(0));
  for (std::size_t k = w; k-- > 1;) {
    const Rational gap = instance.value(winner_order[k - 1]) - instance.value(winner_order[k]);
    const Rational& q_best = instance.quality(allocation.best_item(winner_order[k]));
    suffix[k - 1] = suffix[k] + gap * q_best;
  }

  PriceVector prices = PriceVector::all_infinite(instance.item_count());
  for (std::size_t k = 0; k < w; ++k) {
    const int buyer = winner_order[k];
    for (int j : allocation.bundles[buyer]) {
      Rational p = instance.value(buyer) * instance.quality(j) - suffix[k];
      if (p.sign() <= 0) {
        throw std::logic_error("tilde price not positive on a monotone allocation");
      }
      prices.prices[j] = std::move(p);
    }
  }
  return prices;
}

PriceVector tilde_prices(const Instance& instance, const Allocation& allocation) {
  // Equal-value winners are ordered by best-item quality (ascending best-item
  // index). Ordering ties by buyer index instead can break winner
  // envy-freeness: with values (3,2,2), qualities (5,4,3) and bundles
  // ({1},{3},{2}), buyer-index order prices item 1 at 12 and item 2 at 8,
  // and buyer 1 then prefers item 2 to its own.
  std::vector<int> winners = allocation.winners();
  std::sort(winners.begin(), winners.end(), [&](int a, int b) {
    if (instance.value(a) != instance.value(b)) return instance.value(a) > instance.value(b);
    return allocation.best_item(a) < allocation.best_item(b);
  });
  return tilde_prices_with_order(instance, allocation, winners);
}

PrefixAllocation make_prefix_allocation(const Instance& instance, Allocation allocation) {
  validate_allocation(instance, allocation);
  const std::vector<int> winners = allocation.winners();
  const int h = static_cast<int>(winners.size());
  for (int k = 0; k < h; ++k) {
    if (winners[k] != k) {
      fail(ErrorCode::kNotAPrefix, "winners must be exactly the first buyers in canonical order");
    }
  }
  if (!instance.related() || !is_monotone(instance, allocation)) {
    fail(ErrorCode::kNotAPrefix, "a prefix allocation must be monotone (related valuations)");
  }
  return PrefixAllocation{std::move(allocation), h};
}

Outcome prefix_outcome(const Instance& instance, const PrefixAllocation& prefix) {
  const std::vector<int> winners = prefix.allocation.winners();
  if (static_cast<int>(winners.size()) != prefix.winner_count) {
    fail(ErrorCode::kNotAPrefix, "winner count does not match the allocation");
  }
  for (int k = 0; k < prefix.winner_count; ++k) {
    if (winners[k] != k) fail(ErrorCode::kNotAPrefix, "not a prefix of the canonical order");
  }
  Outcome outcome;
  outcome.allocation = prefix.allocation;
  outcome.prices = tilde_prices(instance, prefix.allocation);
  return outcome;
}

}  // namespace rmpsd
