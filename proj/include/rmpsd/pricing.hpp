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

#ifndef RMPSD_PRICING_HPP
#define RMPSD_PRICING_HPP

#include <span>

#include "rmpsd/market.hpp"

namespace rmpsd {

/// Closed-form prices for a monotone allocation. With winners re-indexed
/// 1..w in non-increasing value order, a sold item j owned by winner k costs
///
///   v_k * q_j  -  sum over t = k+1..w of (v_{t-1} - v_t) * q_{f(t)}
///
/// where f(t) is winner t's best item; unsold items are priced infinite.
/// Every finite price is strictly positive. The allocation is envy-free for
/// its winners under these prices, and fully envy-free when the winners form
/// a prefix of the canonical buyer order.
///
/// Ties among equal-value winners are broken by best-item quality (best
/// first); that order is what makes the winner guarantee hold on every
/// monotone allocation. Throws UnrelatedValuations, NotMonotone.
PriceVector tilde_prices(const Instance& instance, const Allocation& allocation);

/// Same pricing with an explicit winner order (still non-increasing in value;
/// `winner_order` must list exactly the winners). Lets callers that reorder
/// equal-value buyers price consistently with their own order.
PriceVector tilde_prices_with_order(const Instance& instance, const Allocation& allocation,
                                    std::span<const int> winner_order);

/// Monotone allocation whose winners are exactly the first `winner_count`
/// buyers in canonical order.
struct PrefixAllocation {
  Allocation allocation;
  int winner_count = 0;
};

/// Validates the prefix shape; throws NotAPrefix.
PrefixAllocation make_prefix_allocation(const Instance& instance, Allocation allocation);

/// The outcome (X, tilde prices) for a prefix; always envy-free, with revenue
/// at least v_h times the total quality held by the last winner's value class.
Outcome prefix_outcome(const Instance& instance, const PrefixAllocation& prefix);

}  // namespace rmpsd

#endif  // RMPSD_PRICING_HPP
