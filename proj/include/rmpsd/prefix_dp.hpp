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

#ifndef RMPSD_PREFIX_DP_HPP
#define RMPSD_PREFIX_DP_HPP

#include <span>

#include "rmpsd/market.hpp"

namespace rmpsd {

struct PrefixResult {
  Allocation allocation;
  PriceVector prices;
  Rational revenue;
  std::vector<int> winners;  // the first h buyers of the given order
};

/// Revenue-maximal assignment for the fixed winner set order[0..h): each
/// winner receives a consecutive block of items, blocks in winner order, and
/// the whole outcome is priced with the closed-form prices.
///
/// Writing t_i = v_i - (v_{i-1} - v_i) * (d_1 + ... + d_{i-1}) (t_1 = v_1)
/// and s_i(j) = t_i q_j + v_i (q_{j+1} + ... + q_{j+d_i-1}) for the revenue
/// contribution of winner i starting its block at item j, the recurrence
///
///   r_i(j) = max(r_i(j-1), r_{i-1}(j - d_{i-1}) + s_i(j))
///
/// maximizes the total in O(m h) with item-quality prefix sums; the block
/// starts are recovered from a full choice table. The result equals the
/// maximum revenue over all monotone allocations winning exactly order[0..h).
///
/// `order` must be non-increasing in value; the first h demands must fit
/// (throws PrefixDoesNotFit), related valuations only.
PrefixResult compute_prefix(const Instance& instance, std::span<const int> order, int h);

}  // namespace rmpsd

#endif  // RMPSD_PREFIX_DP_HPP
