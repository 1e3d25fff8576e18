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

#ifndef RMPSD_ORACLE_HPP
#define RMPSD_ORACLE_HPP

#include <functional>
#include <optional>

#include "rmpsd/market.hpp"

namespace rmpsd {

/// Desk-scale guards: enumeration stops with LimitExceeded beyond these.
struct OracleLimits {
  int max_items = 8;
  int max_buyers = 5;
  long max_enumerated_allocations = 2000000;
  bool monotone_pruning = true;  // skip non-monotone allocations (related case)
};

struct PricedAllocation {
  PriceVector prices;
  Rational revenue;
  // False when the optimum is a supremum only: it requires some price to be
  // exactly zero, which a valid (strictly positive) price vector cannot reach.
  bool attained = true;
};

/// Revenue-maximal envy-free prices for one fixed allocation, by exact
/// rational linear programming over the sold items' prices:
///   (a) each winner's bundle is affordable (non-negative bundle utility),
///   (b) no winner prefers another sold item to one of its own,
///   (c) every demand-sized subset of sold items gives a non-winner
///       non-positive utility (subsets enumerated explicitly),
///   (d) prices non-negative,
///   (e) without overpricing: each price at most the owner's valuation.
/// Returns nullopt when no envy-free pricing exists for the allocation.
/// Every result carries an exactly verified optimality certificate.
std::optional<PricedAllocation> optimal_prices_for_allocation(const Instance& instance,
                                                              const Allocation& allocation,
                                                              bool allow_overpricing,
                                                              const OracleLimits& limits = {});

struct OracleResult {
  Outcome outcome;
  Rational optimum;  // 0 for the empty outcome
  bool attained = true;
  long allocations_tried = 0;
};

/// Ground-truth optimum: enumerates every allocation (winner subsets with
/// fitting demand, then all disjoint exact-size bundle assignments), prices
/// each with the LP, and keeps the maximum. The empty outcome is always a
/// candidate. Deterministic: ties keep the first maximum in enumeration
/// order.
OracleResult oracle_opt(const Instance& instance, const OracleLimits& limits = {},
                        bool allow_overpricing = true);

/// Literal envy-freeness per the definition: feasibility plus, for every
/// buyer, no demand-sized item set beats the assigned bundle. Enumerates all
/// such sets; used to validate the three-condition checker.
bool direct_envy_check(const Instance& instance, const Outcome& outcome,
                       const OracleLimits& limits = {});

/// Enumerates every allocation assigning exact-size disjoint bundles to the
/// given winner set, in lexicographic order. With monotone_only, only
/// monotone allocations are produced (related valuations). The callback
/// returns false to stop early.
void for_each_allocation(const Instance& instance, const std::vector<int>& winners,
                         bool monotone_only, const std::function<bool(const Allocation&)>& visit);

}  // namespace rmpsd

#endif  // RMPSD_ORACLE_HPP
