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

#ifndef RMPSD_MARKET_HPP
#define RMPSD_MARKET_HPP

#include <optional>
#include <vector>

#include "rmpsd/errors.hpp"
#include "rmpsd/rational.hpp"

namespace rmpsd {

/// Market data exactly as supplied by the caller (file order), prior to any
/// canonical sorting. With related valuations buyer i values item j at
/// values[i] * qualities[j]; with unrelated valuations the full matrix is
/// given. Demands are sharp: a buyer takes exactly demands[i] items or none.
struct InstanceData {
  bool related = true;
  std::vector<int> demands;
  std::vector<Rational> values;     // related: one per buyer, > 0
  std::vector<Rational> qualities;  // related: one per item, > 0
  std::vector<std::vector<Rational>> valuations;  // unrelated: n rows of m, >= 0

  int buyer_count() const { return static_cast<int>(demands.size()); }
  int item_count() const {
    if (related) return static_cast<int>(qualities.size());
    return valuations.empty() ? 0 : static_cast<int>(valuations.front().size());
  }
  bool operator==(const InstanceData&) const = default;
};

/// Immutable market instance in canonical order: buyers sorted by value
/// non-increasing and items by quality non-increasing (related case), ties
/// kept stable by input index. The input-order permutations are retained so
/// results can be reported back in file order. Unrelated instances keep the
/// input order unchanged.
///
/// All accessors below use canonical indices (0-based).
class Instance {
 public:
  /// Validates and sorts. Throws NonPositiveValue, DemandZero, ShapeMismatch.
  explicit Instance(InstanceData data);

  /// Empty market (no buyers, no items).
  Instance() : Instance(InstanceData{}) {}

  int buyer_count() const { return static_cast<int>(buyer_order_.size()); }
  int item_count() const { return static_cast<int>(item_order_.size()); }
  bool related() const { return data_.related; }

  int demand(int buyer) const { return data_.demands[buyer_order_[buyer]]; }
  const Rational& value(int buyer) const;      // related only
  const Rational& quality(int item) const;     // related only
  Rational valuation(int buyer, int item) const;

  int original_buyer(int buyer) const { return buyer_order_[buyer]; }
  int original_item(int item) const { return item_order_[item]; }
  int canonical_buyer(int input_index) const { return buyer_rank_[input_index]; }
  int canonical_item(int input_index) const { return item_rank_[input_index]; }

  /// The untouched input-order data; round-trips exactly through files.
  const InstanceData& data() const { return data_; }

 private:
  InstanceData data_;
  std::vector<int> buyer_order_;  // canonical position -> input index
  std::vector<int> item_order_;
  std::vector<int> buyer_rank_;   // input index -> canonical position
  std::vector<int> item_rank_;
};

/// Canonical constructor name matching the operation vocabulary.
inline Instance canonicalize(InstanceData data) { return Instance(std::move(data)); }

/// Per-buyer bundles of canonical item indices (each sorted ascending).
/// Valid allocations have |bundle| in {0, demand} and pairwise disjoint
/// bundles; `validate_allocation` enforces this.
struct Allocation {
  std::vector<std::vector<int>> bundles;

  bool is_winner(int buyer) const { return !bundles[buyer].empty(); }
  std::vector<int> winners() const;
  std::vector<int> sold_items() const;  // M(X), ascending
  int total_assigned() const;
  /// Owner b(j) of an item, or -1 when unsold.
  int owner(int item) const;
  /// Best-quality item f(i) in the buyer's bundle (smallest canonical index).
  int best_item(int buyer) const;
  /// Maximum-index (lowest-value) winner, or -1 when nobody wins.
  int last_winner() const;
};

void validate_allocation(const Instance& instance, const Allocation& allocation);

/// Per-item price: a positive rational, or empty = unsold / infinite.
struct PriceVector {
  std::vector<std::optional<Rational>> prices;

  bool finite(int item) const { return prices[item].has_value(); }
  static PriceVector all_infinite(int item_count) {
    PriceVector p;
    p.prices.assign(item_count, std::nullopt);
    return p;
  }
};

struct Outcome {
  Allocation allocation;
  PriceVector prices;
};

inline Outcome empty_outcome(const Instance& instance) {
  Outcome o;
  o.allocation.bundles.assign(instance.buyer_count(), {});
  o.prices = PriceVector::all_infinite(instance.item_count());
  return o;
}

/// Utilities u_ij = v_ij - p_j and u_i = sum over the bundle. An empty
/// optional stands for -infinity (an infinitely priced item).
struct UtilityTable {
  std::vector<std::optional<Rational>> buyer;            // u_i; 0 for losers
  std::vector<std::vector<std::optional<Rational>>> pair; // u_ij, n x m
};

UtilityTable utilities(const Instance& instance, const Outcome& outcome);

/// Sum of the prices of sold items; 0 for the empty allocation.
/// Throws SoldItemPricedInfinite if a sold item has no finite price.
Rational revenue(const Outcome& outcome);

/// True iff every winner with a strictly higher value holds only items of
/// quality at least the best quality held by any lower-value winner.
/// Related valuations only (throws UnrelatedValuations).
bool is_monotone(const Instance& instance, const Allocation& allocation);

/// Best achievable bundle for one buyer at the given prices: the sum of the
/// demand-many largest utilities among finitely priced items, together with
/// an achieving item set. Empty utility = -infinity (too few finite prices).
struct BundleUtility {
  std::optional<Rational> utility;
  std::vector<int> items;
};

BundleUtility best_bundle_utility(const Instance& instance, const PriceVector& prices, int buyer);

/// Verdict of the envy-freeness checker. On violation exactly one witness is
/// populated; replaying it through the utility definitions certifies the
/// violation numerically.
struct EnvyReport {
  enum class Kind {
    kEnvyFree,
    kInfeasibleBuyer,      // u_i < 0
    kItemSwap,             // winner i prefers item other_item to its item
    kLoserPositiveBundle,  // non-winner i gets positive utility from bundle
  };

  Kind kind = Kind::kEnvyFree;
  int buyer = -1;
  int item = -1;
  int other_item = -1;
  std::vector<int> bundle;

  bool envy_free() const { return kind == Kind::kEnvyFree; }
};

/// Three-condition envy-freeness check: (1) every buyer has non-negative
/// utility, (2) no winner prefers an item outside its bundle to one inside,
/// (3) no non-winner can assemble a positive-utility bundle of its demand
/// size. Scans conditions in that order, buyers in canonical order, and
/// reports the first violation found.
EnvyReport check_envy_free(const Instance& instance, const Outcome& outcome);

struct ProperReport {
  bool proper = true;
  std::vector<int> violators;  // canonical buyer indices
};

/// A buyer violates properness when its demand plus the demands of all
/// strictly-higher-value buyers with weakly smaller demands exceeds the item
/// count; such a buyer can never win. Related valuations only.
ProperReport is_proper(const Instance& instance);

struct ProperizeResult {
  Instance instance;
  std::vector<int> removed;  // canonical indices in the input instance
};

/// Removes exactly the violators identified on the full instance (one pass);
/// the result is proper and optimal envy-free revenue is unchanged.
ProperizeResult properize(const Instance& instance);

}  // namespace rmpsd

#endif  // RMPSD_MARKET_HPP
