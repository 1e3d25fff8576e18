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

#include "rmpsd/market.hpp"

#include <algorithm>
#include <numeric>

namespace rmpsd {

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  const int n = data_.buyer_count();
  if (data_.related) {
    if (static_cast<int>(data_.values.size()) != n) {
      fail(ErrorCode::kShapeMismatch, "values and demands disagree on buyer count");
    }
    if (!data_.valuations.empty()) {
      fail(ErrorCode::kShapeMismatch, "related instance carries a valuation matrix");
    }
    for (const Rational& v : data_.values) {
      if (v.sign() <= 0) fail(ErrorCode::kNonPositiveValue, "buyer value must be positive");
    }
    for (const Rational& q : data_.qualities) {
      if (q.sign() <= 0) fail(ErrorCode::kNonPositiveValue, "item quality must be positive");
    }
  } else {
    if (static_cast<int>(data_.valuations.size()) != n) {
      fail(ErrorCode::kShapeMismatch, "valuation matrix row count differs from buyer count");
    }
    const int m = data_.item_count();
    for (const auto& row : data_.valuations) {
      if (static_cast<int>(row.size()) != m) {
        fail(ErrorCode::kShapeMismatch, "ragged valuation matrix");
      }
      for (const Rational& v : row) {
        if (v.sign() < 0) fail(ErrorCode::kNonPositiveValue, "valuations must be non-negative");
      }
    }
    if (!data_.values.empty() || !data_.qualities.empty()) {
      fail(ErrorCode::kShapeMismatch, "unrelated instance carries values/qualities");
    }
  }
  for (int d : data_.demands) {
    if (d <= 0) fail(ErrorCode::kDemandZero, "demands must be at least 1");
  }

  const int m = data_.item_count();
  buyer_order_.resize(n);
  item_order_.resize(m);
  std::iota(buyer_order_.begin(), buyer_order_.end(), 0);
  std::iota(item_order_.begin(), item_order_.end(), 0);
  if (data_.related) {
    std::stable_sort(buyer_order_.begin(), buyer_order_.end(),
                     [&](int a, int b) { return data_.values[a] > data_.values[b]; });
    std::stable_sort(item_order_.begin(), item_order_.end(),
                     [&](int a, int b) { return data_.qualities[a] > data_.qualities[b]; });
  }
  buyer_rank_.resize(n);
  item_rank_.resize(m);
  for (int i = 0; i < n; ++i) buyer_rank_[buyer_order_[i]] = i;
  for (int j = 0; j < m; ++j) item_rank_[item_order_[j]] = j;
}

const Rational& Instance::value(int buyer) const {
  if (!data_.related) fail(ErrorCode::kUnrelatedValuations, "scalar values need related valuations");
  return data_.values[buyer_order_[buyer]];
}

const Rational& Instance::quality(int item) const {
  if (!data_.related) fail(ErrorCode::kUnrelatedValuations, "qualities need related valuations");
  return data_.qualities[item_order_[item]];
}

Rational Instance::valuation(int buyer, int item) const {
  if (data_.related) {
    return data_.values[buyer_order_[buyer]] * data_.qualities[item_order_[item]];
  }
  return data_.valuations[buyer_order_[buyer]][item_order_[item]];
}

std::vector<int> Allocation::winners() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(bundles.size()); ++i) {
    if (!bundles[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> Allocation::sold_items() const {
  std::vector<int> out;
  for (const auto& b : bundles) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Allocation::total_assigned() const {
  int total = 0;
  for (const auto& b : bundles) total += static_cast<int>(b.size());
  return total;
}

int Allocation::owner(int item) const {
  for (int i = 0; i < static_cast<int>(bundles.size()); ++i) {
    if (std::find(bundles[i].begin(), bundles[i].end(), item) != bundles[i].end()) return i;
  }
  return -1;
}

int Allocation::best_item(int buyer) const {
  const auto& b = bundles[buyer];
  return b.empty() ? -1 : *std::min_element(b.begin(), b.end());
}

int Allocation::last_winner() const {
  for (int i = static_cast<int>(bundles.size()) - 1; i >= 0; --i) {
    if (!bundles[i].empty()) return i;
  }
  return -1;
}

void validate_allocation(const Instance& instance, const Allocation& allocation) {
  const int n = instance.buyer_count();
  const int m = instance.item_count();
  if (static_cast<int>(allocation.bundles.size()) != n) {
    fail(ErrorCode::kShapeMismatch, "allocation buyer count differs from instance");
  }
  std::vector<char> seen(m, 0);
  for (int i = 0; i < n; ++i) {
    const auto& b = allocation.bundles[i];
    if (!b.empty() && static_cast<int>(b.size()) != instance.demand(i)) {
      fail(ErrorCode::kShapeMismatch, "bundle size must be 0 or the buyer's demand");
    }
    for (int j : b) {
      if (j < 0 || j >= m) fail(ErrorCode::kShapeMismatch, "item index out of range");
      if (seen[j]) fail(ErrorCode::kShapeMismatch, "item assigned twice");
      seen[j] = 1;
    }
  }
}

namespace {

void validate_outcome_shape(const Instance& instance, const Outcome& outcome) {
  validate_allocation(instance, outcome.allocation);
  if (static_cast<int>(outcome.prices.prices.size()) != instance.item_count()) {
    fail(ErrorCode::kShapeMismatch, "price vector length differs from item count");
  }
}

void require_sold_items_priced(const Instance& instance, const Outcome& outcome) {
  for (int i = 0; i < instance.buyer_count(); ++i) {
    for (int j : outcome.allocation.bundles[i]) {
      if (!outcome.prices.finite(j)) {
        fail(ErrorCode::kSoldItemPricedInfinite, "sold item has infinite price");
      }
    }
  }
}

}  // namespace

UtilityTable utilities(const Instance& instance, const Outcome& outcome) {
  validate_outcome_shape(instance, outcome);
  const int n = instance.buyer_count();
  const int m = instance.item_count();
  UtilityTable table;
  table.pair.assign(n, std::vector<std::optional<Rational>>(m));
  table.buyer.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (outcome.prices.finite(j)) {
        table.pair[i][j] = instance.valuation(i, j) - *outcome.prices.prices[j];
      }
    }
    if (outcome.allocation.bundles[i].empty()) continue;
    Rational sum = 0;
    bool finite = true;
    for (int j : outcome.allocation.bundles[i]) {
      if (!table.pair[i][j]) {
        finite = false;
        break;
      }
      sum += *table.pair[i][j];
    }
    if (finite) {
      table.buyer[i] = sum;
    } else {
      table.buyer[i] = std::nullopt;
    }
  }
  return table;
}

Rational revenue(const Outcome& outcome) {
  Rational total = 0;
  for (const auto& bundle : outcome.allocation.bundles) {
    for (int j : bundle) {
      if (!outcome.prices.finite(j)) {
        fail(ErrorCode::kSoldItemPricedInfinite, "sold item has infinite price");
      }
      total += *outcome.prices.prices[j];
    }
  }
  return total;
}

bool is_monotone(const Instance& instance, const Allocation& allocation) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "monotonicity needs related valuations");
  }
  validate_allocation(instance, allocation);
  const std::vector<int> winners = allocation.winners();
  // Winners come in non-increasing value order. Walk equal-value groups and
  // compare each group's best quality against the minimum quality held by
  // strictly-higher-value winners.
  std::optional<Rational> higher_min;
  std::size_t a = 0;
  while (a < winners.size()) {
    std::size_t b = a;
    while (b < winners.size() && instance.value(winners[b]) == instance.value(winners[a])) ++b;
    if (higher_min) {
      for (std::size_t t = a; t < b; ++t) {
        if (instance.quality(allocation.best_item(winners[t])) > *higher_min) return false;
      }
    }
    for (std::size_t t = a; t < b; ++t) {
      for (int j : allocation.bundles[winners[t]]) {
        const Rational& q = instance.quality(j);
        if (!higher_min || q < *higher_min) higher_min = q;
      }
    }
    a = b;
  }
  return true;
}

BundleUtility best_bundle_utility(const Instance& instance, const PriceVector& prices, int buyer) {
  const int m = instance.item_count();
  if (static_cast<int>(prices.prices.size()) != m) {
    fail(ErrorCode::kShapeMismatch, "price vector length differs from item count");
  }
  const int d = instance.demand(buyer);
  std::vector<std::pair<Rational, int>> finite;  // (u_ij, item)
  finite.reserve(m);
  for (int j = 0; j < m; ++j) {
    if (prices.finite(j)) {
      finite.emplace_back(instance.valuation(buyer, j) - *prices.prices[j], j);
    }
  }
  BundleUtility result;
  if (static_cast<int>(finite.size()) < d) return result;  // forced -infinity
  // d largest utilities, ties resolved toward lower item index.
  std::sort(finite.begin(), finite.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  Rational sum = 0;
  for (int t = 0; t < d; ++t) {
    sum += finite[t].first;
    result.items.push_back(finite[t].second);
  }
  std::sort(result.items.begin(), result.items.end());
  result.utility = sum;
  return result;
}

EnvyReport check_envy_free(const Instance& instance, const Outcome& outcome) {
  validate_outcome_shape(instance, outcome);
  require_sold_items_priced(instance, outcome);
  const int n = instance.buyer_count();
  const int m = instance.item_count();
  const auto& bundles = outcome.allocation.bundles;

  // Condition 1: feasibility.
  for (int i = 0; i < n; ++i) {
    Rational u = 0;
    for (int j : bundles[i]) u += instance.valuation(i, j) - *outcome.prices.prices[j];
    if (u.sign() < 0) {
      EnvyReport r;
      r.kind = EnvyReport::Kind::kInfeasibleBuyer;
      r.buyer = i;
      return r;
    }
  }

  // Condition 2: no winner prefers an outside item to one of its own.
  for (int i = 0; i < n; ++i) {
    if (bundles[i].empty()) continue;
    std::vector<char> mine(m, 0);
    for (int j : bundles[i]) mine[j] = 1;
    for (int j : bundles[i]) {
      const Rational u_ij = instance.valuation(i, j) - *outcome.prices.prices[j];
      for (int other = 0; other < m; ++other) {
        if (mine[other] || !outcome.prices.finite(other)) continue;
        const Rational u_io = instance.valuation(i, other) - *outcome.prices.prices[other];
        if (u_ij < u_io) {
          EnvyReport r;
          r.kind = EnvyReport::Kind::kItemSwap;
          r.buyer = i;
          r.item = j;
          r.other_item = other;
          return r;
        }
      }
    }
  }

  // Condition 3: no non-winner can assemble a positive bundle.
  for (int i = 0; i < n; ++i) {
    if (!bundles[i].empty()) continue;
    BundleUtility best = best_bundle_utility(instance, outcome.prices, i);
    if (best.utility && best.utility->sign() > 0) {
      EnvyReport r;
      r.kind = EnvyReport::Kind::kLoserPositiveBundle;
      r.buyer = i;
      r.bundle = best.items;
      return r;
    }
  }
  return EnvyReport{};
}

ProperReport is_proper(const Instance& instance) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "properness is defined for related valuations");
  }
  const int n = instance.buyer_count();
  ProperReport report;
  for (int i = 0; i < n; ++i) {
    long sum = instance.demand(i);
    for (int k = 0; k < n; ++k) {
      if (instance.value(k) > instance.value(i) && instance.demand(k) <= instance.demand(i)) {
        sum += instance.demand(k);
      }
    }
    if (sum > instance.item_count()) report.violators.push_back(i);
  }
  report.proper = report.violators.empty();
  return report;
}

ProperizeResult properize(const Instance& instance) {
  ProperReport report = is_proper(instance);
  std::vector<char> remove(instance.buyer_count(), 0);
  for (int i : report.violators) remove[i] = 1;

  InstanceData data;
  data.related = true;
  data.qualities = instance.data().qualities;
  // Keep surviving buyers in input order so the result round-trips cleanly.
  std::vector<int> kept;
  for (int i = 0; i < instance.buyer_count(); ++i) {
    if (!remove[i]) kept.push_back(instance.original_buyer(i));
  }
  std::sort(kept.begin(), kept.end());
  for (int orig : kept) {
    data.values.push_back(instance.data().values[orig]);
    data.demands.push_back(instance.data().demands[orig]);
  }
  return ProperizeResult{Instance(std::move(data)), report.violators};
}

}  // namespace rmpsd
