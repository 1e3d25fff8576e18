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

#include "rmpsd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmpsd/lp.hpp"

namespace rmpsd {

namespace {

// Calls fn for every size-k index subset of [0, n), lexicographically.
// fn returns false to stop; returns false if stopped.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(idx)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

long combination_count(int n, int k, long cap) {
  if (k < 0 || k > n) return 0;
  long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

struct BundleEnumerator {
  const Instance& instance;
  const std::vector<int>& winners;
  bool monotone_only;
  const std::function<bool(const Allocation&)>& visit;
  Allocation current;
  std::vector<char> used;
  std::vector<Rational> bundle_min_q;  // per assigned winner

  bool go(std::size_t t) {
    if (t == winners.size()) return visit(current);
    const int w = winners[t];
    const int d = instance.demand(w);
    // Items must not beat the worst item of any strictly-higher-value winner.
    std::optional<Rational> limit;
    if (monotone_only) {
      for (std::size_t s = 0; s < t; ++s) {
        if (instance.value(winners[s]) > instance.value(w)) {
          if (!limit || bundle_min_q[s] < *limit) limit = bundle_min_q[s];
        }
      }
    }
    std::vector<int> candidates;
    for (int j = 0; j < instance.item_count(); ++j) {
      if (used[j]) continue;
      if (limit && instance.quality(j) > *limit) continue;
      candidates.push_back(j);
    }
    if (static_cast<int>(candidates.size()) < d) return true;
    return for_each_combination(
        static_cast<int>(candidates.size()), d, [&](const std::vector<int>& pick) {
          auto& bundle = current.bundles[w];
          bundle.clear();
          Rational min_q;
          for (int p : pick) {
            const int item = candidates[p];
            bundle.push_back(item);
            used[item] = 1;
            if (monotone_only) {
              const Rational& q = instance.quality(item);
              if (bundle.size() == 1 || q < min_q) min_q = q;
            }
          }
          bundle_min_q.push_back(min_q);
          const bool keep_going = go(t + 1);
          bundle_min_q.pop_back();
          for (int p : pick) used[candidates[p]] = 0;
          bundle.clear();
          return keep_going;
        });
  }
};

}  // namespace

void for_each_allocation(const Instance& instance, const std::vector<int>& winners,
                         bool monotone_only, const std::function<bool(const Allocation&)>& visit) {
  if (monotone_only && !instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "monotone enumeration needs related valuations");
  }
  BundleEnumerator e{instance, winners, monotone_only, visit, Allocation{}, {}, {}};
  e.current.bundles.assign(instance.buyer_count(), {});
  e.used.assign(instance.item_count(), 0);
  e.go(0);
}

std::optional<PricedAllocation> optimal_prices_for_allocation(const Instance& instance,
                                                              const Allocation& allocation,
                                                              bool allow_overpricing,
                                                              const OracleLimits& limits) {
  validate_allocation(instance, allocation);
  const std::vector<int> sold = allocation.sold_items();
  const int np = static_cast<int>(sold.size());
  if (np == 0) {
    return PricedAllocation{PriceVector::all_infinite(instance.item_count()), Rational(0), true};
  }
  std::vector<int> var_of(instance.item_count(), -1);
  for (int v = 0; v < np; ++v) var_of[sold[v]] = v;

  lp::Problem problem(np);
  for (int v = 0; v < np; ++v) problem.set_objective(v, Rational(1));

  long subset_rows = 0;
  for (int i = 0; i < instance.buyer_count(); ++i) {
    if (!allocation.bundles[i].empty()) continue;
    subset_rows += combination_count(np, instance.demand(i), limits.max_enumerated_allocations);
    if (subset_rows > limits.max_enumerated_allocations) {
      fail(ErrorCode::kLimitExceeded, "too many non-winner bundle constraints");
    }
  }

  for (int i = 0; i < instance.buyer_count(); ++i) {
    const auto& bundle = allocation.bundles[i];
    if (!bundle.empty()) {
      // (a) bundle utility non-negative.
      std::vector<std::pair<int, Rational>> terms;
      Rational bundle_value = 0;
      for (int j : bundle) {
        terms.emplace_back(var_of[j], Rational(1));
        bundle_value += instance.valuation(i, j);
      }
      problem.add_le(terms, bundle_value);
      // (b) own item at least as attractive as any other sold item.
      for (int j : bundle) {
        for (int other : sold) {
          if (var_of[other] == var_of[j] || allocation.owner(other) == i) continue;
          problem.add_le({{var_of[j], Rational(1)}, {var_of[other], Rational(-1)}},
                         instance.valuation(i, j) - instance.valuation(i, other));
        }
      }
      // (e) no overpricing.
      if (!allow_overpricing) {
        for (int j : bundle) {
          problem.add_le({{var_of[j], Rational(1)}}, instance.valuation(i, j));
        }
      }
    } else if (instance.demand(i) <= np) {
      // (c) every demand-sized subset of sold items priced out of reach.
      for_each_combination(np, instance.demand(i), [&](const std::vector<int>& pick) {
        std::vector<std::pair<int, Rational>> terms;
        Rational total_value = 0;
        for (int v : pick) {
          terms.emplace_back(v, Rational(1));
          total_value += instance.valuation(i, sold[v]);
        }
        problem.add_ge(terms, total_value);
        return true;
      });
    }
  }

  lp::Solution sol = lp::solve_wide(problem);
  if (sol.status == lp::Status::kInfeasible) {
    if (!sol.farkas.empty() && !lp::verify_infeasible(problem, sol)) {
      throw std::logic_error("infeasibility certificate rejected");
    }
    return std::nullopt;
  }
  if (sol.status == lp::Status::kUnbounded) {
    throw std::logic_error("envy-free pricing LP cannot be unbounded");
  }
  if (!lp::verify_optimal(problem, sol)) {
    throw std::logic_error("optimality certificate rejected");
  }

  bool attained = true;
  std::vector<Rational> best_x = sol.x;
  if (std::any_of(sol.x.begin(), sol.x.end(), [](const Rational& v) { return v.is_zero(); })) {
    // The optimal vertex touches zero. Prices must be strictly positive, so
    // probe with a min-price variable t: first whether any all-positive
    // pricing exists at all, then whether one exists at the optimal value.
    auto probe = [&](bool pin_to_optimum) {
      lp::Problem second(np + 1);
      second.set_objective(np, Rational(1));
      for (int r = 0; r < problem.row_count(); ++r) {
        std::vector<std::pair<int, Rational>> terms;
        for (int v = 0; v < np; ++v) {
          if (!problem.rows()[r][v].is_zero()) terms.emplace_back(v, problem.rows()[r][v]);
        }
        second.add_le(terms, problem.rhs()[r]);
      }
      std::vector<std::pair<int, Rational>> all_prices;
      for (int v = 0; v < np; ++v) {
        second.add_le({{np, Rational(1)}, {v, Rational(-1)}}, Rational(0));
        all_prices.emplace_back(v, Rational(1));
      }
      if (pin_to_optimum) {
        second.add_le(all_prices, sol.value);
        second.add_ge(all_prices, sol.value);
      }
      lp::Solution probed = lp::solve_wide(second);
      if (probed.status != lp::Status::kOptimal || !lp::verify_optimal(second, probed)) {
        throw std::logic_error("positivity probe must stay solvable");
      }
      return probed;
    };
    lp::Solution anywhere = probe(false);
    if (anywhere.value.sign() == 0) {
      // Every envy-free pricing of this allocation needs a zero price, and
      // zero is not a price: no valid outcome exists.
      return std::nullopt;
    }
    lp::Solution at_optimum = probe(true);
    if (at_optimum.value.sign() > 0) {
      best_x.assign(at_optimum.x.begin(), at_optimum.x.begin() + np);
    } else {
      attained = false;
    }
  }

  PricedAllocation result;
  result.prices = PriceVector::all_infinite(instance.item_count());
  for (int v = 0; v < np; ++v) result.prices.prices[sold[v]] = best_x[v];
  result.revenue = sol.value;
  result.attained = attained;
  return result;
}

OracleResult oracle_opt(const Instance& instance, const OracleLimits& limits,
                        bool allow_overpricing) {
  const int n = instance.buyer_count();
  const int m = instance.item_count();
  if (m > limits.max_items) fail(ErrorCode::kLimitExceeded, "instance exceeds max_items");
  if (n > limits.max_buyers) fail(ErrorCode::kLimitExceeded, "instance exceeds max_buyers");

  OracleResult best;
  best.outcome = empty_outcome(instance);
  best.optimum = 0;
  long count = 0;
  const bool prune = limits.monotone_pruning && instance.related();

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> winners;
    long total_demand = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        winners.push_back(i);
        total_demand += instance.demand(i);
      }
    }
    if (total_demand > m) continue;
    for_each_allocation(instance, winners, prune, [&](const Allocation& alloc) {
      if (++count > limits.max_enumerated_allocations) {
        fail(ErrorCode::kLimitExceeded, "allocation enumeration limit exceeded");
      }
      auto priced = optimal_prices_for_allocation(instance, alloc, allow_overpricing, limits);
      if (priced && priced->revenue > best.optimum) {
        best.outcome = Outcome{alloc, priced->prices};
        best.optimum = priced->revenue;
        best.attained = priced->attained;
      }
      return true;
    });
  }
  best.allocations_tried = count;
  return best;
}

bool direct_envy_check(const Instance& instance, const Outcome& outcome,
                       const OracleLimits& limits) {
  validate_allocation(instance, outcome.allocation);
  const int m = instance.item_count();
  if (static_cast<int>(outcome.prices.prices.size()) != m) {
    fail(ErrorCode::kShapeMismatch, "price vector length differs from item count");
  }
  if (m > limits.max_items) fail(ErrorCode::kLimitExceeded, "instance exceeds max_items");

  std::vector<int> finite_items;
  for (int j = 0; j < m; ++j) {
    if (outcome.prices.finite(j)) finite_items.push_back(j);
  }
  const int f = static_cast<int>(finite_items.size());

  for (int i = 0; i < instance.buyer_count(); ++i) {
    Rational own = 0;
    for (int j : outcome.allocation.bundles[i]) {
      if (!outcome.prices.finite(j)) {
        fail(ErrorCode::kSoldItemPricedInfinite, "sold item has infinite price");
      }
      own += instance.valuation(i, j) - *outcome.prices.prices[j];
    }
    if (own.sign() < 0) return false;

    const int d = instance.demand(i);
    if (d > f) continue;  // every candidate set hits an infinite price
    if (combination_count(f, d, limits.max_enumerated_allocations) >
        limits.max_enumerated_allocations) {
      fail(ErrorCode::kLimitExceeded, "too many bundles to enumerate");
    }
    bool ok = for_each_combination(f, d, [&](const std::vector<int>& pick) {
      Rational total = 0;
      for (int p : pick) {
        const int j = finite_items[p];
        total += instance.valuation(i, j) - *outcome.prices.prices[j];
      }
      return total <= own;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace rmpsd
