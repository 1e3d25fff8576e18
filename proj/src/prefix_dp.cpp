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

#include "rmpsd/prefix_dp.hpp"

#include <numeric>
#include <stdexcept>

#include "rmpsd/pricing.hpp"

namespace rmpsd {

PrefixResult compute_prefix(const Instance& instance, std::span<const int> order, int h) {
  if (!instance.related()) {
    fail(ErrorCode::kUnrelatedValuations, "prefix computation needs related valuations");
  }
  if (h < 1 || h > static_cast<int>(order.size())) {
    fail(ErrorCode::kShapeMismatch, "winner count outside the given order");
  }
  const int m = instance.item_count();
  std::vector<int> demand(h);
  long total_demand = 0;
  for (int k = 0; k < h; ++k) {
    if (k > 0 && instance.value(order[k - 1]) < instance.value(order[k])) {
      fail(ErrorCode::kShapeMismatch, "buyer order must be non-increasing in value");
    }
    demand[k] = instance.demand(order[k]);
    total_demand += demand[k];
  }
  if (total_demand > m) {
    fail(ErrorCode::kPrefixDoesNotFit, "prefix demand exceeds item count");
  }

  // Block start bounds: lo_k leaves room for earlier blocks, hi_k for later.
  std::vector<int> lo(h), hi(h);
  {
    int before = 0;
    for (int k = 0; k < h; ++k) {
      lo[k] = before;
      before += demand[k];
    }
    int after = 0;
    for (int k = h - 1; k >= 0; --k) {
      after += demand[k];
      hi[k] = m - after;
    }
  }

  std::vector<Rational> tcoef(h);
  {
    long before = 0;
    for (int k = 0; k < h; ++k) {
      const Rational& v = instance.value(order[k]);
      tcoef[k] = v;
      if (k > 0) tcoef[k] -= (instance.value(order[k - 1]) - v) * Rational(before);
      before += demand[k];
    }
  }

  // The table entries are only compared, so rescale values and qualities to
  // integers once and run the recurrence over plain integers: exact, and the
  // inner loop allocates nothing.
  mpz_class value_scale = 1, quality_scale = 1;
  for (int k = 0; k < h; ++k) {
    mpz_lcm(value_scale.get_mpz_t(), value_scale.get_mpz_t(),
            instance.value(order[k]).den().get_mpz_t());
  }
  for (int j = 0; j < m; ++j) {
    mpz_lcm(quality_scale.get_mpz_t(), quality_scale.get_mpz_t(),
            instance.quality(j).den().get_mpz_t());
  }
  auto rescale = [](const Rational& r, const mpz_class& scale) {
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
    out *= r.num();
    return out;
  };
  std::vector<mpz_class> quality_z(m), prefix_q(m + 1), tcoef_z(h), value_z(h);
  prefix_q[0] = 0;
  for (int j = 0; j < m; ++j) {
    quality_z[j] = rescale(instance.quality(j), quality_scale);
    prefix_q[j + 1] = prefix_q[j] + quality_z[j];
  }
  for (int k = 0; k < h; ++k) {
    tcoef_z[k] = rescale(tcoef[k], value_scale);
    value_z[k] = rescale(instance.value(order[k]), value_scale);
  }

  std::vector<mpz_class> prev(m), cur(m);
  std::vector<std::vector<bool>> starts_here(h, std::vector<bool>(m, false));
  mpz_class take, span;
  for (int k = 0; k < h; ++k) {
    for (int j = lo[k]; j <= hi[k]; ++j) {
      // take = r_{k-1}(j - d_{k-1}) + t_k q_j + v_k (q_{j+1}..q_{j+d_k-1})
      if (k > 0) {
        mpz_set(take.get_mpz_t(), prev[j - demand[k - 1]].get_mpz_t());
      } else {
        mpz_set_ui(take.get_mpz_t(), 0);
      }
      mpz_addmul(take.get_mpz_t(), tcoef_z[k].get_mpz_t(), quality_z[j].get_mpz_t());
      if (demand[k] > 1) {
        mpz_sub(span.get_mpz_t(), prefix_q[j + demand[k]].get_mpz_t(),
                prefix_q[j + 1].get_mpz_t());
        mpz_addmul(take.get_mpz_t(), value_z[k].get_mpz_t(), span.get_mpz_t());
      }
      if (j > lo[k] && mpz_cmp(cur[j - 1].get_mpz_t(), take.get_mpz_t()) >= 0) {
        mpz_set(cur[j].get_mpz_t(), cur[j - 1].get_mpz_t());
      } else {
        mpz_swap(cur[j].get_mpz_t(), take.get_mpz_t());
        starts_here[k][j] = true;
      }
    }
    std::swap(prev, cur);
  }
  const Rational best =
      Rational(prev[hi[h - 1]]) / (Rational(value_scale) * Rational(quality_scale));

  PrefixResult result;
  result.allocation.bundles.assign(instance.buyer_count(), {});
  result.winners.assign(order.begin(), order.begin() + h);
  {
    int j = hi[h - 1];
    for (int k = h - 1; k >= 0; --k) {
      while (!starts_here[k][j]) --j;
      auto& bundle = result.allocation.bundles[order[k]];
      for (int t = 0; t < demand[k]; ++t) bundle.push_back(j + t);
      if (k > 0) j -= demand[k - 1];
    }
  }
  result.prices = tilde_prices_with_order(instance, result.allocation, result.winners);
  result.revenue = revenue(Outcome{result.allocation, result.prices});
  if (result.revenue != best) {
    throw std::logic_error("prefix table value disagrees with priced revenue");
  }
  return result;
}

}  // namespace rmpsd
