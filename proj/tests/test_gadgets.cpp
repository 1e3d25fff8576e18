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

#include "rmpsd/gadgets.hpp"

#include <doctest.h>

#include <functional>

#include "rmpsd/errors.hpp"
#include "rmpsd/oracle.hpp"
#include "rmpsd/random_gen.hpp"
#include "test_support.hpp"

using namespace rmpsd;

namespace {

ConstrainedPartitionInstance cp_of(std::initializer_list<long> numbers) {
  ConstrainedPartitionInstance cp;
  for (long q : numbers) cp.numbers.emplace_back(q);
  return cp;
}

}  // namespace

TEST_CASE("partition to constrained partition transform") {
  PartitionInstance p;
  for (long q : {1, 2, 3}) p.numbers.emplace_back(q);
  ConstrainedPartitionInstance cp = partition_to_constrained(p);
  std::vector<Rational> expect;
  for (long q : {7, 8, 9, 6, 6, 6}) expect.emplace_back(q);
  CHECK(cp.numbers == expect);
  CHECK(cp.total() == Rational(42));
  auto answer = cp_brute_decide(cp);
  REQUIRE(answer.has_value());
  Rational sum = 0;
  for (int i : *answer) sum += cp.numbers[i];
  CHECK(sum == Rational(21));

  PartitionInstance two;
  two.numbers = {Rational(1), Rational(1)};
  ConstrainedPartitionInstance cp2 = partition_to_constrained(two);
  std::vector<Rational> expect2{Rational(3), Rational(3), Rational(2), Rational(2)};
  CHECK(cp2.numbers == expect2);
}

TEST_CASE("transform preserves the answer for every small instance") {
  // All multisets with k <= 6 entries drawn from 1..5 (answers are invariant
  // under reordering), checked by brute force on both sides.
  int checked = 0, positives = 0;
  std::vector<long> entries;
  std::function<void(int, long)> walk = [&](int k, long lo) {
    if (k > 0) {
      long total = 0;
      for (long e : entries) total += e;
      if (total % 2 == 0) {
        PartitionInstance p;
        for (long e : entries) p.numbers.emplace_back(e);
        const bool direct = partition_brute_decide(p);
        auto lifted = cp_brute_decide(partition_to_constrained(p));
        CHECK(direct == lifted.has_value());
        ++checked;
        positives += direct;
      }
    }
    if (k == 6) return;
    for (long e = lo; e <= 5; ++e) {
      entries.push_back(e);
      walk(k + 1, e);
      entries.pop_back();
    }
  };
  walk(0, 1);
  CHECK(checked > 100);
  CHECK(positives > 10);
  CHECK(positives < checked);
}

TEST_CASE("constrained partition validation and decision") {
  auto j1 = cp_brute_decide(cp_of({3, 3, 3, 3}));
  REQUIRE(j1.has_value());
  CHECK(*j1 == std::vector<int>{0, 1});  // lexicographically first

  auto j2 = cp_brute_decide(cp_of({2, 2, 2, 2}));
  REQUIRE(j2.has_value());
  CHECK(*j2 == std::vector<int>{0, 1});

  try {
    cp_brute_decide(cp_of({1, 2, 3, 4}));
    FAIL("expected InvalidCPInstance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidCPInstance);
  }

  CHECK_FALSE(cp_brute_decide(cp_of({4, 4, 4, 6})).has_value());
}

TEST_CASE("five-buyer gadget shape and guards") {
  GadgetParams params;
  params.k = 3;
  params.lambda = 27;
  Gadget g = build_m_gadget(cp_of({3, 3, 3, 3}), params);
  CHECK(g.instance.buyer_count() == 5);
  CHECK(g.instance.item_count() == 29);  // lambda + k - 1
  CHECK(g.q_bar == Rational(3, 100));
  CHECK(g.instance.data().values[2] == Rational(28, 27));  // third buyer
  // Item groups: 3 of quality 12, one 6, four 3, twenty-one 3/100.
  CHECK(g.instance.quality(0) == Rational(12));
  CHECK(g.instance.quality(3) == Rational(6));
  CHECK(g.instance.quality(4) == Rational(3));
  CHECK(g.instance.quality(8) == Rational(3, 100));
  // Buyers 1, 3, 5 together demand exactly lambda items.
  CHECK(g.instance.demand(0) + g.instance.demand(2) + g.instance.demand(4) == 27);
  // Values decrease strictly.
  for (int i = 0; i + 1 < 5; ++i) CHECK(g.instance.value(i) > g.instance.value(i + 1));
  // Buyers 2 and 4 are deliberately useless.
  ProperReport pr = is_proper(g.instance);
  CHECK_FALSE(pr.proper);
  CHECK(pr.violators == std::vector<int>{1, 3});

  GadgetParams small;
  small.k = 3;
  small.lambda = 8;
  try {
    build_m_gadget(cp_of({3, 3, 3, 3}), small);
    FAIL("expected LambdaTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLambdaTooSmall);
  }
}

TEST_CASE("epsilon drives lambda") {
  // epsilon 1: exponent ceil(2/1) + 1 = 3, so lambda = k^3 = 27.
  GadgetParams eps;
  eps.k = 3;
  eps.epsilon = Rational(1);
  Gadget g = build_m_gadget(cp_of({3, 3, 3, 3}), eps);
  CHECK(g.lambda == 27);

  // Proper gadget: max(600 k^2, ceil(4(k+1)/e + (5k+3)(2-e)Q/(e qb)) - 2).
  Gadget p = build_proper_gadget(cp_of({3, 3, 3, 3}), eps);
  CHECK(p.lambda == 7214);
  CHECK(is_proper(p.instance).proper);

  // A tiny epsilon would blow the instance up beyond anything buildable.
  GadgetParams tiny;
  tiny.k = 3;
  tiny.epsilon = Rational(1, 100);
  try {
    build_m_gadget(cp_of({3, 3, 3, 3}), tiny);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLimitExceeded);
  }
}

TEST_CASE("five-buyer gadget witness is envy-free above the bound") {
  GadgetParams params;
  params.k = 3;
  params.lambda = 27;
  Gadget g = build_m_gadget(cp_of({3, 3, 3, 3}), params);
  auto answer = cp_brute_decide(cp_of({3, 3, 3, 3}));
  REQUIRE(answer.has_value());
  Outcome w = gadget_witness(g, *answer);
  CHECK(check_envy_free(g.instance, w).envy_free());
  CHECK(revenue(w) > (Rational(27) - Rational(6)) * g.q_bar);  // 63/100

  // Closed-form prices: ((3L+1)Q - 2qb)/(2L) on the top block,
  // ((L+1)q - qb)/L on buyer 3's items, qb on the filler.
  const Rational L(27), Q(12), qb(3, 100);
  CHECK(*w.prices.prices[0] == ((Rational(3) * L + 1) * Q - Rational(2) * qb) / (Rational(2) * L));
  CHECK(*w.prices.prices[3] == ((L + 1) * Rational(6) - qb) / L);
  CHECK(*w.prices.prices[28] == qb);

  // Bad answers are rejected.
  CHECK_THROWS_AS(gadget_witness(g, {0, 1, 2}), Error);
  CHECK_THROWS_AS(gadget_witness(g, {0}), Error);
}

TEST_CASE("proper gadget is proper and its witness is envy-free") {
  GadgetParams params;
  params.k = 3;
  params.lambda = 5400;  // 600 k^2
  Gadget g = build_proper_gadget(cp_of({3, 3, 3, 3}), params);
  CHECK(g.instance.buyer_count() == 6);
  CHECK(g.instance.item_count() == 5406);  // lambda + 2k
  CHECK(is_proper(g.instance).proper);
  // v0 = 5394 * (3/100) / ((12 + 3/100) * 3)
  CHECK(g.instance.value(0) ==
        Rational(5394) * Rational(3, 100) / (Rational(1203, 100) * Rational(3)));
  for (int i = 0; i + 1 < 6; ++i) CHECK(g.instance.value(i) > g.instance.value(i + 1));

  auto answer = cp_brute_decide(cp_of({3, 3, 3, 3}));
  REQUIRE(answer.has_value());
  Outcome w = gadget_witness(g, *answer);
  CHECK(check_envy_free(g.instance, w).envy_free());
  // The closed-form prices put the leading buyer just above the second block.
  const Rational L(5400), Q(12), qb(3, 100);
  const Rational p1 = ((Rational(3) * L + 1) * Q - Rational(2) * qb) / (Rational(2) * L);
  CHECK(*w.prices.prices[0] == p1 + g.instance.value(0) * qb);
  CHECK(*w.prices.prices[g.premium_items] == p1);

  GadgetParams small;
  small.k = 3;
  small.lambda = 5399;
  CHECK_THROWS_AS(build_proper_gadget(cp_of({3, 3, 3, 3}), small), Error);
}

TEST_CASE("witness pricing is allocation-optimal at reduced scale") {
  // Reduced-size probe of the proper-gadget witness shape: the revenue-
  // optimal envy-free pricing of that allocation equals the closed-form
  // prices, so the witness cannot be priced any higher. Checked with the
  // exact pricing oracle at lambda = 13 (properness needs a bigger lambda,
  // but the pricing analysis is scale-independent).
  const int k = 3;
  const long lambda = 13;
  ConstrainedPartitionInstance cp = cp_of({3, 3, 3, 3});
  const Rational Q(12), qb(3, 100);

  InstanceData data;
  data.related = true;
  const Rational L(lambda);
  const Rational v0 = (L - Rational(2 * k)) * qb / ((Q + qb) * Rational(k)) + Rational(3);
  data.values = {v0, Rational(2),
                 Rational(1) + (Q - Rational(2 * k) * qb + Rational(k) * Q * (L + 1) / Rational(2)) /
                                   (L * (Q * Rational(k) + Q - Rational(2 * k) * qb + L * qb)),
                 Rational(1) + Rational(1) / L,
                 Rational(1) + (Q - Rational(k) * qb) / (L * (Q + (L - Rational(2 * k)) * qb)),
                 Rational(1)};
  data.demands = {k, k, static_cast<int>(lambda), k, static_cast<int>(lambda - k),
                  static_cast<int>(lambda - 2 * k)};
  for (int t = 0; t < k + 1; ++t) data.qualities.push_back(Q + qb);
  for (int t = 0; t < k; ++t) data.qualities.push_back(Q);
  data.qualities.push_back(Q / Rational(2));
  for (const Rational& q : cp.numbers) data.qualities.push_back(q);
  for (long t = 0; t < lambda - 2 * k; ++t) data.qualities.push_back(qb);
  Instance inst(std::move(data));

  Allocation a;
  a.bundles.assign(6, {});
  for (int t = 0; t < k; ++t) a.bundles[0].push_back(t);
  for (int t = 0; t < k; ++t) a.bundles[1].push_back(k + 1 + t);
  a.bundles[3] = {2 * k + 1, 2 * k + 2, 2 * k + 3};  // Q/2 item + two answer items
  const int filler = 2 * k + 2 + 2 * (k - 1);
  for (long t = 0; t < lambda - 2 * k; ++t) {
    a.bundles[5].push_back(static_cast<int>(filler + t));
  }
  REQUIRE(is_monotone(inst, a));

  Outcome closed{a, tilde_prices(inst, a)};
  REQUIRE(check_envy_free(inst, closed).envy_free());

  OracleLimits loose;
  loose.max_items = 25;
  loose.max_buyers = 6;
  loose.max_enumerated_allocations = 4000000;
  auto lp_best = optimal_prices_for_allocation(inst, a, true, loose);
  REQUIRE(lp_best.has_value());
  CHECK(lp_best->revenue == revenue(closed));
}

TEST_CASE("random instances are reproducible") {
  RandomParams params{3, 5, 6, 6, 3};
  InstanceData a = random_instance(RandomFamily::kRelatedUniform, params, 1);
  InstanceData b = random_instance(RandomFamily::kRelatedUniform, params, 1);
  CHECK(a == b);
  InstanceData c = random_instance(RandomFamily::kRelatedUniform, params, 2);
  CHECK_FALSE(a == c);

  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    InstanceData p = random_instance(RandomFamily::kProperForced, params, seed);
    CHECK(is_proper(Instance(p)).proper);
    InstanceData u = random_instance(RandomFamily::kUnrelatedUniform, params, seed);
    CHECK(static_cast<int>(u.valuations.size()) == 3);
    for (const auto& row : u.valuations) {
      CHECK(static_cast<int>(row.size()) == 5);
      for (const Rational& v : row) CHECK(v.sign() >= 0);
    }
  }
}
