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

#include <doctest.h>

#include "rmpsd/errors.hpp"
#include "rmpsd/oracle.hpp"
#include "test_support.hpp"

using namespace rmpsd;
using rmpsd::testing::related;
using rmpsd::testing::unrelated;

TEST_CASE("prefix algorithm on worked examples") {
  Instance micro = related({3, 2, 1}, {1, 1, 1}, {5, 4, 3});
  Outcome out = prefix_algorithm(micro);
  CHECK(revenue(out) == Rational(19));
  CHECK(check_envy_free(micro, out).envy_free());
  CHECK(oracle_opt(micro).optimum == Rational(19));  // optimal here

  Instance solo = related({2}, {1}, {5});
  CHECK(revenue(prefix_algorithm(solo)) == Rational(10));

  // A-tilde picks the bigger-demand tied buyer; it takes all three items.
  Instance tied = related({2, 2}, {2, 3}, {4, 3, 2});
  Outcome best_tied = prefix_algorithm(tied);
  CHECK(revenue(best_tied) == Rational(18));
  CHECK(best_tied.allocation.bundles[1] == std::vector<int>{0, 1, 2});
  CHECK(check_envy_free(tied, best_tied).envy_free());
}

TEST_CASE("prefix algorithm stays envy-free on improper instances") {
  Instance improper = related({5, 4}, {2, 2}, {1, 1, 1});
  REQUIRE_FALSE(is_proper(improper).proper);
  Outcome out = prefix_algorithm(improper);
  CHECK(check_envy_free(improper, out).envy_free());

  // Nothing fits: the trivial outcome is returned.
  Instance tight = related({3, 2}, {4, 5}, {1, 1, 1});
  Outcome nothing = prefix_algorithm(tight);
  CHECK(nothing.allocation.winners().empty());
  CHECK(revenue(nothing) == Rational(0));
}

TEST_CASE("best algorithm on worked examples") {
  Instance um = unrelated({{10, 2}, {6, 5}}, {1, 2});
  BestResult r = best_algorithm(um);
  CHECK(r.chosen_buyer == 0);
  CHECK(r.rate == Rational(10));
  CHECK(revenue(r.outcome) == Rational(10));
  CHECK(*r.outcome.prices.prices[0] == Rational(10));
  CHECK_FALSE(r.outcome.prices.prices[1].has_value());
  CHECK(check_envy_free(um, r.outcome).envy_free());

  Instance solo = related({2}, {1}, {5});
  BestResult s = best_algorithm(solo);
  CHECK(revenue(s.outcome) == Rational(10));
  CHECK(*s.outcome.prices.prices[0] == Rational(10));

  // Rate tie goes to the lower buyer index.
  Instance tie = unrelated({{4, 4}, {4, 4}}, {1, 1});
  CHECK(best_algorithm(tie).chosen_buyer == 0);

  Instance nofit = related({3, 2}, {4, 5}, {1, 1});
  try {
    best_algorithm(nofit);
    FAIL("expected NoBuyerFits");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoBuyerFits);
  }

  // All-zero valuations sell nothing (prices must stay positive).
  Instance zeros = unrelated({{0, 0}}, {1});
  BestResult z = best_algorithm(zeros);
  CHECK(z.outcome.allocation.winners().empty());
  CHECK(z.rate == Rational(0));
}

TEST_CASE("both algorithms are envy-free on random instances") {
  Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    InstanceData data = random_instance(RandomFamily::kRelatedUniform,
                                        RandomParams{static_cast<int>(rng.uniform(1, 5)),
                                                     static_cast<int>(rng.uniform(1, 8)), 6, 6, 4},
                                        64000 + t);
    Instance inst(std::move(data));
    Outcome p = prefix_algorithm(inst);
    CHECK(check_envy_free(inst, p).envy_free());
    BestResult b = best_algorithm(inst);
    CHECK(check_envy_free(inst, b.outcome).envy_free());
  }
  for (int t = 0; t < 100; ++t) {
    InstanceData data = random_instance(RandomFamily::kUnrelatedUniform,
                                        RandomParams{static_cast<int>(rng.uniform(1, 5)),
                                                     static_cast<int>(rng.uniform(1, 8)), 6, 6, 4},
                                        65000 + t);
    Instance inst(std::move(data));
    BestResult b = best_algorithm(inst);
    CHECK(check_envy_free(inst, b.outcome).envy_free());
  }
}

TEST_CASE("ratio spot checks against the oracle") {
  // Overpricing-favorable instance: Prefix is strictly suboptimal but within 2.
  Instance gap = related({2, 1}, {2, 3}, {4, 3, 2, 1, 1});
  REQUIRE(is_proper(gap).proper);
  Outcome p = prefix_algorithm(gap);
  CHECK(revenue(p) == Rational(14));
  OracleLimits limits;
  limits.max_items = 5;
  OracleResult opt = oracle_opt(gap, limits);
  CHECK(opt.optimum == Rational(46, 3));
  CHECK(Rational(2) * revenue(p) >= opt.optimum);
  CHECK(opt.optimum > revenue(p));  // the bound is genuinely exercised

  // The m-approximation bound for best on the same instance.
  BestResult b = best_algorithm(gap);
  CHECK(Rational(5) * revenue(b.outcome) >= opt.optimum);
  CHECK(opt.optimum <= Rational(5) * b.rate);
}
