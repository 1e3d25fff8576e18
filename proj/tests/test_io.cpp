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

#include "rmpsd/io.hpp"

#include <doctest.h>

#include "rmpsd/errors.hpp"
#include "rmpsd/random_gen.hpp"
#include "test_support.hpp"

using namespace rmpsd;
using nlohmann::json;

TEST_CASE("instance files parse into input order") {
  json j = json::parse(R"({"kind":"related","values":["3","2","1"],
                           "demands":[1,1,1],"qualities":["5","4","3"]})");
  InstanceData data = instance_from_json(j);
  CHECK(data.related);
  CHECK(data.values == std::vector<Rational>{Rational(3), Rational(2), Rational(1)});
  CHECK(instance_to_json(data) == j);

  json u = json::parse(R"({"kind":"unrelated","valuations":[["10","2"],["6","5"]],
                           "demands":[1,2]})");
  InstanceData um = instance_from_json(u);
  CHECK_FALSE(um.related);
  CHECK(um.valuations[0][0] == Rational(10));
  CHECK(instance_to_json(um) == u);

  // Decimals convert exactly; integers are tolerated.
  json d = json::parse(R"({"kind":"related","values":["0.5",2],
                           "demands":[1,1],"qualities":["1"]})");
  InstanceData dd = instance_from_json(d);
  CHECK(dd.values[0] == Rational(1, 2));
  CHECK(dd.values[1] == Rational(2));
}

TEST_CASE("round trip is the identity on random instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto family =
        seed % 2 == 0 ? RandomFamily::kRelatedUniform : RandomFamily::kUnrelatedUniform;
    InstanceData data = random_instance(family, RandomParams{3, 5, 9, 9, 3}, seed);
    CHECK(instance_from_json(instance_to_json(data)) == data);
  }
}

TEST_CASE("outcomes map between file order and canonical order") {
  // Scrambled instance: canonical buyer order is (2,3,1), items (2,3,1).
  json j = json::parse(R"({"kind":"related","values":["1","3","2"],
                           "demands":[1,1,1],"qualities":["3","5","4"]})");
  Instance inst(instance_from_json(j));

  // In file order: buyer 2 gets item 2, buyer 3 gets item 3, buyer 1 nothing.
  json oj = json::parse(R"({"allocation":[[],[2],[3]],"prices":[null,"8","5"]})");
  Outcome out = outcome_from_json(oj, inst);
  // Canonical: buyer 0 (input 1, value 3) owns item 0 (input 1, quality 5).
  CHECK(out.allocation.bundles[0] == std::vector<int>{0});
  CHECK(out.allocation.bundles[1] == std::vector<int>{1});
  CHECK(out.allocation.bundles[2].empty());
  CHECK(*out.prices.prices[0] == Rational(8));
  CHECK(*out.prices.prices[1] == Rational(5));
  CHECK_FALSE(out.prices.prices[2].has_value());

  CHECK(outcome_to_json(inst, out) == oj);

  // Round trip again through the serialized form.
  CHECK(outcome_to_json(inst, outcome_from_json(outcome_to_json(inst, out), inst)) == oj);
}

TEST_CASE("outcome parsing rejects bad data") {
  Instance inst = rmpsd::testing::related({3, 2}, {1, 1}, {5, 4});
  auto code = [&](const char* text) {
    try {
      outcome_from_json(json::parse(text), inst);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::kParseError;
  };
  CHECK(code(R"({"allocation":[[1]],"prices":["1","1"]})") == ErrorCode::kShapeMismatch);
  CHECK(code(R"({"allocation":[[3],[]],"prices":["1","1"]})") == ErrorCode::kShapeMismatch);
  CHECK(code(R"({"allocation":[[1],[]],"prices":["0","1"]})") == ErrorCode::kNonPositiveValue);
  CHECK(code(R"({"allocation":[[1],[]],"prices":["1"]})") == ErrorCode::kShapeMismatch);
  CHECK(code(R"({"prices":["1","1"]})") == ErrorCode::kParseError);
}

TEST_CASE("constrained partition files and csv rows") {
  ConstrainedPartitionInstance cp;
  cp.numbers = {Rational(7), Rational(8), Rational(9), Rational(6), Rational(6), Rational(6)};
  CHECK(cp_from_json(cp_to_json(cp)).numbers == cp.numbers);

  BenchRecord rec;
  rec.instance = "gap.json";
  rec.algo = "prefix";
  rec.revenue = Rational(14);
  rec.opt = Rational(46, 3);
  rec.ratio = *rec.opt / rec.revenue;
  rec.time_ms = 3;
  CHECK(std::string(kBenchCsvHeader) == "instance,algo,revenue,opt,ratio,time_ms,envy_free");
  CHECK(to_csv_row(rec) == "gap.json,prefix,14,46/3,23/21,3,true");

  BenchRecord bare;
  bare.instance = "x.json";
  bare.algo = "best";
  bare.revenue = Rational(10);
  bare.time_ms = 0;
  CHECK(to_csv_row(bare) == "x.json,best,10,,,0,true");
}
