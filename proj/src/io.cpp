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

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rmpsd {

using nlohmann::json;

namespace {

Rational number_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorCode::kParseError, "numbers must be strings like \"3/100\" (or integers)");
}

std::vector<Rational> numbers_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::kParseError, std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(number_from_json(e));
  return out;
}

}  // namespace

InstanceData instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    fail(ErrorCode::kParseError, "instance file needs a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  InstanceData data;
  if (!j.contains("demands")) fail(ErrorCode::kParseError, "instance file needs \"demands\"");
  for (const auto& d : j.at("demands")) {
    if (!d.is_number_integer()) fail(ErrorCode::kParseError, "demands must be integers");
    data.demands.push_back(d.get<int>());
  }
  if (kind == "related") {
    data.related = true;
    data.values = numbers_from_json(j.at("values"), "values");
    data.qualities = numbers_from_json(j.at("qualities"), "qualities");
  } else if (kind == "unrelated") {
    data.related = false;
    if (!j.contains("valuations") || !j.at("valuations").is_array()) {
      fail(ErrorCode::kParseError, "unrelated instance needs a \"valuations\" matrix");
    }
    for (const auto& row : j.at("valuations")) {
      data.valuations.push_back(numbers_from_json(row, "valuation row"));
    }
  } else {
    fail(ErrorCode::kParseError, "kind must be \"related\" or \"unrelated\"");
  }
  return data;
}

json instance_to_json(const InstanceData& data) {
  json j;
  j["kind"] = data.related ? "related" : "unrelated";
  if (data.related) {
    json values = json::array();
    for (const auto& v : data.values) values.push_back(v.str());
    j["values"] = std::move(values);
  }
  j["demands"] = data.demands;
  if (data.related) {
    json qualities = json::array();
    for (const auto& q : data.qualities) qualities.push_back(q.str());
    j["qualities"] = std::move(qualities);
  } else {
    json matrix = json::array();
    for (const auto& row : data.valuations) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      matrix.push_back(std::move(r));
    }
    j["valuations"] = std::move(matrix);
  }
  return j;
}

Outcome outcome_from_json(const json& j, const Instance& instance) {
  if (!j.is_object() || !j.contains("allocation")) {
    fail(ErrorCode::kParseError, "outcome file needs an \"allocation\" field");
  }
  const int n = instance.buyer_count();
  const int m = instance.item_count();
  Outcome outcome = empty_outcome(instance);

  const json& alloc = j.at("allocation");
  if (!alloc.is_array() || static_cast<int>(alloc.size()) != n) {
    fail(ErrorCode::kShapeMismatch, "allocation must list one bundle per buyer");
  }
  for (int input_buyer = 0; input_buyer < n; ++input_buyer) {
    const json& bundle = alloc.at(input_buyer);
    if (!bundle.is_array()) fail(ErrorCode::kParseError, "bundles must be arrays");
    auto& target = outcome.allocation.bundles[instance.canonical_buyer(input_buyer)];
    for (const auto& e : bundle) {
      if (!e.is_number_integer()) fail(ErrorCode::kParseError, "item indices must be integers");
      const long long one_based = e.get<long long>();
      if (one_based < 1 || one_based > m) {
        fail(ErrorCode::kShapeMismatch, "item index out of range");
      }
      target.push_back(instance.canonical_item(static_cast<int>(one_based - 1)));
    }
    std::sort(target.begin(), target.end());
  }

  if (j.contains("prices")) {
    const json& prices = j.at("prices");
    if (!prices.is_array() || static_cast<int>(prices.size()) != m) {
      fail(ErrorCode::kShapeMismatch, "prices must list one entry per item");
    }
    for (int input_item = 0; input_item < m; ++input_item) {
      const json& p = prices.at(input_item);
      if (p.is_null()) continue;  // unsold / infinite
      Rational value = number_from_json(p);
      if (value.sign() <= 0) {
        fail(ErrorCode::kNonPositiveValue, "finite prices must be positive");
      }
      outcome.prices.prices[instance.canonical_item(input_item)] = std::move(value);
    }
  }
  return outcome;
}

json outcome_to_json(const Instance& instance, const Outcome& outcome) {
  json alloc = json::array();
  for (int input_buyer = 0; input_buyer < instance.buyer_count(); ++input_buyer) {
    const auto& bundle = outcome.allocation.bundles[instance.canonical_buyer(input_buyer)];
    std::vector<long long> one_based;
    for (int item : bundle) one_based.push_back(instance.original_item(item) + 1);
    std::sort(one_based.begin(), one_based.end());
    alloc.push_back(one_based);
  }
  json prices = json::array();
  for (int input_item = 0; input_item < instance.item_count(); ++input_item) {
    const auto& p = outcome.prices.prices[instance.canonical_item(input_item)];
    if (p) {
      prices.push_back(p->str());
    } else {
      prices.push_back(nullptr);
    }
  }
  json j;
  j["allocation"] = std::move(alloc);
  j["prices"] = std::move(prices);
  return j;
}

ConstrainedPartitionInstance cp_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numbers")) {
    fail(ErrorCode::kParseError, "constrained-partition file needs \"numbers\"");
  }
  ConstrainedPartitionInstance cp;
  cp.numbers = numbers_from_json(j.at("numbers"), "numbers");
  return cp;
}

json cp_to_json(const ConstrainedPartitionInstance& cp) {
  json numbers = json::array();
  for (const auto& q : cp.numbers) numbers.push_back(q.str());
  return json{{"kind", "constrained-partition"}, {"numbers", std::move(numbers)}};
}

InstanceData load_instance(const std::string& path) { return instance_from_json(load_json(path)); }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::kParseError, path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string to_csv_row(const BenchRecord& record) {
  std::ostringstream os;
  os << record.instance << ',' << record.algo << ',' << record.revenue.str() << ',';
  if (record.opt) os << record.opt->str();
  os << ',';
  if (record.ratio) os << record.ratio->str();
  os << ',' << record.time_ms << ',' << (record.envy_free ? "true" : "false");
  return os.str();
}

}  // namespace rmpsd
