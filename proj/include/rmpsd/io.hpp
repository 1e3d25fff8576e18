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

#ifndef RMPSD_IO_HPP
#define RMPSD_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "rmpsd/gadgets.hpp"
#include "rmpsd/market.hpp"

namespace rmpsd {

// Numbers in files are strings ("5", "3/100", "0.03") so values survive
// serialization exactly; bare JSON integers are also accepted on input.
// Item and buyer positions in files are 1-based and follow the file's own
// order, not the canonical one.

InstanceData instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceData& data);

Outcome outcome_from_json(const nlohmann::json& j, const Instance& instance);
nlohmann::json outcome_to_json(const Instance& instance, const Outcome& outcome);

ConstrainedPartitionInstance cp_from_json(const nlohmann::json& j);
nlohmann::json cp_to_json(const ConstrainedPartitionInstance& cp);

InstanceData load_instance(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

/// One line of the benchmark report.
struct BenchRecord {
  std::string instance;
  std::string algo;
  Rational revenue;
  std::optional<Rational> opt;
  std::optional<Rational> ratio;  // opt / revenue; present iff opt is
  long long time_ms = 0;
  bool envy_free = true;
};

inline constexpr const char* kBenchCsvHeader = "instance,algo,revenue,opt,ratio,time_ms,envy_free";
std::string to_csv_row(const BenchRecord& record);

}  // namespace rmpsd

#endif  // RMPSD_IO_HPP
