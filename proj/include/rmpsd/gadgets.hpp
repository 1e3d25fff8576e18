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

#ifndef RMPSD_GADGETS_HPP
#define RMPSD_GADGETS_HPP

#include <optional>

#include "rmpsd/market.hpp"

namespace rmpsd {

/// Positive numbers whose total, rescaled to integers, is even.
struct PartitionInstance {
  std::vector<Rational> numbers;
};

/// Even count k of positive numbers with even (integer-scaled) total and
/// (3/2) * min >= max; asks for a subset of exactly k/2 numbers summing to
/// half the total.
struct ConstrainedPartitionInstance {
  std::vector<Rational> numbers;

  int size() const { return static_cast<int>(numbers.size()); }
  Rational total() const;
};

void validate_partition(const PartitionInstance& p);
void validate_cp(const ConstrainedPartitionInstance& cp);  // InvalidCPInstance

/// Doubles the instance: original numbers shifted up by twice the maximum,
/// padded with k copies of twice the maximum. Answer-preserving.
ConstrainedPartitionInstance partition_to_constrained(const PartitionInstance& p);

/// Exhaustive decision: lexicographically first half-size subset summing to
/// half the total, or nullopt. 0-based indices.
std::optional<std::vector<int>> cp_brute_decide(const ConstrainedPartitionInstance& cp);

/// Any-size subset summing to half the total (test oracle for the transform).
bool partition_brute_decide(const PartitionInstance& p);

enum class GadgetKind { kHardness, kProperHardness };

struct GadgetParams {
  int k = 3;
  std::optional<Rational> epsilon;  // derives lambda when no explicit value
  std::optional<long> lambda;
};

/// A reduction instance together with the layout needed to build witnesses.
struct Gadget {
  GadgetKind kind;
  int k = 0;
  long lambda = 0;
  Rational q_bar;          // filler quality, min cp number / 100
  Rational total;          // Q, sum of the cp numbers
  InstanceData data;       // input order (see item_offset comments)
  Instance instance;
  int premium_items = 0;   // leading items of quality Q + q_bar (proper only)
  int cp_items_offset = 0; // input index of the first inherited cp number
  // Input-order buyer ids: the five hardness buyers are always the last
  // five; the proper gadget prepends one more in front of them.
};

/// Five-buyer gadget on lambda + k - 1 items: k items of quality Q, one of
/// Q/2, the 2(k-1) inherited numbers, and lambda - 2k filler items. Buyer
/// values decrease strictly; buyers 2 and 4 (1-based) can never win, so the
/// instance is deliberately improper. Requires k >= 3, lambda >= k^2 and
/// lambda > 3k (LambdaTooSmall otherwise); the cp instance must have 2(k-1)
/// numbers.
Gadget build_m_gadget(const ConstrainedPartitionInstance& cp, const GadgetParams& params);

/// The five-buyer gadget plus a leading buyer (demand k) and k+1 items of
/// quality Q + q_bar; proper by construction. Requires lambda >= 600 k^2.
Gadget build_proper_gadget(const ConstrainedPartitionInstance& cp, const GadgetParams& params);

/// The positive-answer outcome: the top buyer(s) take the premium and
/// quality-Q items, buyer 3 takes the Q/2 item plus the answer numbers,
/// buyer 5 takes the filler items, everything priced with the closed-form
/// prices. cp_answer indexes the inherited numbers (0-based) and must have
/// size k-1 and sum Q/2 (InvalidWitness otherwise). The result passes the
/// envy-freeness checker.
Outcome gadget_witness(const Gadget& gadget, const std::vector<int>& cp_answer);

}  // namespace rmpsd

#endif  // RMPSD_GADGETS_HPP
