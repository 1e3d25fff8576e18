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

#include <algorithm>
#include <stdexcept>

#include "rmpsd/pricing.hpp"

namespace rmpsd {

namespace {

// The total rescaled by the least common denominator must be an even integer.
bool scaled_total_even(const std::vector<Rational>& numbers) {
  mpz_class lcm_den = 1;
  for (const Rational& q : numbers) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
    lcm_den = g;
  }
  Rational scaled_total = 0;
  for (const Rational& q : numbers) scaled_total += q * Rational(lcm_den);
  return scaled_total.is_integer() && mpz_even_p(scaled_total.num().get_mpz_t());
}

long max_gadget_items() { return 20'000'000; }

}  // namespace

Rational ConstrainedPartitionInstance::total() const {
  Rational t = 0;
  for (const Rational& q : numbers) t += q;
  return t;
}

void validate_partition(const PartitionInstance& p) {
  if (p.numbers.empty()) fail(ErrorCode::kInvalidCPInstance, "empty partition instance");
  for (const Rational& q : p.numbers) {
    if (q.sign() <= 0) fail(ErrorCode::kNonPositiveValue, "partition numbers must be positive");
  }
  if (!scaled_total_even(p.numbers)) {
    fail(ErrorCode::kInvalidCPInstance, "partition total must be even after integer scaling");
  }
}

void validate_cp(const ConstrainedPartitionInstance& cp) {
  if (cp.numbers.empty() || cp.size() % 2 != 0) {
    fail(ErrorCode::kInvalidCPInstance, "constrained partition needs an even, positive count");
  }
  Rational lo = cp.numbers.front(), hi = cp.numbers.front();
  for (const Rational& q : cp.numbers) {
    if (q.sign() <= 0) fail(ErrorCode::kNonPositiveValue, "numbers must be positive");
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  if (Rational(3, 2) * lo < hi) {
    fail(ErrorCode::kInvalidCPInstance, "spread too large: 3/2 * min < max");
  }
  if (!scaled_total_even(cp.numbers)) {
    fail(ErrorCode::kInvalidCPInstance, "total must be even after integer scaling");
  }
}

ConstrainedPartitionInstance partition_to_constrained(const PartitionInstance& p) {
  validate_partition(p);
  Rational q_max = p.numbers.front();
  for (const Rational& q : p.numbers) q_max = std::max(q_max, q);
  ConstrainedPartitionInstance cp;
  for (const Rational& q : p.numbers) cp.numbers.push_back(q + Rational(2) * q_max);
  for (std::size_t i = 0; i < p.numbers.size(); ++i) cp.numbers.push_back(Rational(2) * q_max);
  validate_cp(cp);
  return cp;
}

std::optional<std::vector<int>> cp_brute_decide(const ConstrainedPartitionInstance& cp) {
  validate_cp(cp);
  const int k = cp.size();
  const Rational half = cp.total() / Rational(2);
  std::vector<int> pick(k / 2);
  for (int i = 0; i < k / 2; ++i) pick[i] = i;
  for (;;) {
    Rational sum = 0;
    for (int i : pick) sum += cp.numbers[i];
    if (sum == half) return pick;
    int pos = k / 2 - 1;
    while (pos >= 0 && pick[pos] == k - k / 2 + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++pick[pos];
    for (int i = pos + 1; i < k / 2; ++i) pick[i] = pick[i - 1] + 1;
  }
}

bool partition_brute_decide(const PartitionInstance& p) {
  validate_partition(p);
  const int k = static_cast<int>(p.numbers.size());
  Rational half = 0;
  for (const Rational& q : p.numbers) half += q;
  half /= Rational(2);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Rational sum = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) sum += p.numbers[i];
    }
    if (sum == half) return true;
  }
  return false;
}

namespace {

struct GadgetNumbers {
  Rational total;  // Q
  Rational q_bar;
  Rational v1, v2, v3, v4, v5;
};

GadgetNumbers gadget_numbers(const ConstrainedPartitionInstance& cp, long lambda) {
  GadgetNumbers g;
  g.total = cp.total();
  Rational q_min = cp.numbers.front();
  for (const Rational& q : cp.numbers) q_min = std::min(q_min, q);
  g.q_bar = q_min / Rational(100);

  const Rational L(lambda);
  const Rational& Q = g.total;
  const long k = static_cast<long>(cp.size() / 2 + 1);  // cp carries 2(k-1) numbers
  const Rational K(k);

  g.v1 = 2;
  g.v2 = Rational(1) + (Q - Rational(2) * K * g.q_bar + K * Q * (L + Rational(1)) / Rational(2)) /
                           (L * (Q * K + Q - Rational(2) * K * g.q_bar + L * g.q_bar));
  g.v3 = Rational(1) + Rational(1) / L;
  g.v4 = Rational(1) + (Q - K * g.q_bar) / (L * (Q + (L - Rational(2) * K) * g.q_bar));
  g.v5 = 1;
  return g;
}

long resolve_lambda(const ConstrainedPartitionInstance& cp, const GadgetParams& params,
                    bool proper) {
  long lambda = 0;
  if (params.lambda) {
    lambda = *params.lambda;
  } else if (params.epsilon) {
    const Rational& eps = *params.epsilon;
    if (eps.sign() <= 0) fail(ErrorCode::kParseError, "epsilon must be positive");
    const Rational k(params.k);
    if (!proper) {
      // alpha = ceil(2/eps) + 1, lambda = k^alpha
      const Rational alpha_r = ceil(Rational(2) / eps) + Rational(1);
      if (!alpha_r.is_integer() || alpha_r > Rational(62)) {
        fail(ErrorCode::kLimitExceeded, "epsilon-driven lambda is astronomically large");
      }
      mpz_class lam;
      mpz_pow_ui(lam.get_mpz_t(), mpz_class(params.k).get_mpz_t(),
                 alpha_r.num().get_ui());
      if (lam > max_gadget_items()) {
        fail(ErrorCode::kLimitExceeded, "epsilon-driven lambda is too large to materialize");
      }
      lambda = lam.get_si();
    } else {
      Rational q_min = cp.numbers.front();
      for (const Rational& q : cp.numbers) q_min = std::min(q_min, q);
      const Rational q_bar = q_min / Rational(100);
      const Rational bound = ceil(Rational(4) * (k + Rational(1)) / eps +
                                  (Rational(5) * k + Rational(3)) * (Rational(2) - eps) *
                                      cp.total() / (eps * q_bar)) -
                             Rational(2);
      Rational floor600 = Rational(600) * k * k;
      const Rational lam = std::max(floor600, bound);
      if (lam > Rational(max_gadget_items())) {
        fail(ErrorCode::kLimitExceeded, "epsilon-driven lambda is too large to materialize");
      }
      lambda = static_cast<long>(lam.num().get_si());
    }
  } else {
    fail(ErrorCode::kParseError, "either lambda or epsilon must be given");
  }

  const long k = params.k;
  if (!proper) {
    if (lambda < k * k || lambda <= 3 * k) {
      fail(ErrorCode::kLambdaTooSmall, "need lambda >= k^2 and lambda > 3k");
    }
  } else {
    if (lambda < 600 * k * k) fail(ErrorCode::kLambdaTooSmall, "need lambda >= 600 k^2");
  }
  if (lambda + 2 * k > max_gadget_items()) {
    fail(ErrorCode::kLimitExceeded, "gadget too large to materialize");
  }
  return lambda;
}

Gadget build_gadget(const ConstrainedPartitionInstance& cp, const GadgetParams& params,
                    bool proper) {
  validate_cp(cp);
  const int k = params.k;
  if (k < 3) fail(ErrorCode::kInvalidCPInstance, "the reduction needs k >= 3");
  if (cp.size() != 2 * (k - 1)) {
    fail(ErrorCode::kInvalidCPInstance, "the gadget needs exactly 2(k-1) numbers");
  }
  const long lambda = resolve_lambda(cp, params, proper);
  const GadgetNumbers g = gadget_numbers(cp, lambda);

  // Every inherited number must sit strictly between the filler and Q/2.
  const Rational half = g.total / Rational(2);
  for (const Rational& q : cp.numbers) {
    if (q >= half) fail(ErrorCode::kInvalidCPInstance, "cp number at least half the total");
  }
  if (!(g.v1 > g.v2 && g.v2 > g.v3 && g.v3 > g.v4 && g.v4 > g.v5)) {
    throw std::logic_error("gadget values must decrease strictly");
  }

  Gadget out;
  out.kind = proper ? GadgetKind::kProperHardness : GadgetKind::kHardness;
  out.k = k;
  out.lambda = lambda;
  out.q_bar = g.q_bar;
  out.total = g.total;

  InstanceData data;
  data.related = true;
  if (proper) {
    const Rational v0 =
        (Rational(lambda) - Rational(2) * Rational(k)) * g.q_bar / ((g.total + g.q_bar) * Rational(k));
    if (!(v0 > g.v1)) throw std::logic_error("leading buyer must out-value everyone");
    data.values.push_back(v0);
    data.demands.push_back(k);
    out.premium_items = k + 1;
    for (int t = 0; t < k + 1; ++t) data.qualities.push_back(g.total + g.q_bar);
  }
  data.values.insert(data.values.end(), {g.v1, g.v2, g.v3, g.v4, g.v5});
  data.demands.insert(data.demands.end(),
                      {k, static_cast<int>(lambda), k, static_cast<int>(lambda - k),
                       static_cast<int>(lambda - 2 * k)});
  for (int t = 0; t < k; ++t) data.qualities.push_back(g.total);
  data.qualities.push_back(half);
  out.cp_items_offset = static_cast<int>(data.qualities.size());
  for (const Rational& q : cp.numbers) data.qualities.push_back(q);
  for (long t = 0; t < lambda - 2 * k; ++t) data.qualities.push_back(g.q_bar);

  out.data = data;
  out.instance = Instance(std::move(data));
  return out;
}

}  // namespace

Gadget build_m_gadget(const ConstrainedPartitionInstance& cp, const GadgetParams& params) {
  return build_gadget(cp, params, false);
}

Gadget build_proper_gadget(const ConstrainedPartitionInstance& cp, const GadgetParams& params) {
  return build_gadget(cp, params, true);
}

Outcome gadget_witness(const Gadget& gadget, const std::vector<int>& cp_answer) {
  const int k = gadget.k;
  const long lambda = gadget.lambda;
  const Instance& inst = gadget.instance;
  const bool proper = gadget.kind == GadgetKind::kProperHardness;

  if (static_cast<int>(cp_answer.size()) != k - 1) {
    fail(ErrorCode::kInvalidWitness, "the answer must pick exactly k-1 numbers");
  }
  Rational sum = 0;
  std::vector<char> seen(2 * (k - 1), 0);
  for (int idx : cp_answer) {
    if (idx < 0 || idx >= 2 * (k - 1) || seen[idx]) {
      fail(ErrorCode::kInvalidWitness, "answer index out of range or repeated");
    }
    seen[idx] = 1;
    sum += gadget.data.qualities[gadget.cp_items_offset + idx];
  }
  if (sum != gadget.total / Rational(2)) {
    fail(ErrorCode::kInvalidWitness, "answer does not sum to half the total");
  }

  Outcome outcome = empty_outcome(inst);
  auto& bundles = outcome.allocation.bundles;
  const int base_buyer = proper ? 1 : 0;  // input id of the value-2 buyer
  int input_item = 0;
  if (proper) {
    // Leading buyer takes k of the k+1 premium items; one stays unsold.
    for (int t = 0; t < k; ++t) bundles[inst.canonical_buyer(0)].push_back(inst.canonical_item(t));
    input_item = gadget.premium_items;
  }
  for (int t = 0; t < k; ++t) {
    bundles[inst.canonical_buyer(base_buyer)].push_back(inst.canonical_item(input_item + t));
  }
  const int half_item = input_item + k;
  auto& buyer3 = bundles[inst.canonical_buyer(base_buyer + 2)];
  buyer3.push_back(inst.canonical_item(half_item));
  for (int idx : cp_answer) {
    buyer3.push_back(inst.canonical_item(gadget.cp_items_offset + idx));
  }
  auto& buyer5 = bundles[inst.canonical_buyer(base_buyer + 4)];
  const int filler_offset = gadget.cp_items_offset + 2 * (k - 1);
  for (long t = 0; t < lambda - 2 * k; ++t) {
    buyer5.push_back(inst.canonical_item(static_cast<int>(filler_offset + t)));
  }
  for (auto& b : bundles) std::sort(b.begin(), b.end());

  outcome.prices = tilde_prices(inst, outcome.allocation);
  return outcome;
}

}  // namespace rmpsd
