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

#ifndef RMPSD_LP_HPP
#define RMPSD_LP_HPP

#include <utility>
#include <vector>

#include "rmpsd/rational.hpp"

namespace rmpsd::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

/// maximize objective . x   subject to   rows . x <= rhs,  x >= 0.
/// All data exact rationals; rows are stored dense (variable counts here are
/// small, constraint counts may be large).
class Problem {
 public:
  explicit Problem(int var_count) : objective_(var_count, Rational(0)) {}

  int var_count() const { return static_cast<int>(objective_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }

  void set_objective(int var, Rational coeff) { objective_[var] = std::move(coeff); }

  void add_le(const std::vector<std::pair<int, Rational>>& terms, const Rational& bound);
  void add_ge(const std::vector<std::pair<int, Rational>>& terms, const Rational& bound);

  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }

 private:
  std::vector<Rational> objective_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
};

struct Solution {
  Status status = Status::kInfeasible;
  Rational value;               // optimal objective (kOptimal)
  std::vector<Rational> x;      // primal point (kOptimal)
  std::vector<Rational> dual;   // one multiplier per row (kOptimal)
  std::vector<Rational> ray;    // improving direction (kUnbounded)
  std::vector<Rational> farkas; // infeasibility certificate, y >= 0 with
                                // yA >= 0 and y.rhs < 0 (kInfeasible; may be
                                // empty when solved by the primal path)
};

/// Dense two-phase primal simplex with Bland's smallest-index pivot rule.
/// Exact and deterministic; terminates on every input.
Solution solve(const Problem& problem);

/// Solves through the dual, which is much faster when rows greatly outnumber
/// variables; falls back to the primal path when the dual is infeasible.
/// On kInfeasible results the farkas certificate is populated.
Solution solve_wide(const Problem& problem);

/// Exact certificate checks: feasibility of x and dual, plus matching
/// objective values (strong duality) — a complete optimality proof.
bool verify_optimal(const Problem& problem, const Solution& solution);
bool verify_infeasible(const Problem& problem, const Solution& solution);

}  // namespace rmpsd::lp

#endif  // RMPSD_LP_HPP
