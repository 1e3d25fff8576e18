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

#include "rmpsd/lp.hpp"

#include <stdexcept>

#include "rmpsd/errors.hpp"

namespace rmpsd::lp {

namespace {

constexpr long kPivotLimit = 500000;

// Full dense tableau over [structural | slack | artificial] columns.
// Invariant: rhs >= 0 and basis columns are unit vectors.
struct Tableau {
  int rows = 0;
  int cols = 0;       // total columns
  int art_begin = 0;  // first artificial column; entering is barred at/after it
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;  // reduced costs for the current objective
  Rational value;              // objective value of the current basis
  std::vector<int> basis;      // per row: basic column
  long pivots = 0;

  void price_out(const std::vector<Rational>& obj) {
    cost = obj;
    value = 0;
    for (int r = 0; r < rows; ++r) {
      const Rational& w = obj[basis[r]];
      if (w.is_zero()) continue;
      for (int c = 0; c < cols; ++c) {
        if (!a[r][c].is_zero()) cost[c] -= w * a[r][c];
      }
      value += w * rhs[r];
    }
  }

  void pivot(int pr, int pc) {
    if (++pivots > kPivotLimit) {
      fail(ErrorCode::kLimitExceeded, "simplex pivot limit exceeded");
    }
    const Rational inv = a[pr][pc];
    for (int c = 0; c < cols; ++c) {
      if (!a[pr][c].is_zero()) a[pr][c] /= inv;
    }
    rhs[pr] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc].is_zero()) continue;
      const Rational factor = a[r][pc];
      for (int c = 0; c < cols; ++c) {
        if (!a[pr][c].is_zero()) a[r][c] -= factor * a[pr][c];
      }
      rhs[r] -= factor * rhs[pr];
    }
    if (!cost[pc].is_zero()) {
      const Rational factor = cost[pc];
      for (int c = 0; c < cols; ++c) {
        if (!a[pr][c].is_zero()) cost[c] -= factor * a[pr][c];
      }
      value += factor * rhs[pr];
    }
    basis[pr] = pc;
  }

  // Bland's rule until no entering column remains. Returns the entering
  // column when unbounded, -1 when optimal.
  int run() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < art_begin; ++c) {
        if (cost[c].sign() > 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return -1;
      int leave = -1;
      Rational best_ratio;
      for (int r = 0; r < rows; ++r) {
        if (a[r][enter].sign() <= 0) continue;
        Rational ratio = rhs[r] / a[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }
};

}  // namespace

void Problem::add_le(const std::vector<std::pair<int, Rational>>& terms, const Rational& bound) {
  std::vector<Rational> row(var_count(), Rational(0));
  for (const auto& [var, coeff] : terms) row[var] += coeff;
  rows_.push_back(std::move(row));
  rhs_.push_back(bound);
}

void Problem::add_ge(const std::vector<std::pair<int, Rational>>& terms, const Rational& bound) {
  std::vector<Rational> row(var_count(), Rational(0));
  for (const auto& [var, coeff] : terms) row[var] -= coeff;
  rows_.push_back(std::move(row));
  rhs_.push_back(-bound);
}

Solution solve(const Problem& problem) {
  const int n = problem.var_count();
  const int m = problem.row_count();

  Tableau t;
  t.rows = m;
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    if (problem.rhs()[i].sign() < 0) ++artificials;
  }
  t.art_begin = n + m;
  t.cols = n + m + artificials;
  t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.rhs.resize(m);
  t.basis.resize(m);

  int next_art = t.art_begin;
  for (int i = 0; i < m; ++i) {
    const bool flip = problem.rhs()[i].sign() < 0;
    for (int j = 0; j < n; ++j) {
      const Rational& v = problem.rows()[i][j];
      if (!v.is_zero()) t.a[i][j] = flip ? -v : v;
    }
    t.a[i][n + i] = flip ? Rational(-1) : Rational(1);
    t.rhs[i] = flip ? -problem.rhs()[i] : problem.rhs()[i];
    if (flip) {
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = n + i;
    }
  }

  std::vector<int> deleted_rows;  // original row ids removed as redundant
  std::vector<int> row_origin(m);
  for (int i = 0; i < m; ++i) row_origin[i] = i;

  if (artificials > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (int c = t.art_begin; c < t.cols; ++c) phase1[c] = Rational(-1);
    t.price_out(phase1);
    const int enter = t.run();
    if (enter >= 0) throw std::logic_error("phase-1 objective unbounded");
    if (t.value.sign() < 0) {
      Solution s;
      s.status = Status::kInfeasible;
      return s;
    }
    // Pivot remaining zero-level artificials out; drop rows that turn out
    // redundant (all-zero in non-artificial columns).
    for (int r = 0; r < t.rows;) {
      if (t.basis[r] < t.art_begin) {
        ++r;
        continue;
      }
      int c = 0;
      while (c < t.art_begin && t.a[r][c].is_zero()) ++c;
      if (c < t.art_begin) {
        t.pivot(r, c);
        ++r;
      } else {
        deleted_rows.push_back(row_origin[r]);
        t.a.erase(t.a.begin() + r);
        t.rhs.erase(t.rhs.begin() + r);
        t.basis.erase(t.basis.begin() + r);
        row_origin.erase(row_origin.begin() + r);
        --t.rows;
      }
    }
  }

  std::vector<Rational> objective(t.cols, Rational(0));
  for (int j = 0; j < n; ++j) objective[j] = problem.objective()[j];
  t.price_out(objective);
  const int enter = t.run();

  Solution s;
  if (enter >= 0) {
    s.status = Status::kUnbounded;
    s.ray.assign(n, Rational(0));
    if (enter < n) s.ray[enter] = 1;
    for (int r = 0; r < t.rows; ++r) {
      if (t.basis[r] < n) s.ray[t.basis[r]] = -t.a[r][enter];
    }
    return s;
  }
  s.status = Status::kOptimal;
  s.value = t.value;
  s.x.assign(n, Rational(0));
  for (int r = 0; r < t.rows; ++r) {
    if (t.basis[r] < n) s.x[t.basis[r]] = t.rhs[r];
  }
  s.dual.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) s.dual[i] = -t.cost[n + i];
  for (int i : deleted_rows) s.dual[i] = 0;
  return s;
}

Solution solve_wide(const Problem& problem) {
  const int n = problem.var_count();
  const int m = problem.row_count();

  // Dual of max{cx : Ax <= b, x >= 0} is min{by : A'y >= c, y >= 0}, posed
  // here as max{-by : -A'y <= -c, y >= 0} with m variables and n rows.
  Problem dual(m);
  for (int i = 0; i < m; ++i) dual.set_objective(i, -problem.rhs()[i]);
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, Rational>> terms;
    for (int i = 0; i < m; ++i) {
      const Rational& v = problem.rows()[i][j];
      if (!v.is_zero()) terms.emplace_back(i, -v);
    }
    dual.add_le(terms, -problem.objective()[j]);
  }

  Solution inner = solve(dual);
  Solution s;
  switch (inner.status) {
    case Status::kOptimal:
      s.status = Status::kOptimal;
      s.value = -inner.value;
      s.x = std::move(inner.dual);   // multipliers of the dual's rows
      s.dual = std::move(inner.x);   // the dual variables themselves
      return s;
    case Status::kUnbounded:
      // An improving dual ray certifies primal infeasibility.
      s.status = Status::kInfeasible;
      s.farkas = std::move(inner.ray);
      return s;
    case Status::kInfeasible:
      // Primal unbounded or infeasible; settle it on the primal side.
      return solve(problem);
  }
  throw std::logic_error("unreachable");
}

bool verify_optimal(const Problem& problem, const Solution& solution) {
  if (solution.status != Status::kOptimal) return false;
  const int n = problem.var_count();
  const int m = problem.row_count();
  if (static_cast<int>(solution.x.size()) != n) return false;
  if (static_cast<int>(solution.dual.size()) != m) return false;
  for (const Rational& v : solution.x) {
    if (v.sign() < 0) return false;
  }
  for (const Rational& v : solution.dual) {
    if (v.sign() < 0) return false;
  }
  Rational primal_value = 0;
  for (int j = 0; j < n; ++j) primal_value += problem.objective()[j] * solution.x[j];
  if (primal_value != solution.value) return false;
  Rational dual_value = 0;
  for (int i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) {
      if (!problem.rows()[i][j].is_zero()) lhs += problem.rows()[i][j] * solution.x[j];
    }
    if (lhs > problem.rhs()[i]) return false;
    dual_value += problem.rhs()[i] * solution.dual[i];
  }
  if (dual_value != solution.value) return false;
  for (int j = 0; j < n; ++j) {
    Rational reduced = 0;
    for (int i = 0; i < m; ++i) {
      if (!problem.rows()[i][j].is_zero()) reduced += problem.rows()[i][j] * solution.dual[i];
    }
    if (reduced < problem.objective()[j]) return false;
  }
  return true;
}

bool verify_infeasible(const Problem& problem, const Solution& solution) {
  if (solution.status != Status::kInfeasible) return false;
  const int n = problem.var_count();
  const int m = problem.row_count();
  if (static_cast<int>(solution.farkas.size()) != m) return false;
  for (const Rational& v : solution.farkas) {
    if (v.sign() < 0) return false;
  }
  for (int j = 0; j < n; ++j) {
    Rational combo = 0;
    for (int i = 0; i < m; ++i) {
      if (!problem.rows()[i][j].is_zero()) combo += problem.rows()[i][j] * solution.farkas[i];
    }
    if (combo.sign() < 0) return false;
  }
  Rational bound = 0;
  for (int i = 0; i < m; ++i) bound += problem.rhs()[i] * solution.farkas[i];
  return bound.sign() < 0;
}

}  // namespace rmpsd::lp
