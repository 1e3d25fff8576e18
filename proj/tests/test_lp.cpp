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

#include <doctest.h>

#include <optional>

#include "rmpsd/random_gen.hpp"

using namespace rmpsd;
using lp::Problem;
using lp::Solution;
using lp::Status;

TEST_CASE("textbook two-variable maximum") {
  // max 3x + 2y st x + y <= 4, x + 3y <= 6.
  Problem p(2);
  p.set_objective(0, 3);
  p.set_objective(1, 2);
  p.add_le({{0, 1}, {1, 1}}, Rational(4));
  p.add_le({{0, 1}, {1, 3}}, Rational(6));
  Solution s = lp::solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == Rational(12));
  CHECK(s.x[0] == Rational(4));
  CHECK(s.x[1] == Rational(0));
  CHECK(lp::verify_optimal(p, s));
}

TEST_CASE("greater-equal rows need phase one") {
  // max x + y st x + y <= 5, x >= 2, y >= 1.
  Problem p(2);
  p.set_objective(0, 1);
  p.set_objective(1, 1);
  p.add_le({{0, 1}, {1, 1}}, Rational(5));
  p.add_ge({{0, 1}}, Rational(2));
  p.add_ge({{1, 1}}, Rational(1));
  Solution s = lp::solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == Rational(5));
  CHECK(lp::verify_optimal(p, s));
}

TEST_CASE("infeasible and unbounded are detected") {
  Problem inf(1);
  inf.set_objective(0, 1);
  inf.add_le({{0, 1}}, Rational(1));
  inf.add_ge({{0, 1}}, Rational(2));
  CHECK(lp::solve(inf).status == Status::kInfeasible);

  Problem unb(2);
  unb.set_objective(0, 1);
  unb.add_le({{1, 1}}, Rational(3));
  Solution s = lp::solve(unb);
  REQUIRE(s.status == Status::kUnbounded);
  REQUIRE(s.ray.size() == 2);
  CHECK(s.ray[0].sign() > 0);  // improving direction
}

TEST_CASE("degenerate cycling-prone program terminates with Bland") {
  // Beale's classic cycling example; the optimum is 1/20.
  Problem p(4);
  p.set_objective(0, Rational(3, 4));
  p.set_objective(1, Rational(-150));
  p.set_objective(2, Rational(1, 50));
  p.set_objective(3, Rational(-6));
  p.add_le({{0, Rational(1, 4)}, {1, Rational(-60)}, {2, Rational(-1, 25)}, {3, Rational(9)}},
           Rational(0));
  p.add_le({{0, Rational(1, 2)}, {1, Rational(-90)}, {2, Rational(-1, 50)}, {3, Rational(3)}},
           Rational(0));
  p.add_le({{2, Rational(1)}}, Rational(1));
  Solution s = lp::solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.value == Rational(1, 20));
  CHECK(lp::verify_optimal(p, s));
}

TEST_CASE("redundant equality rows survive phase one") {
  // x = 2 written twice, plus x + y <= 3.
  Problem p(2);
  p.set_objective(1, 1);
  p.add_ge({{0, 1}}, Rational(2));
  p.add_le({{0, 1}}, Rational(2));
  p.add_ge({{0, 1}}, Rational(2));
  p.add_le({{0, 1}, {1, 1}}, Rational(3));
  Solution s = lp::solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.x[0] == Rational(2));
  CHECK(s.value == Rational(1));
  CHECK(lp::verify_optimal(p, s));
}

namespace {

// Independent 2D oracle: the optimum of a bounded feasible 2-variable LP sits
// on an intersection of two constraint boundaries (axes included), so try
// them all.
std::optional<Rational> best_vertex_2d(const Problem& p) {
  std::vector<std::vector<Rational>> lines;  // a*x + b*y = c
  for (int r = 0; r < p.row_count(); ++r) {
    lines.push_back({p.rows()[r][0], p.rows()[r][1], p.rhs()[r]});
  }
  lines.push_back({Rational(1), Rational(0), Rational(0)});
  lines.push_back({Rational(0), Rational(1), Rational(0)});
  std::optional<Rational> best;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const Rational det = lines[a][0] * lines[b][1] - lines[a][1] * lines[b][0];
      if (det.is_zero()) continue;
      const Rational x = (lines[a][2] * lines[b][1] - lines[a][1] * lines[b][2]) / det;
      const Rational y = (lines[a][0] * lines[b][2] - lines[a][2] * lines[b][0]) / det;
      if (x.sign() < 0 || y.sign() < 0) continue;
      bool feasible = true;
      for (int r = 0; r < p.row_count() && feasible; ++r) {
        feasible = p.rows()[r][0] * x + p.rows()[r][1] * y <= p.rhs()[r];
      }
      if (!feasible) continue;
      Rational value = p.objective()[0] * x + p.objective()[1] * y;
      if (!best || value > *best) best = value;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("random 2D programs match the vertex-enumeration oracle") {
  Rng rng(99);
  int optimal_seen = 0;
  for (int t = 0; t < 300; ++t) {
    Problem p(2);
    p.set_objective(0, Rational(rng.uniform(-4, 6)));
    p.set_objective(1, Rational(rng.uniform(-4, 6)));
    const int rows = static_cast<int>(rng.uniform(1, 5));
    for (int r = 0; r < rows; ++r) {
      p.add_le({{0, Rational(rng.uniform(-3, 5))}, {1, Rational(rng.uniform(-3, 5))}},
               Rational(rng.uniform(-2, 10)));
    }
    // Keep the region bounded so the vertex oracle applies.
    p.add_le({{0, 1}, {1, 1}}, Rational(rng.uniform(1, 12)));

    Solution s = lp::solve(p);
    std::optional<Rational> oracle = best_vertex_2d(p);
    if (s.status == Status::kInfeasible) {
      CHECK_FALSE(oracle.has_value());
      continue;
    }
    REQUIRE(s.status == Status::kOptimal);
    ++optimal_seen;
    REQUIRE(oracle.has_value());
    CHECK(s.value == *oracle);
    CHECK(lp::verify_optimal(p, s));
  }
  CHECK(optimal_seen > 100);
}

TEST_CASE("the dual path falls back when its own problem is infeasible") {
  // No rows and a positive objective: the dual has no feasible multipliers,
  // and the primal is unbounded.
  Problem unb(1);
  unb.set_objective(0, 1);
  CHECK(lp::solve_wide(unb).status == Status::kUnbounded);

  // Same shape with a hopeless row: primal infeasible instead.
  Problem inf(1);
  inf.set_objective(0, 1);
  inf.add_le({{0, Rational(1)}}, Rational(-1));
  inf.add_le({{0, Rational(-1)}}, Rational(-1));
  CHECK(lp::solve_wide(inf).status == Status::kInfeasible);
}

TEST_CASE("the dual path agrees with the primal path") {
  Rng rng(1234);
  int infeasible_seen = 0;
  for (int t = 0; t < 200; ++t) {
    const int vars = static_cast<int>(rng.uniform(1, 4));
    Problem p(vars);
    for (int v = 0; v < vars; ++v) p.set_objective(v, Rational(rng.uniform(0, 5)));
    // Cover every variable with an upper bound so the objective stays
    // bounded, mirroring the pricing problems this path is used for.
    for (int v = 0; v < vars; ++v) p.add_le({{v, Rational(1)}}, Rational(rng.uniform(0, 8)));
    const int extra = static_cast<int>(rng.uniform(0, 6));
    for (int r = 0; r < extra; ++r) {
      std::vector<std::pair<int, Rational>> terms;
      for (int v = 0; v < vars; ++v) terms.emplace_back(v, Rational(rng.uniform(-2, 3)));
      if (rng.chance(50)) {
        p.add_le(terms, Rational(rng.uniform(-1, 9)));
      } else {
        p.add_ge(terms, Rational(rng.uniform(-4, 4)));
      }
    }
    Solution primal = lp::solve(p);
    Solution wide = lp::solve_wide(p);
    CHECK(primal.status == wide.status);
    if (primal.status == Status::kOptimal) {
      CHECK(primal.value == wide.value);
      CHECK(lp::verify_optimal(p, wide));
    } else if (primal.status == Status::kInfeasible) {
      ++infeasible_seen;
      REQUIRE_FALSE(wide.farkas.empty());
      CHECK(lp::verify_infeasible(p, wide));
    }
  }
  CHECK(infeasible_seen > 10);
}
