// Copyright 2026 The Dissension Authors
//
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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dissension/dissension.h"
#include "dissension/optim.h"
#include "dissension/states.h"
#include "test_util.h"

using namespace dissension;

TEST_CASE("minimize a quadratic") {
  Objective f = [](std::span<const double> v) {
    double s = 0;
    for (double x : v) s += (x - 1) * (x - 1);
    return s;
  };
  OptimizerConfig cfg;
  cfg.restarts = 3;
  auto res = minimize(f, {{-3, 3}, {-3, 3}, {-3, 3}}, cfg);
  CHECK(res.value < 1e-6);
  for (double x : res.argmin) CHECK_NEAR(x, 1.0, 1e-3);
  CHECK(res.restarts_used == 3);
  CHECK(res.history.size() == 3);
}

TEST_CASE("minimize is deterministic for a fixed seed") {
  Objective f = [](std::span<const double> v) { return std::sin(3 * v[0]) * std::cos(2 * v[1]) + 0.1 * v[0]; };
  OptimizerConfig cfg;
  cfg.seed = 99;
  auto a = minimize(f, {{-2, 2}, {-2, 2}}, cfg);
  auto b = minimize(f, {{-2, 2}, {-2, 2}}, cfg);
  CHECK(a.argmin == b.argmin);
  CHECK(a.value == b.value);
}

TEST_CASE("monotone in restarts") {
  Objective f = [](std::span<const double> v) { return std::sin(5 * v[0]) + std::sin(7 * v[1]) + 0.01 * v[0]; };
  OptimizerConfig cfg;
  cfg.restarts = 4;
  auto few = minimize(f, {{-3, 3}, {-3, 3}}, cfg);
  cfg.restarts = 8;
  auto more = minimize(f, {{-3, 3}, {-3, 3}}, cfg);
  CHECK(more.value <= few.value);
  for (std::size_t k = 0; k < few.history.size(); k++) CHECK(more.history[k] == few.history[k]);
}

TEST_CASE("non-finite values abort only that restart") {
  int calls = 0;
  Objective f = [&calls](std::span<const double> v) {
    calls++;
    return v[0] < -0.5 ? std::nan("") : (v[0] - 0.3) * (v[0] - 0.3);
  };
  OptimizerConfig cfg;
  cfg.restarts = 6;
  auto res = minimize(f, {{-1, 1}}, cfg);
  CHECK(res.failed_restarts > 0);
  CHECK(std::isfinite(res.value));
  CHECK(res.value < 1e-8);
}

TEST_CASE("config checks") {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  cfg = {};
  cfg.simplex_tolerance = 0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
}

TEST_CASE("grid_oracle") {
  OptimizerConfig cfg;
  Objective c = [](std::span<const double>) { return 4.5; };
  CHECK(grid_oracle(c, {{0, 1}, {0, 1}}, cfg).value == 4.5);
  std::vector<Bound> seven(7, Bound{0, 1});
  CHECK_THROWS_AS(grid_oracle(c, seven, cfg), std::invalid_argument);

  // Discord of rho_cq measured on the second qubit: one group, two angles.
  auto cq = build(StateRecipe::parse("cq"));
  auto spec = DissensionSpec{1, Track::kOne, "y", {"x", "y"}};
  auto groups = group_objectives(cq, spec);
  REQUIRE(groups.size() == 1);
  double v = dissension_offset(cq, spec) + grid_oracle(groups[0].f, groups[0].bounds, cfg).value;
  CHECK_NEAR(v, 0.2, 0.01);
}

TEST_CASE("GHZ-3 objective: optimizer and grid agree") {
  auto g3 = ghz(3);
  DissensionSpec spec{1, Track::kOne, "z", {"x", "y", "z"}};
  OptimizerConfig cfg;
  CHECK_NEAR(dissension::dissension(g3, spec, cfg).value, -2.0, 0.01);

  auto joint = dissension::testing::joint_objective(g3, spec);
  CHECK(joint.bounds.size() == 4);
  cfg.grid_density = 20;
  CHECK_NEAR(grid_oracle(joint.f, joint.bounds, cfg).value, -2.0, 0.02);
}
