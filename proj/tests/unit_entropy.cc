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
#include <limits>

#include "doctest.h"
#include "dissension/entropy.h"
#include "dissension/states.h"
#include "test_util.h"

using namespace dissension;
using dissension::testing::diag;
using dissension::testing::pure;

TEST_CASE("von_neumann") {
  CHECK_NEAR(von_neumann(diag({0.5, 0.5}, 1)), 1.0, 1e-12);
  CHECK_NEAR(von_neumann(pure({1, 2, 0, 1}, 2)), 0.0, 1e-12);
  CHECK_NEAR(von_neumann(partial_trace(ghz(3), {"x", "y"})), 1.0, 1e-12);
  CHECK_NEAR(von_neumann(DensityOperator(CMatrix::Identity(8, 8) / 8.0, Register::canonical(3))), 3.0, 1e-12);
}

TEST_CASE("subsystem_entropy") {
  auto g3 = ghz(3);
  CHECK_NEAR(subsystem_entropy(g3, {"x"}), 1.0, 1e-12);
  CHECK_NEAR(subsystem_entropy(g3, {"x", "y", "z"}), 0.0, 1e-12);
  CHECK_NEAR(subsystem_entropy(separable_pattern("ccc"), {"x", "y"}), 1.0, 1e-12);
  CHECK_THROWS_AS(subsystem_entropy(g3, {"w"}), LabelError);
}

TEST_CASE("relative_entropy") {
  auto g2 = pure({1, 0, 0, 1}, 2);
  CHECK_NEAR(relative_entropy(g2, g2), 0.0, 1e-12);
  auto mm = DensityOperator(CMatrix::Identity(4, 4) / 4.0, Register::canonical(2));
  CHECK_NEAR(relative_entropy(g2, mm), 2.0, 1e-12);
  CHECK(relative_entropy(diag({1, 0}, 1), diag({0, 1}, 1)) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(relative_entropy(g2, ghz(3)), LabelError);
}

TEST_CASE("closed-form and fixed-size paths agree with the general solver") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u}) {
    auto r = random_mixed(n, rng);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(r.matrix(), Eigen::EigenvaluesOnly);
    CHECK_NEAR(entropy_bits(r.matrix()), entropy_of_spectrum(es.eigenvalues()), 1e-12);
  }
}
