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

#include <algorithm>

#include "doctest.h"
#include "dissension/entropy.h"
#include "dissension/states.h"
#include "test_util.h"

using namespace dissension;
using dissension::testing::max_abs_diff;

namespace {

// Smallest eigenvalue of the partial transpose on the first qubit.
double ppt_min(const DensityOperator& r) {
  CMatrix m = r.matrix();
  CMatrix t(4, 4);
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++)
      for (int c = 0; c < 2; c++)
        for (int d = 0; d < 2; d++) t(2 * a + b, 2 * c + d) = m(2 * c + b, 2 * a + d);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(t);
  return es.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("ghz") {
  auto g = ghz(3);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g.matrix());
  CHECK(std::count_if(es.eigenvalues().begin(), es.eigenvalues().end(), [](double l) { return l > 1e-12; }) == 1);
  for (const auto& l : g.reg().names()) {
    CHECK(max_abs_diff(partial_trace(g, {l}).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-12);
  }
}

TEST_CASE("separable patterns") {
  auto ccq = separable_pattern("ccq");
  CVector a = CVector::Zero(8), b = CVector::Zero(8);
  a[0] = a[1] = 1 / std::sqrt(2.0);  // |00+>
  b[6] = 1;                          // |110>
  CMatrix expect = 0.5 * (a * a.adjoint() + b * b.adjoint());
  CHECK(max_abs_diff(ccq.matrix(), expect) < 1e-12);
  CHECK_THROWS(separable_pattern("cxq"));
}

TEST_CASE("pattern marginals: c slots diagonal, q slots not") {
  for (const auto& e : catalog()) {
    const auto& n = e.name;
    if (n.size() != e.qubits || n.find_first_not_of("cq") != std::string::npos) continue;
    auto r = build(StateRecipe::parse(n));
    for (std::size_t i = 0; i < n.size(); i++) {
      auto off = std::abs(partial_trace(r, {r.reg().names()[i]}).matrix()(0, 1));
      if (n[i] == 'c') {
        CHECK(off < 1e-12);
      } else {
        CHECK(off > 0.1);
      }
    }
  }
}

TEST_CASE("catalog") {
  const auto& c = catalog();
  auto find = [&c](const std::string& name) {
    return std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
  };
  REQUIRE(find("omega") != c.end());
  CHECK(find("omega")->qubits == 4);
  REQUIRE(find("wc") != c.end());
  auto wc = build(StateRecipe::parse("wc"));
  CHECK_NEAR(wc.matrix()(3, 5).real(), 1.0 / 3, 1e-12);
  int patterns4 = 0;
  for (const auto& e : c) {
    if (e.qubits == 4 && e.name.size() == 4 && e.name.find_first_not_of("cq") == std::string::npos) patterns4++;
  }
  CHECK(patterns4 == 16);
  CHECK_THROWS_AS(build(StateRecipe::parse("nope")), UnknownStateError);
  CHECK_THROWS_AS(build(StateRecipe::parse("werner2:p=2")), ParameterError);
  CHECK_THROWS_AS(build(StateRecipe::parse("werner2:q=0.5")), ParameterError);
}

TEST_CASE("every catalog state is valid") {
  for (const auto& e : catalog()) {
    auto r = build(StateRecipe{e.name, {}});
    CHECK_MESSAGE(validate(r).ok(), e.name);
    CHECK(r.num_qubits() == e.qubits);
  }
}

TEST_CASE("mixture endpoints") {
  for (std::size_t n : {2u, 3u, 4u}) {
    std::string name = "werner" + std::to_string(n);
    const auto d = static_cast<Eigen::Index>(1) << n;
    auto zero = build(StateRecipe::parse(name + ":p=0"));
    CHECK(max_abs_diff(zero.matrix(), CMatrix::Identity(d, d) / static_cast<double>(d)) < 1e-15);
    auto one = build(StateRecipe::parse(name + ":p=1"));
    CHECK(max_abs_diff(one.matrix(), ghz(n).matrix()) < 1e-15);
  }
  CHECK(max_abs_diff(build(StateRecipe::parse("wg3:p=0")).matrix(), w_state(3).matrix()) < 1e-15);
  CHECK(max_abs_diff(build(StateRecipe::parse("wg3:p=1")).matrix(), ghz(3).matrix()) < 1e-15);
}

TEST_CASE("generalized Werner separability bound") {
  for (double k : {0.0, 0.5, 1.0, 2.0}) {
    double p = generalized_werner_separable_bound(k);
    CHECK(ppt_min(generalized_werner(p, 1.0, k)) > -1e-10);
    CHECK(ppt_min(generalized_werner(std::min(1.0, p + 0.05), 1.0, k)) < 0);
  }
  CHECK_NEAR(generalized_werner_separable_bound(1.0), 1.0 / 3, 1e-15);
}

TEST_CASE("recipes and JSON") {
  auto r = StateRecipe::parse("generalized_werner:p=0.25,k=2");
  CHECK(r.name == "generalized_werner");
  CHECK(r.params.at("k") == 2);
  CHECK(StateRecipe::parse(r.to_string()).params == r.params);
  CHECK_THROWS(StateRecipe::parse("werner2:p"));

  auto s = build(StateRecipe::parse("rho_m"));
  auto back = state_from_json(state_to_json(s));
  CHECK(back.reg() == s.reg());
  CHECK(max_abs_diff(back.matrix(), s.matrix()) == 0);
}

TEST_CASE("random samplers give valid states") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; i++) {
    CHECK(validate(random_mixed(3, rng)).ok());
    auto p = random_pure(3, rng);
    CHECK(validate(p).ok());
    CHECK_NEAR(von_neumann(p), 0.0, 1e-9);
    CMatrix u = random_unitary_2(rng);
    CHECK(max_abs_diff(u * u.adjoint(), CMatrix::Identity(2, 2)) < 1e-12);
  }
}
