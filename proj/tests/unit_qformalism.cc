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

#include "doctest.h"
#include "dissension/qformalism.h"
#include "dissension/states.h"
#include "test_util.h"

using namespace dissension;
using dissension::testing::diag;
using dissension::testing::max_abs_diff;
using dissension::testing::pure;

TEST_CASE("register labels") {
  auto r = Register::canonical(3);
  CHECK(r.names() == LabelSet{"x", "y", "z"});
  CHECK(Register::canonical(5).names()[4] == "x5");
  CHECK(r.position("z") == 2);
  CHECK(r.in_order({"z", "x"}) == LabelSet{"x", "z"});
  CHECK(r.complement({"y"}) == LabelSet{"x", "z"});
  CHECK_THROWS_AS(r.position("q"), LabelError);
  CHECK_THROWS_AS(Register({"a", "a"}), LabelError);
  CHECK_THROWS_AS(r.concat(Register({"x"})), LabelError);
}

TEST_CASE("from_pure") {
  auto zero = pure({1, 0}, 1);
  CHECK(max_abs_diff(zero.matrix(), diag({1, 0}, 1).matrix()) < 1e-15);

  auto plus = pure({1, 1}, 1);
  CHECK(max_abs_diff(plus.matrix(), CMatrix::Constant(2, 2, 0.5)) < 1e-15);

  auto g2 = pure({1, 0, 0, 1}, 2);
  CHECK_NEAR(g2.matrix()(0, 0).real(), 0.5, 1e-15);
  CHECK_NEAR(g2.matrix()(0, 3).real(), 0.5, 1e-15);
  CHECK_NEAR(g2.matrix()(3, 0).real(), 0.5, 1e-15);
  CHECK_NEAR(g2.matrix()(3, 3).real(), 0.5, 1e-15);
  CHECK_NEAR((g2.matrix() * g2.matrix()).trace().real(), 1.0, 1e-12);

  CVector v(2);
  v << 1, 1;
  CHECK_THROWS_AS(from_pure(Ket(v, Register::canonical(1))), ValidationError);
}

TEST_CASE("tensor_product") {
  auto zero = diag({1, 0}, 1);
  auto zz = tensor_product(zero, DensityOperator(zero.matrix(), Register({"y"})));
  CHECK(max_abs_diff(zz.matrix(), diag({1, 0, 0, 0}, 2).matrix()) < 1e-15);
  CHECK(zz.reg().names() == LabelSet{"x", "y"});

  auto half = DensityOperator(CMatrix::Identity(2, 2) / 2.0, Register({"x"}));
  auto both = tensor_product(half, DensityOperator(half.matrix(), Register({"y"})));
  CHECK(max_abs_diff(both.matrix(), CMatrix::Identity(4, 4) / 4.0) < 1e-15);

  auto g2 = pure({1, 0, 0, 1}, 2);
  auto prod = tensor_product(partial_trace(g2, {"x"}), partial_trace(g2, {"y"}));
  CHECK(max_abs_diff(prod.matrix(), CMatrix::Identity(4, 4) / 4.0) < 1e-12);

  CHECK_THROWS_AS(tensor_product(half, half), LabelError);
}

TEST_CASE("partial_trace") {
  auto g3 = ghz(3);
  for (auto keep : {LabelSet{"x", "y"}, LabelSet{"x", "z"}, LabelSet{"y", "z"}}) {
    auto t = partial_trace(g3, keep);
    CHECK(max_abs_diff(t.matrix(), diag({0.5, 0, 0, 0.5}, 2).matrix()) < 1e-12);
  }
  CHECK(max_abs_diff(partial_trace(pure({1, 0, 0, 1}, 2), {"y"}).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-12);
  CHECK(max_abs_diff(partial_trace(pure({0, 1, 0, 0}, 2), {"x"}).matrix(), diag({1, 0}, 1).matrix()) < 1e-12);
  CHECK_THROWS_AS(partial_trace(g3, {}), LabelError);
  CHECK_THROWS_AS(partial_trace(g3, {"q"}), LabelError);
}

TEST_CASE("partial_trace composes and inverts tensor_product") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; i++) {
    auto r = random_mixed(4, rng);
    auto twice = partial_trace(partial_trace(r, {"x", "y", "z"}), {"x", "z"});
    CHECK(max_abs_diff(twice.matrix(), partial_trace(r, {"x", "z"}).matrix()) < 1e-10);

    auto a = random_mixed(2, rng);
    auto b = DensityOperator(random_mixed(2, rng).matrix(), Register({"z", "w"}));
    CHECK(max_abs_diff(partial_trace(tensor_product(a, b), {"x", "y"}).matrix(), a.matrix()) < 1e-10);
  }
}

TEST_CASE("mix") {
  auto a = diag({1, 0}, 1);
  auto b = diag({0, 1}, 1);
  CHECK(max_abs_diff(mix({0, 1}, {a, b}).matrix(), b.matrix()) == 0);

  auto g2 = pure({1, 0, 0, 1}, 2);
  auto mm = DensityOperator(CMatrix::Identity(4, 4) / 4.0, Register::canonical(2));
  CHECK(max_abs_diff(mix({1, 0}, {mm, g2}).matrix(), mm.matrix()) < 1e-15);

  CVector v0 = CVector::Zero(16), v1 = CVector::Zero(16);
  v0[0] = 1;
  v1[15] = 1;
  auto cl = mix({0.5, 0.5}, {from_pure(Ket(v0, Register::canonical(4))), from_pure(Ket(v1, Register::canonical(4)))});
  CHECK_NEAR(cl.matrix()(0, 0).real(), 0.5, 1e-15);
  CHECK_NEAR(cl.matrix()(15, 15).real(), 0.5, 1e-15);
  CHECK(max_abs_diff(cl.matrix(), build(StateRecipe::parse("classical4")).matrix()) < 1e-15);

  CHECK_THROWS(mix({0.5, 0.6}, {a, b}));
  CHECK_THROWS(mix({0.5, 0.5}, {a, g2}));
}

TEST_CASE("validate") {
  CHECK(validate(CMatrix(CMatrix::Identity(2, 2) / 2.0)).ok());

  CMatrix m = CMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 1e-3;
  auto rep = validate(m);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.hermitian);
  CHECK_NEAR(rep.hermiticity_defect, 1e-3, 1e-12);

  auto g = validate(ghz(3));
  CHECK(g.ok());
  CHECK_NEAR(g.min_eigenvalue, 0.0, 1e-12);

  CHECK_THROWS_AS(DensityOperator(m, Register::canonical(1)), ValidationError);
}

TEST_CASE("reorder moves labels with their qubits") {
  auto r = pure({0, 1, 0, 0}, 2);  // |01>
  auto s = reorder(r, {"y", "x"});
  CHECK(s.reg().names() == LabelSet{"y", "x"});
  CHECK_NEAR(s.matrix()(2, 2).real(), 1.0, 1e-15);  // |1>_y |0>_x
}
