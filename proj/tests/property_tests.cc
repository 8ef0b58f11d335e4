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
#include "properties.h"

using namespace dissension;
using namespace dissension::properties;

namespace {

void expect(const PropertyResult& r) {
  INFO(r.name, " worst ", r.worst, " ", r.first_failure);
  CHECK(r.instances >= kInstances);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("entropy subadditivity") { expect(subadditivity(11)); }
TEST_CASE("relative-entropy forms") { expect(relative_entropy_forms(12)); }
TEST_CASE("I = I_s + I_0") { expect(venn_identity(13)); }
TEST_CASE("pure states have I = I_s") { expect(pure_state_identity(14)); }
TEST_CASE("non-negativity") { expect(nonnegativity(15)); }
TEST_CASE("discord decomposition") { expect(decomposition(16)); }
TEST_CASE("permutation covariance") { expect(permutation_covariance(17, OptimizerConfig{})); }
TEST_CASE("local-unitary invariance") { expect(local_unitary_invariance(18, OptimizerConfig{})); }
TEST_CASE("optimizer against grid oracle") { expect(optimizer_vs_grid(19, OptimizerConfig{})); }
