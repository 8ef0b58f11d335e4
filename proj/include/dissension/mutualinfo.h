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

#ifndef DISSENSION_MUTUALINFO_H
#define DISSENSION_MUTUALINFO_H

#include <stdexcept>
#include <vector>

#include "dissension/measurement.h"
#include "dissension/qformalism.h"

namespace dissension {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Disjoint, nonempty parts covering a register. A multi-qubit part acts as
/// one composite variable.
class Partition {
 public:
  Partition(const Register& reg, std::vector<LabelSet> parts);

  /// One part per qubit, in register order.
  static Partition singletons(const Register& reg);

  const std::vector<LabelSet>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

 private:
  std::vector<LabelSet> parts_;
};

double bipartite_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b);

enum class MeasuredSide {
  kB,     // I_Y = S(a) - S(a|b), basis on b
  kA,     // I_X = S(b) - S(b|a), basis on a
  kBoth,  // I_a = S(ab) - S(a|b) - S(b|a), bases on both
};

/// `basis_a` is only read for kA/kBoth and `basis_b` for kB/kBoth.
double measured_bipartite_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b, MeasuredSide side,
                             const ProjectiveBasis* basis_a, const ProjectiveBasis* basis_b);

double interaction_information(const DensityOperator& r, const Partition& parts);
double total_correlation(const DensityOperator& r, const Partition& parts);
double binding_information(const DensityOperator& r, const Partition& parts);

/// S(a|c) + S(b|c) - S(ab|c), one basis on c.
double measured_conditional_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b, const LabelSet& c,
                               const ProjectiveBasis& basis_c);

/// Bipartite discord function I(T:C) - I_C(T:C) on the reduced state of T
/// and C, with the given basis on C.
double bipartite_discord_function(const DensityOperator& r, const LabelSet& target, const LabelSet& cond,
                                  const ProjectiveBasis& basis_cond);

}  // namespace dissension

#endif  // DISSENSION_MUTUALINFO_H
