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

#ifndef DISSENSION_DISSENSION_H
#define DISSENSION_DISSENSION_H

#include <string>
#include <utility>
#include <vector>

#include "dissension/measurement.h"
#include "dissension/optim.h"
#include "dissension/qformalism.h"

namespace dissension {

enum class Track { kOne = 1, kTwo = 2 };

struct DissensionSpec {
  int m = 1;
  Track track = Track::kOne;
  std::string anchor;                  // the vector entry; ignored when symmetric()
  std::vector<std::string> party_order;  // n = party_order.size()

  std::size_t n() const { return party_order.size(); }

  /// Track-II with m = n - 1 has one value, not one per party.
  bool symmetric() const { return track == Track::kTwo && static_cast<std::size_t>(m) + 1 == n(); }

  /// Throws std::invalid_argument for unsupported (n, m) or an unknown anchor.
  void check() const;

  /// The parties relabelled x1..xn for the expression builder. Cyclic from the
  /// anchor: for m = 1 the anchor is last, for m >= 2 it is first.
  std::vector<std::string> canonical_order() const;
};

struct EntropyTerm {
  int coefficient;
  LabelSet subset;
};

struct ConditionalTerm {
  int coefficient;
  LabelSet target;
  LabelSet condition;
};

/// sum c S(subset) + sum c S(target | condition). Subsets are stored in party
/// order; identical terms are merged.
struct ConditionedExpression {
  std::vector<EntropyTerm> unconditioned;
  std::vector<ConditionalTerm> conditioned;

  /// Distinct conditioning subsets, in order of first appearance.
  std::vector<LabelSet> conditioning_subsets() const;
  std::string to_string() const;
};

ConditionedExpression build_expression(const DissensionSpec& spec);

/// Throws std::invalid_argument when a conditioning subset has no basis.
double evaluate_expression(const DensityOperator& r, const ConditionedExpression& e, const MeasurementAssignment& a);

/// (-1)^n (I_0 - I_m^t) at a fixed assignment.
double dissension_function(const DensityOperator& r, const DissensionSpec& spec, const MeasurementAssignment& a);

/// The part of D that no basis affects.
double dissension_offset(const DensityOperator& r, const DissensionSpec& spec);

/// The basis-dependent part of D restricted to one conditioning subset:
/// f(params) = (-1)^n * -(sum c S(T|subset)). D at the optimum is
/// dissension_offset plus the sum of every group's minimum.
struct GroupObjective {
  LabelSet subset;                               // register order; basis tensor order
  std::vector<std::pair<int, LabelSet>> terms;  // (coefficient, target)
  std::vector<Bound> bounds;
  Objective f;
};

std::vector<GroupObjective> group_objectives(const DensityOperator& r, const DissensionSpec& spec);

struct DissensionResult {
  std::string anchor;
  double value = 0;
  MeasurementAssignment argmin;
  std::vector<std::pair<LabelSet, std::vector<double>>> argmin_params;  // basis parameters per subset
  int restarts_used = 0;
  std::vector<double> best_objective_history;  // best total after each restart
  bool converged = false;
  long evaluations = 0;
  int reused_groups = 0;  // subset minimizations shared with earlier entries of a vector
};

DissensionResult dissension(const DensityOperator& r, const DissensionSpec& spec, const OptimizerConfig& cfg);

struct DissensionVector {
  int m = 1;
  Track track = Track::kOne;
  bool symmetric = false;
  std::vector<DissensionResult> entries;  // party order; one entry when symmetric

  const DissensionResult& at(const std::string& anchor) const;
  std::vector<double> values() const;
  bool converged() const;
};

/// One entry per register label (party order = register order).
DissensionVector dissension_vector(const DensityOperator& r, int m, Track track, const OptimizerConfig& cfg);

/// Same, for an explicit party order.
DissensionVector dissension_vector(const DensityOperator& r, int m, Track track, const OptimizerConfig& cfg,
                                   const std::vector<std::string>& party_order);

struct DiscordVector {
  double delta_x = 0;  // measurement on the first qubit
  double delta_y = 0;  // measurement on the second qubit
  double delta_a = 0;  // both measured
  bool converged = false;
};

DiscordVector discord_vector(const DensityOperator& r, const OptimizerConfig& cfg);

double average_dissension(const DissensionVector& v);

struct DecompositionCheck {
  double lhs;
  double rhs;
};

/// lhs: dissension_function. rhs: (-1)^(n+1) sum_terms c D(T:C), with D the
/// bipartite discord function of the reduced state on T and C.
DecompositionCheck discord_decomposition(const DensityOperator& r, const DissensionSpec& spec,
                                         const MeasurementAssignment& a);

std::string track_name(Track t);

}  // namespace dissension

#endif  // DISSENSION_DISSENSION_H
