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

#ifndef DISSENSION_MEASUREMENT_H
#define DISSENSION_MEASUREMENT_H

#include <map>
#include <span>
#include <vector>

#include "dissension/qformalism.h"

namespace dissension {

/// Optimization coordinates of a basis on m qubits.
/// m = 1: (theta, phi). m >= 2: 4^m entries of a Hermitian generator H,
/// diagonal first, then (re, im) of the upper triangle in row-major order.
struct BasisParams {
  std::vector<double> values;
};

std::size_t basis_param_count(std::size_t m);

/// Parameters that give the computational basis (all zeros).
std::vector<double> computational_params(std::size_t m);

/// Parameters that give the Hadamard basis |+>,|-> on every qubit.
std::vector<double> hadamard_params(std::size_t m);

/// Unitary whose columns are the basis kets for the given parameters.
CMatrix basis_unitary(std::size_t m, std::span<const double> params);

/// Rank-one orthonormal basis on an ordered qubit subset.
class ProjectiveBasis {
 public:
  /// Columns of `vectors` are the basis kets, with tensor order = `subset`.
  /// Throws std::invalid_argument if they are not orthonormal within 1e-10.
  ProjectiveBasis(LabelSet subset, CMatrix vectors);

  const LabelSet& subset() const { return subset_; }
  std::size_t size() const { return subset_.size(); }
  const CMatrix& vectors() const { return vectors_; }
  CMatrix projector(std::size_t i) const;
  std::vector<CMatrix> projectors() const;

 private:
  LabelSet subset_;
  CMatrix vectors_;
};

ProjectiveBasis basis_from_params(const LabelSet& subset, const BasisParams& p);
ProjectiveBasis basis_from_params(const LabelSet& subset, std::span<const double> p);

struct ConditionalOutcome {
  double probability;
  DensityOperator state;  // on the complement of the measured subset
};

/// Post-measurement ensemble of the unmeasured qubits. Outcomes with
/// probability below 1e-12 are dropped.
std::vector<ConditionalOutcome> conditional_ensemble(const DensityOperator& r, const ProjectiveBasis& b);

/// sum_i p_i S(target | outcome i) with the basis acting on `cond`.
double measured_conditional_entropy(const DensityOperator& r, const LabelSet& target, const LabelSet& cond,
                                    const ProjectiveBasis& b);

/// Precomputes the reduced state on target + cond so that the measured
/// conditional entropy can be evaluated for many bases quickly.
class ConditionalEntropyEvaluator {
 public:
  /// `cond` must be ordered like the bases passed to operator().
  ConditionalEntropyEvaluator(const DensityOperator& r, const LabelSet& target, const LabelSet& cond);

  /// `basis` is the unitary whose columns are the kets on `cond`.
  double operator()(const CMatrix& basis) const;

 private:
  CMatrix reduced_;  // tensor order (target, cond)
  Eigen::Index dt_ = 0;
  Eigen::Index dc_ = 0;
};

/// Canonical key of a conditioning subset: labels sorted by name.
LabelSet subset_key(const LabelSet& subset);

/// One basis per conditioning subset.
class MeasurementAssignment {
 public:
  void set(ProjectiveBasis b);
  const ProjectiveBasis* find(const LabelSet& subset) const;
  const ProjectiveBasis& at(const LabelSet& subset) const;
  const std::map<LabelSet, ProjectiveBasis>& entries() const { return entries_; }

  /// Computational basis on every listed subset (register order within each).
  static MeasurementAssignment computational(const Register& reg, const std::vector<LabelSet>& subsets);
  static MeasurementAssignment hadamard(const Register& reg, const std::vector<LabelSet>& subsets);

 private:
  std::map<LabelSet, ProjectiveBasis> entries_;
};

}  // namespace dissension

#endif  // DISSENSION_MEASUREMENT_H
