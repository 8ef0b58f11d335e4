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

#ifndef DISSENSION_ENTROPY_H
#define DISSENSION_ENTROPY_H

#include "dissension/qformalism.h"

namespace dissension {

/// Eigenvalues at or below this are treated as exact zeros.
inline constexpr double kZeroEigenvalue = 1e-12;

/// All entropies are in bits.
double von_neumann(const DensityOperator& r);
double subsystem_entropy(const DensityOperator& r, const LabelSet& subset);

/// +infinity when the support of r is not contained in the support of s.
double relative_entropy(const DensityOperator& r, const DensityOperator& s);

/// Unchecked entropy of a Hermitian matrix (trace need not be 1; the
/// eigenvalues are used as given). Used on hot paths.
double entropy_bits(const CMatrix& hermitian);

/// -sum l log2 l over l > kZeroEigenvalue.
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);

}  // namespace dissension

#endif  // DISSENSION_ENTROPY_H
