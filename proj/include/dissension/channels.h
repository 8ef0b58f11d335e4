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

#ifndef DISSENSION_CHANNELS_H
#define DISSENSION_CHANNELS_H

#include <string>
#include <vector>

#include "dissension/qformalism.h"

namespace dissension {

/// Single-qubit channel in Kraus form.
class KrausChannel {
 public:
  /// Throws std::invalid_argument unless every operator is 2x2 and
  /// sum E^dagger E = I within 1e-10.
  explicit KrausChannel(std::vector<CMatrix> operators);

  const std::vector<CMatrix>& operators() const { return operators_; }

 private:
  std::vector<CMatrix> operators_;
};

struct UnitalityReport {
  bool unital;
  double defect;  // max entry of |sum E E^dagger - I|
};

DensityOperator apply_local(const DensityOperator& r, const std::string& target, const KrausChannel& ch);

/// E1 = |0><0|, E2 = |n><1| with |n> = (|0> + n|1>)/sqrt(1+n^2).
KrausChannel nonunital_channel(double n);

/// {sqrt(1-q) I, sqrt(q) Z}.
KrausChannel phase_flip_channel(double q);

KrausChannel identity_channel();

/// A single unitary as a channel.
KrausChannel unitary_channel(const CMatrix& u);

UnitalityReport is_unital(const KrausChannel& ch);

/// Channel JSON: [ {"re": [[..],[..]], "im": [[..],[..]]}, ... ].
KrausChannel channel_from_json(const std::string& text);

}  // namespace dissension

#endif  // DISSENSION_CHANNELS_H
