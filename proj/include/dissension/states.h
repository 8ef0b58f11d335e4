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

#ifndef DISSENSION_STATES_H
#define DISSENSION_STATES_H

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissension/qformalism.h"

namespace dissension {

class UnknownStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StateRecipe {
  std::string name;
  std::map<std::string, double> params;

  /// Parses "name" or "name:key=value,key=value".
  static StateRecipe parse(const std::string& text);
  std::string to_string() const;
};

struct ParamSpec {
  std::string name;
  double lo;
  double hi;
  double default_value;
  std::string description;
};

struct CatalogEntry {
  std::string name;
  std::size_t qubits;
  std::vector<ParamSpec> params;
  std::string description;
};

/// Every named state, in a stable order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);

/// Throws UnknownStateError or ParameterError.
DensityOperator build(const StateRecipe& recipe);

/// Two-component separable mixture; 'c' slots use |0>,|1>, 'q' slots |+>,|0>.
DensityOperator separable_pattern(const std::string& pattern);

DensityOperator ghz(std::size_t n);
DensityOperator w_state(std::size_t n);

/// The generalized Werner state with mixing p, local parameter l, nonlocal k.
DensityOperator generalized_werner(double p, Complex l, double k);

/// Separability bound on p for the generalized Werner state.
double generalized_werner_separable_bound(double k);

/// Haar-random pure state on a canonical register.
DensityOperator random_pure(std::size_t n, std::mt19937_64& rng);

/// Hilbert-Schmidt random mixed state (Ginibre).
DensityOperator random_mixed(std::size_t n, std::mt19937_64& rng);

/// Haar-random single-qubit unitary.
CMatrix random_unitary_2(std::mt19937_64& rng);

/// JSON matrix format {"register": [...], "matrix_re": [[...]], "matrix_im": [[...]]}.
std::string state_to_json(const DensityOperator& r);

/// Parses the JSON matrix format without validating the invariants.
DensityOperator state_from_json(const std::string& text);

}  // namespace dissension

#endif  // DISSENSION_STATES_H
