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

#ifndef DISSENSION_QFORMALISM_H
#define DISSENSION_QFORMALISM_H

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dissension {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// A set of qubit labels. Order is only significant where a function says so.
using LabelSet = std::vector<std::string>;

inline constexpr std::size_t kMaxQubits = 8;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

/// Unknown, duplicate, or colliding qubit labels.
class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix or ket that violates the density-operator invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QubitLabel {
  std::string name;
  std::size_t position = 0;
};

/// Ordered list of unique qubit labels. Position i is the i-th tensor factor.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<std::string> names);

  /// x, y, z, w for n <= 4, else x1..xn.
  static Register canonical(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  QubitLabel label(std::size_t position) const;
  std::size_t position(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Returns the labels of `subset` sorted by register position.
  /// Throws LabelError for unknown or repeated labels.
  LabelSet in_order(const LabelSet& subset) const;

  /// Labels of this register that are not in `subset`, in register order.
  LabelSet complement(const LabelSet& subset) const;

  Register concat(const Register& other) const;

  bool operator==(const Register& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

class Ket {
 public:
  /// Stores the amplitudes as given; normalization is checked by from_pure.
  Ket(CVector amplitudes, Register reg);

  /// Rescales the amplitudes to unit norm.
  static Ket normalized(CVector amplitudes, Register reg);

  const CVector& amplitudes() const { return amplitudes_; }
  const Register& reg() const { return reg_; }

 private:
  CVector amplitudes_;
  Register reg_;
};

class DensityOperator {
 public:
  /// Checks Hermiticity, unit trace and positivity; throws ValidationError.
  DensityOperator(CMatrix matrix, Register reg);

  /// Skips the invariant checks (still checks the shape). Used for
  /// intermediate results and for inputs that are about to be validated.
  static DensityOperator unchecked(CMatrix matrix, Register reg);

  const CMatrix& matrix() const { return matrix_; }
  const Register& reg() const { return reg_; }
  std::size_t num_qubits() const { return reg_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  DensityOperator() = default;
  CMatrix matrix_;
  Register reg_;
};

struct ValidationReport {
  double hermiticity_defect = 0;  // max |M_ij - conj(M_ji)|
  double trace_defect = 0;        // |tr M - 1|
  double min_eigenvalue = 0;      // of the Hermitian part
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const { return hermitian && unit_trace && positive; }
  std::string summary() const;
};

ValidationReport validate(const CMatrix& matrix);
ValidationReport validate(const DensityOperator& r);

DensityOperator from_pure(const Ket& k);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

/// Reduced state on `keep`; the result keeps register order.
DensityOperator partial_trace(const DensityOperator& r, const LabelSet& keep);

/// Convex combination of states on identical registers.
DensityOperator mix(const std::vector<double>& weights, const std::vector<DensityOperator>& states);

/// Same physical state with tensor factors rearranged into `order`
/// (a permutation of the register labels).
DensityOperator reorder(const DensityOperator& r, const LabelSet& order);

/// Reduced matrix over `ordered_keep` with tensor factors in exactly the given
/// order. No validation; the hot path for entropy evaluations.
CMatrix reduced_matrix(const DensityOperator& r, const LabelSet& ordered_keep);

/// Same as above on raw positions of an n-qubit matrix.
CMatrix reduced_matrix(const CMatrix& m, std::size_t n, const std::vector<std::size_t>& positions);

}  // namespace dissension

#endif  // DISSENSION_QFORMALISM_H
