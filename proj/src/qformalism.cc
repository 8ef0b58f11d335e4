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

#include "dissension/qformalism.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace dissension {

namespace {

std::size_t dim_for(std::size_t n) { return std::size_t{1} << n; }

void check_shape(const CMatrix& m, const Register& reg) {
  if (reg.size() == 0 || reg.size() > kMaxQubits) {
    throw ValidationError("register size must be in 1.." + std::to_string(kMaxQubits));
  }
  auto d = static_cast<Eigen::Index>(dim_for(reg.size()));
  if (m.rows() != d || m.cols() != d) {
    throw ValidationError("matrix shape does not match a " + std::to_string(reg.size()) + "-qubit register");
  }
}

}  // namespace

Register::Register(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw LabelError("empty qubit label");
    }
    if (!seen.insert(n).second) {
      throw LabelError("duplicate qubit label '" + n + "'");
    }
  }
}

Register Register::canonical(std::size_t n) {
  static const char* kSmall[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; i++) {
    names.push_back(n <= 4 ? std::string(kSmall[i]) : "x" + std::to_string(i + 1));
  }
  return Register(std::move(names));
}

QubitLabel Register::label(std::size_t position) const {
  if (position >= names_.size()) {
    throw LabelError("qubit position out of range");
  }
  return {names_[position], position};
}

std::size_t Register::position(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); i++) {
    if (names_[i] == name) {
      return i;
    }
  }
  throw LabelError("unknown qubit label '" + std::string(name) + "'");
}

bool Register::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

LabelSet Register::in_order(const LabelSet& subset) const {
  std::vector<std::size_t> pos;
  for (const auto& s : subset) {
    pos.push_back(position(s));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) {
    throw LabelError("repeated label in subset");
  }
  LabelSet out;
  for (auto p : pos) {
    out.push_back(names_[p]);
  }
  return out;
}

LabelSet Register::complement(const LabelSet& subset) const {
  LabelSet sorted = in_order(subset);
  LabelSet out;
  for (const auto& n : names_) {
    if (std::find(sorted.begin(), sorted.end(), n) == sorted.end()) {
      out.push_back(n);
    }
  }
  return out;
}

Register Register::concat(const Register& other) const {
  std::vector<std::string> names = names_;
  for (const auto& n : other.names_) {
    if (contains(n)) {
      throw LabelError("label collision on '" + n + "'");
    }
    names.push_back(n);
  }
  return Register(std::move(names));
}

Ket::Ket(CVector amplitudes, Register reg) : amplitudes_(std::move(amplitudes)), reg_(std::move(reg)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_for(reg_.size())) {
    throw ValidationError("ket length does not match register");
  }
}

Ket Ket::normalized(CVector amplitudes, Register reg) {
  double n = amplitudes.norm();
  if (n == 0) {
    throw ValidationError("cannot normalize the zero vector");
  }
  return Ket(amplitudes / n, std::move(reg));
}

DensityOperator::DensityOperator(CMatrix matrix, Register reg) : matrix_(std::move(matrix)), reg_(std::move(reg)) {
  check_shape(matrix_, reg_);
  auto report = validate(matrix_);
  if (!report.ok()) {
    throw ValidationError("invalid density operator: " + report.summary());
  }
}

DensityOperator DensityOperator::unchecked(CMatrix matrix, Register reg) {
  check_shape(matrix, reg);
  DensityOperator r;
  r.matrix_ = std::move(matrix);
  r.reg_ = std::move(reg);
  return r;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << "hermiticity_defect=" << hermiticity_defect << " trace_defect=" << trace_defect
      << " min_eigenvalue=" << min_eigenvalue << (ok() ? " (pass)" : " (fail)");
  return out.str();
}

ValidationReport validate(const CMatrix& m) {
  ValidationReport rep;
  if (m.rows() != m.cols() || m.rows() == 0) {
    rep.hermiticity_defect = std::numeric_limits<double>::infinity();
    rep.trace_defect = std::numeric_limits<double>::infinity();
    rep.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_defect = std::abs(m.trace() - Complex(1, 0));
  CMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.hermitian = rep.hermiticity_defect <= kHermiticityTolerance;
  rep.unit_trace = rep.trace_defect <= kTraceTolerance;
  rep.positive = rep.min_eigenvalue >= -kEigenvalueFloor;
  return rep;
}

ValidationReport validate(const DensityOperator& r) { return validate(r.matrix()); }

DensityOperator from_pure(const Ket& k) {
  double defect = std::abs(k.amplitudes().squaredNorm() - 1.0);
  if (defect > kNormTolerance) {
    throw ValidationError("ket is not normalized (defect " + std::to_string(defect) + ")");
  }
  CMatrix m = k.amplitudes() * k.amplitudes().adjoint();
  return DensityOperator::unchecked(std::move(m), k.reg());
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  Register reg = a.reg().concat(b.reg());
  const CMatrix& A = a.matrix();
  const CMatrix& B = b.matrix();
  CMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); i++) {
    for (Eigen::Index j = 0; j < A.cols(); j++) {
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return DensityOperator::unchecked(std::move(out), std::move(reg));
}

CMatrix reduced_matrix(const CMatrix& m, std::size_t n, const std::vector<std::size_t>& positions) {
  const std::size_t r = positions.size();
  std::vector<bool> kept(n, false);
  for (auto p : positions) {
    kept[p] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; q++) {
    if (!kept[q]) {
      traced.push_back(q);
    }
  }
  // Position q is bit (n - 1 - q) of a basis index.
  auto scatter = [n](std::size_t value, const std::vector<std::size_t>& where) {
    std::size_t idx = 0;
    const std::size_t k = where.size();
    for (std::size_t i = 0; i < k; i++) {
      if ((value >> (k - 1 - i)) & 1) {
        idx |= std::size_t{1} << (n - 1 - where[i]);
      }
    }
    return idx;
  };
  const std::size_t dk = dim_for(r);
  const std::size_t de = dim_for(traced.size());
  std::vector<std::size_t> ki(dk), ti(de);
  for (std::size_t a = 0; a < dk; a++) {
    ki[a] = scatter(a, positions);
  }
  for (std::size_t e = 0; e < de; e++) {
    ti[e] = scatter(e, traced);
  }
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t a = 0; a < dk; a++) {
    for (std::size_t b = 0; b < dk; b++) {
      Complex acc = 0;
      for (std::size_t e = 0; e < de; e++) {
        acc += m(static_cast<Eigen::Index>(ki[a] | ti[e]), static_cast<Eigen::Index>(ki[b] | ti[e]));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return out;
}

CMatrix reduced_matrix(const DensityOperator& r, const LabelSet& ordered_keep) {
  std::vector<std::size_t> pos;
  for (const auto& l : ordered_keep) {
    pos.push_back(r.reg().position(l));
  }
  auto sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw LabelError("repeated label in subset");
  }
  return reduced_matrix(r.matrix(), r.num_qubits(), pos);
}

DensityOperator partial_trace(const DensityOperator& r, const LabelSet& keep) {
  if (keep.empty()) {
    throw LabelError("partial trace needs a nonempty keep set");
  }
  LabelSet ordered = r.reg().in_order(keep);
  return DensityOperator::unchecked(reduced_matrix(r, ordered), Register(ordered));
}

DensityOperator reorder(const DensityOperator& r, const LabelSet& order) {
  if (order.size() != r.num_qubits()) {
    throw LabelError("reorder needs a permutation of the register");
  }
  return DensityOperator::unchecked(reduced_matrix(r, order), Register(order));
}

DensityOperator mix(const std::vector<double>& weights, const std::vector<DensityOperator>& states) {
  if (weights.size() != states.size() || states.empty()) {
    throw std::invalid_argument("mix needs one weight per state");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0)) {
      throw std::invalid_argument("mix weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mix weights must sum to 1");
  }
  CMatrix acc = CMatrix::Zero(states[0].matrix().rows(), states[0].matrix().cols());
  for (std::size_t i = 0; i < states.size(); i++) {
    if (!(states[i].reg() == states[0].reg())) {
      throw LabelError("mix needs identical registers");
    }
    acc += weights[i] * states[i].matrix();
  }
  return DensityOperator::unchecked(std::move(acc), states[0].reg());
}

}  // namespace dissension
