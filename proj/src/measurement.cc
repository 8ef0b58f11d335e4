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

#include "dissension/measurement.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dissension/entropy.h"

namespace dissension {

namespace {

template <typename M>
CMatrix exp_i_hermitian(const M& h) {
  Eigen::SelfAdjointEigenSolver<M> es(h);
  const auto& v = es.eigenvectors();
  auto phases = es.eigenvalues().unaryExpr([](double l) { return std::polar(1.0, l); }).eval();
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace

std::size_t basis_param_count(std::size_t m) {
  if (m == 0 || m > kMaxQubits) {
    throw std::invalid_argument("basis size out of range");
  }
  return m == 1 ? 2 : std::size_t{1} << (2 * m);
}

std::vector<double> computational_params(std::size_t m) { return std::vector<double>(basis_param_count(m), 0.0); }

std::vector<double> hadamard_params(std::size_t m) {
  using std::numbers::pi;
  if (m == 1) {
    return {pi / 2, 0.0};
  }
  // exp(iG) = H^{(x)m} for G = (pi/2)(I - H^{(x)m}), since H^{(x)m} has eigenvalues +-1.
  const std::size_t d = std::size_t{1} << m;
  auto h = [m](std::size_t i, std::size_t j) {
    int parity = __builtin_popcountll(i & j);
    return (parity % 2 ? -1.0 : 1.0) / std::pow(std::sqrt(2.0), static_cast<double>(m));
  };
  std::vector<double> p;
  for (std::size_t i = 0; i < d; i++) {
    p.push_back(pi / 2 * (1 - h(i, i)));
  }
  for (std::size_t i = 0; i < d; i++) {
    for (std::size_t j = i + 1; j < d; j++) {
      p.push_back(-pi / 2 * h(i, j));
      p.push_back(0.0);
    }
  }
  return p;
}

CMatrix basis_unitary(std::size_t m, std::span<const double> p) {
  if (p.size() != basis_param_count(m)) {
    throw std::invalid_argument("expected " + std::to_string(basis_param_count(m)) + " basis parameters, got " +
                                std::to_string(p.size()));
  }
  if (m == 1) {
    double c = std::cos(p[0] / 2);
    double s = std::sin(p[0] / 2);
    Complex e = std::polar(1.0, p[1]);
    CMatrix u(2, 2);
    u << c, -std::conj(e) * s, e * s, c;
    return u;
  }
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << m);
  CMatrix h(d, d);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < d; i++) {
    h(i, i) = p[k++];
  }
  for (Eigen::Index i = 0; i < d; i++) {
    for (Eigen::Index j = i + 1; j < d; j++) {
      h(i, j) = Complex(p[k], p[k + 1]);
      h(j, i) = Complex(p[k], -p[k + 1]);
      k += 2;
    }
  }
  if (d == 4) {
    return exp_i_hermitian(Eigen::Matrix4cd(h));
  }
  if (d == 8) {
    return exp_i_hermitian(Eigen::Matrix<Complex, 8, 8>(h));
  }
  return exp_i_hermitian(h);
}

ProjectiveBasis::ProjectiveBasis(LabelSet subset, CMatrix vectors)
    : subset_(std::move(subset)), vectors_(std::move(vectors)) {
  auto d = static_cast<Eigen::Index>(std::size_t{1} << subset_.size());
  if (subset_.empty() || vectors_.rows() != d || vectors_.cols() != d) {
    throw std::invalid_argument("basis shape does not match its subset");
  }
  double defect = (vectors_.adjoint() * vectors_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("basis vectors are not orthonormal");
  }
}

CMatrix ProjectiveBasis::projector(std::size_t i) const {
  auto c = vectors_.col(static_cast<Eigen::Index>(i));
  return c * c.adjoint();
}

std::vector<CMatrix> ProjectiveBasis::projectors() const {
  std::vector<CMatrix> out;
  for (Eigen::Index i = 0; i < vectors_.cols(); i++) {
    out.push_back(projector(static_cast<std::size_t>(i)));
  }
  return out;
}

ProjectiveBasis basis_from_params(const LabelSet& subset, std::span<const double> p) {
  return ProjectiveBasis(subset, basis_unitary(subset.size(), p));
}

ProjectiveBasis basis_from_params(const LabelSet& subset, const BasisParams& p) {
  return basis_from_params(subset, std::span<const double>(p.values));
}

std::vector<ConditionalOutcome> conditional_ensemble(const DensityOperator& r, const ProjectiveBasis& b) {
  const Register& reg = r.reg();
  LabelSet rest = reg.complement(b.subset());
  if (rest.empty()) {
    throw std::invalid_argument("cannot condition on the full register");
  }
  // Move the measured qubits to the back (in basis order), apply I (x) Pi_i on
  // both sides, then trace them out.
  LabelSet order = rest;
  order.insert(order.end(), b.subset().begin(), b.subset().end());
  DensityOperator moved = reorder(r, order);
  const std::size_t n = order.size();
  const auto dr = static_cast<Eigen::Index>(std::size_t{1} << rest.size());
  const auto dm = static_cast<Eigen::Index>(std::size_t{1} << b.size());
  std::vector<std::size_t> keep(rest.size());
  for (std::size_t i = 0; i < rest.size(); i++) {
    keep[i] = i;
  }
  std::vector<ConditionalOutcome> out;
  for (const auto& pi : b.projectors()) {
    CMatrix k = CMatrix::Zero(dr * dm, dr * dm);
    for (Eigen::Index blk = 0; blk < dr; blk++) {
      k.block(blk * dm, blk * dm, dm, dm) = pi;
    }
    CMatrix post = k * moved.matrix() * k;
    CMatrix cond = reduced_matrix(post, n, keep);
    double p = cond.trace().real();
    if (p < kZeroEigenvalue) {
      continue;
    }
    out.push_back({p, DensityOperator::unchecked(cond / p, Register(rest))});
  }
  return out;
}

ConditionalEntropyEvaluator::ConditionalEntropyEvaluator(const DensityOperator& r, const LabelSet& target,
                                                         const LabelSet& cond) {
  if (target.empty() || cond.empty()) {
    throw std::invalid_argument("conditional entropy needs nonempty target and condition");
  }
  for (const auto& t : target) {
    if (std::find(cond.begin(), cond.end(), t) != cond.end()) {
      throw std::invalid_argument("target and condition overlap on '" + t + "'");
    }
  }
  LabelSet order = r.reg().in_order(target);
  order.insert(order.end(), cond.begin(), cond.end());
  reduced_ = reduced_matrix(r, order);
  dt_ = static_cast<Eigen::Index>(std::size_t{1} << target.size());
  dc_ = static_cast<Eigen::Index>(std::size_t{1} << cond.size());
}

double ConditionalEntropyEvaluator::operator()(const CMatrix& basis) const {
  double total = 0;
  CMatrix m(dt_, dt_);
  for (Eigen::Index i = 0; i < dc_; i++) {
    auto v = basis.col(i);
    // m(t, t') = sum_{c,d} conj(v_c) R[(t,c),(t',d)] v_d
    for (Eigen::Index t = 0; t < dt_; t++) {
      for (Eigen::Index u = t; u < dt_; u++) {
        Complex acc = 0;
        for (Eigen::Index c = 0; c < dc_; c++) {
          Complex row = 0;
          for (Eigen::Index d = 0; d < dc_; d++) {
            row += reduced_(t * dc_ + c, u * dc_ + d) * v[d];
          }
          acc += std::conj(v[c]) * row;
        }
        m(t, u) = acc;
        m(u, t) = std::conj(acc);
      }
    }
    double p = 0;
    for (Eigen::Index t = 0; t < dt_; t++) {
      p += m(t, t).real();
    }
    if (p < kZeroEigenvalue) {
      continue;
    }
    total += p * entropy_bits(m / p);
  }
  return total;
}

double measured_conditional_entropy(const DensityOperator& r, const LabelSet& target, const LabelSet& cond,
                                    const ProjectiveBasis& b) {
  LabelSet a = r.reg().in_order(cond);
  LabelSet bs = r.reg().in_order(b.subset());
  if (a != bs) {
    throw std::invalid_argument("basis subset does not match the conditioning subset");
  }
  ConditionalEntropyEvaluator ev(r, target, b.subset());
  return ev(b.vectors());
}

LabelSet subset_key(const LabelSet& subset) {
  LabelSet k = subset;
  std::sort(k.begin(), k.end());
  return k;
}

void MeasurementAssignment::set(ProjectiveBasis b) {
  auto key = subset_key(b.subset());
  entries_.insert_or_assign(std::move(key), std::move(b));
}

const ProjectiveBasis* MeasurementAssignment::find(const LabelSet& subset) const {
  auto it = entries_.find(subset_key(subset));
  return it == entries_.end() ? nullptr : &it->second;
}

const ProjectiveBasis& MeasurementAssignment::at(const LabelSet& subset) const {
  const auto* b = find(subset);
  if (b == nullptr) {
    std::string names;
    for (const auto& s : subset) {
      names += s;
    }
    throw std::invalid_argument("no basis assigned to conditioning subset {" + names + "}");
  }
  return *b;
}

MeasurementAssignment MeasurementAssignment::computational(const Register& reg, const std::vector<LabelSet>& subsets) {
  MeasurementAssignment a;
  for (const auto& s : subsets) {
    auto ordered = reg.in_order(s);
    a.set(basis_from_params(ordered, computational_params(ordered.size())));
  }
  return a;
}

MeasurementAssignment MeasurementAssignment::hadamard(const Register& reg, const std::vector<LabelSet>& subsets) {
  MeasurementAssignment a;
  for (const auto& s : subsets) {
    auto ordered = reg.in_order(s);
    a.set(basis_from_params(ordered, hadamard_params(ordered.size())));
  }
  return a;
}

}  // namespace dissension
