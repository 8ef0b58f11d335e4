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

#include "dissension/entropy.h"

#include <cmath>
#include <limits>

namespace dissension {

namespace {

template <int D>
double fixed_size_entropy(const CMatrix& h) {
  Eigen::Matrix<Complex, D, D> f = h;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, D, D>> es(f, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

}  // namespace

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
  double s = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); i++) {
    double l = eigenvalues[i];
    if (l > kZeroEigenvalue) {
      s -= l * std::log2(l);
    }
  }
  return s;
}

double entropy_bits(const CMatrix& h) {
  if (h.rows() == 1) {
    Eigen::VectorXd v(1);
    v[0] = h(0, 0).real();
    return entropy_of_spectrum(v);
  }
  if (h.rows() == 2) {
    // Closed form for 2x2; this is the innermost call of every optimizer run.
    double a = h(0, 0).real();
    double d = h(1, 1).real();
    double mean = (a + d) / 2;
    double rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(h(0, 1)));
    Eigen::VectorXd v(2);
    v << mean + rad, mean - rad;
    return entropy_of_spectrum(v);
  }
  if (h.rows() == 4) {
    return fixed_size_entropy<4>(h);
  }
  if (h.rows() == 8) {
    return fixed_size_entropy<8>(h);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

double von_neumann(const DensityOperator& r) {
  auto rep = validate(r);
  if (!rep.ok()) {
    throw ValidationError("entropy of an invalid state: " + rep.summary());
  }
  return entropy_bits(r.matrix());
}

double subsystem_entropy(const DensityOperator& r, const LabelSet& subset) {
  if (subset.empty()) {
    return 0;
  }
  return entropy_bits(reduced_matrix(r, r.reg().in_order(subset)));
}

double relative_entropy(const DensityOperator& r, const DensityOperator& s) {
  if (!(r.reg() == s.reg())) {
    throw LabelError("relative entropy needs identical registers");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> er(r.matrix());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s.matrix());
  const auto& lr = er.eigenvalues();
  const auto& ls = es.eigenvalues();
  const CMatrix& vr = er.eigenvectors();
  const CMatrix& vs = es.eigenvectors();

  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < ls.size(); j++) {
    if (ls[j] > kZeroEigenvalue) {
      support.push_back(j);
    }
  }
  for (Eigen::Index i = 0; i < lr.size(); i++) {
    if (lr[i] <= kZeroEigenvalue) {
      continue;
    }
    double overlap = 0;
    for (auto j : support) {
      overlap += std::norm(vs.col(j).dot(vr.col(i)));
    }
    if (overlap < 1 - 1e-9) {
      return std::numeric_limits<double>::infinity();
    }
  }
  // tr r log r - sum_j <s_j| r |s_j> log s_j
  double cross = 0;
  for (auto j : support) {
    double w = (vs.col(j).adjoint() * r.matrix() * vs.col(j))(0, 0).real();
    cross += w * std::log2(ls[j]);
  }
  return -entropy_of_spectrum(lr) - cross;
}

}  // namespace dissension
