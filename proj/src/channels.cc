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

#include "dissension/channels.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace dissension {

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw std::invalid_argument("a channel needs at least one Kraus operator");
  }
  CMatrix sum = CMatrix::Zero(2, 2);
  for (const auto& e : operators_) {
    if (e.rows() != 2 || e.cols() != 2) {
      throw std::invalid_argument("only single-qubit (2x2) Kraus operators are supported");
    }
    sum += e.adjoint() * e;
  }
  double defect = (sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("Kraus operators are not complete (defect " + std::to_string(defect) + ")");
  }
}

DensityOperator apply_local(const DensityOperator& r, const std::string& target, const KrausChannel& ch) {
  const std::size_t n = r.num_qubits();
  const std::size_t q = r.reg().position(target);
  const std::size_t bit = n - 1 - q;
  const auto d = static_cast<Eigen::Index>(r.dim());
  // (I (x) E (x) I) as a dense matrix acting on bit `bit`.
  auto lift = [&](const CMatrix& e) {
    CMatrix out = CMatrix::Zero(d, d);
    for (Eigen::Index col = 0; col < d; col++) {
      auto c = static_cast<std::size_t>(col);
      std::size_t cb = (c >> bit) & 1;
      for (std::size_t rb = 0; rb < 2; rb++) {
        std::size_t row = (c & ~(std::size_t{1} << bit)) | (rb << bit);
        out(static_cast<Eigen::Index>(row), col) += e(static_cast<Eigen::Index>(rb), static_cast<Eigen::Index>(cb));
      }
    }
    return out;
  };
  CMatrix acc = CMatrix::Zero(d, d);
  for (const auto& e : ch.operators()) {
    CMatrix k = lift(e);
    acc += k * r.matrix() * k.adjoint();
  }
  return DensityOperator::unchecked(std::move(acc), r.reg());
}

KrausChannel nonunital_channel(double n) {
  if (!std::isfinite(n)) {
    throw std::invalid_argument("channel parameter must be finite");
  }
  double norm = std::sqrt(1 + n * n);
  CMatrix e1 = CMatrix::Zero(2, 2);
  e1(0, 0) = 1;
  CMatrix e2 = CMatrix::Zero(2, 2);
  e2(0, 1) = 1 / norm;
  e2(1, 1) = n / norm;
  return KrausChannel({e1, e2});
}

KrausChannel phase_flip_channel(double q) {
  if (!(q >= 0 && q <= 1)) {
    throw std::invalid_argument("phase-flip probability must be in [0,1]");
  }
  CMatrix i = CMatrix::Identity(2, 2) * std::sqrt(1 - q);
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = std::sqrt(q);
  z(1, 1) = -std::sqrt(q);
  return KrausChannel({i, z});
}

KrausChannel identity_channel() { return KrausChannel({CMatrix::Identity(2, 2)}); }

KrausChannel unitary_channel(const CMatrix& u) { return KrausChannel({u}); }

UnitalityReport is_unital(const KrausChannel& ch) {
  CMatrix sum = CMatrix::Zero(2, 2);
  for (const auto& e : ch.operators()) {
    sum += e * e.adjoint();
  }
  double defect = (sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  return {defect <= 1e-10, defect};
}

KrausChannel channel_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) {
    throw std::invalid_argument("channel JSON must be a list of operators");
  }
  std::vector<CMatrix> ops;
  for (const auto& op : j) {
    CMatrix e = CMatrix::Zero(2, 2);
    const auto& re = op.at("re");
    if (re.size() != 2) {
      throw std::invalid_argument("Kraus operator must be 2x2");
    }
    for (int a = 0; a < 2; a++) {
      if (re[a].size() != 2) {
        throw std::invalid_argument("Kraus operator must be 2x2");
      }
      for (int b = 0; b < 2; b++) {
        double im = op.contains("im") ? op["im"].at(a).at(b).get<double>() : 0.0;
        e(a, b) = Complex(re[a][b].get<double>(), im);
      }
    }
    ops.push_back(e);
  }
  return KrausChannel(std::move(ops));
}

}  // namespace dissension
