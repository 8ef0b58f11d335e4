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

#ifndef DISSENSION_OPTIM_H
#define DISSENSION_OPTIM_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dissension {

inline constexpr std::uint64_t kDefaultSeed = 20160601;

struct OptimizerConfig {
  int restarts = 20;
  int max_iterations = 2000;  // per restart
  double simplex_tolerance = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  int grid_density = 60;  // points per coordinate for grid_oracle

  /// Throws std::invalid_argument on non-positive counts or tolerance.
  void check() const;
};

struct Bound {
  double lo;
  double hi;
};

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeResult {
  double value = 0;
  std::vector<double> argmin;
  bool converged = false;        // the winning restart met the tolerance
  int restarts_used = 0;
  int best_restart = -1;
  int failed_restarts = 0;       // aborted on a non-finite objective value
  long evaluations = 0;
  std::vector<double> history;   // best value after each restart
};

/// Nelder-Mead from cfg.restarts starting points. Start k < fixed_starts.size()
/// uses fixed_starts[k]; the remaining starts are uniform in `bounds`, drawn
/// from a generator seeded with cfg.seed + k. An empty `fixed_starts` means
/// the zero vector is the first start. Ties keep the lowest restart index.
MinimizeResult minimize(const Objective& f, const std::vector<Bound>& bounds, const OptimizerConfig& cfg,
                        const std::vector<std::vector<double>>& fixed_starts = {});

struct GridResult {
  double value = 0;
  std::vector<double> argmin;
  long evaluations = 0;
};

inline constexpr std::size_t kMaxGridDimension = 6;

/// Exhaustive search on a regular grid with cfg.grid_density points per
/// coordinate, endpoints included. Throws std::invalid_argument above
/// kMaxGridDimension.
GridResult grid_oracle(const Objective& f, const std::vector<Bound>& bounds, const OptimizerConfig& cfg);

}  // namespace dissension

#endif  // DISSENSION_OPTIM_H
