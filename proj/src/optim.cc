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

#include "dissension/optim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dissension {

namespace {

struct NonFinite {};

struct RunResult {
  std::vector<double> x;
  double f;
  bool converged;
  long evaluations;
};

// Nelder-Mead with dimension-adaptive coefficients (Gao and Han). Convergence
// is judged on the spread of values only: the basis parameterizations are
// redundant, so flat directions never let the simplex shrink. The simplex is
// rebuilt around the best vertex after each convergence until a rebuild no
// longer improves the value, which guards against collapsed simplices.
RunResult nelder_mead(const Objective& f, std::vector<double> x0, const std::vector<Bound>& bounds,
                      const OptimizerConfig& cfg) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dn;
  const double rho = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;
  const double ftol = cfg.simplex_tolerance;

  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    evals++;
    double v = f(x);
    if (!std::isfinite(v)) {
      throw NonFinite{};
    }
    return v;
  };

  std::vector<std::vector<double>> s(n + 1, x0);
  std::vector<double> fs(n + 1);
  std::vector<std::size_t> idx(n + 1);
  std::vector<double> xc(n), xr(n), xe(n), xk(n);

  auto build = [&](const std::vector<double>& base, double scale) {
    s[0] = base;
    fs[0] = eval(base);
    for (std::size_t i = 0; i < n; i++) {
      s[i + 1] = base;
      double step = scale * (bounds[i].hi - bounds[i].lo);
      s[i + 1][i] += step == 0 ? scale : step;
      fs[i + 1] = eval(s[i + 1]);
    }
  };

  int it = 0;
  bool converged = false;
  double scale = 0.1;
  build(x0, scale);
  double last_best = std::numeric_limits<double>::infinity();
  while (true) {
    bool met = false;
    while (it < cfg.max_iterations) {
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
      const auto best = idx[0];
      const auto worst = idx[n];
      const auto second = idx[n - 1];

      if (fs[worst] - fs[best] <= ftol * (1 + std::abs(fs[best]))) {
        met = true;
        break;
      }
      it++;

      std::fill(xc.begin(), xc.end(), 0.0);
      for (std::size_t i = 0; i <= n; i++) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < n; j++) xc[j] += s[i][j];
      }
      for (std::size_t j = 0; j < n; j++) xc[j] /= dn;

      for (std::size_t j = 0; j < n; j++) xr[j] = xc[j] + alpha * (xc[j] - s[worst][j]);
      double fr = eval(xr);
      if (fr < fs[best]) {
        for (std::size_t j = 0; j < n; j++) xe[j] = xc[j] + gamma * (xr[j] - xc[j]);
        double fe = eval(xe);
        if (fe < fr) {
          s[worst] = xe;
          fs[worst] = fe;
        } else {
          s[worst] = xr;
          fs[worst] = fr;
        }
        continue;
      }
      if (fr < fs[second]) {
        s[worst] = xr;
        fs[worst] = fr;
        continue;
      }
      bool outside = fr < fs[worst];
      for (std::size_t j = 0; j < n; j++) {
        xk[j] = outside ? xc[j] + rho * (xr[j] - xc[j]) : xc[j] + rho * (s[worst][j] - xc[j]);
      }
      double fk = eval(xk);
      if (fk < (outside ? fr : fs[worst])) {
        s[worst] = xk;
        fs[worst] = fk;
        continue;
      }
      for (std::size_t i = 0; i <= n; i++) {
        if (i == best) continue;
        for (std::size_t j = 0; j < n; j++) s[i][j] = s[best][j] + sigma * (s[i][j] - s[best][j]);
        fs[i] = eval(s[i]);
      }
    }
    auto best = static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
    if (!met) {
      return {s[best], fs[best], false, evals};
    }
    if (last_best - fs[best] <= ftol) {
      converged = true;
      return {s[best], fs[best], converged, evals};
    }
    last_best = fs[best];
    std::vector<double> base = s[best];
    build(base, scale);
  }
}

}  // namespace

void OptimizerConfig::check() const {
  if (restarts < 1 || max_iterations < 1 || grid_density < 2) {
    throw std::invalid_argument("optimizer counts must be positive (grid density at least 2)");
  }
  if (!(simplex_tolerance > 0)) {
    throw std::invalid_argument("simplex tolerance must be positive");
  }
}

MinimizeResult minimize(const Objective& f, const std::vector<Bound>& bounds, const OptimizerConfig& cfg,
                        const std::vector<std::vector<double>>& fixed_starts) {
  cfg.check();
  if (bounds.empty()) {
    throw std::invalid_argument("minimize needs at least one coordinate");
  }
  std::vector<std::vector<double>> starts = fixed_starts;
  if (starts.empty()) {
    starts.emplace_back(bounds.size(), 0.0);
  }
  MinimizeResult out;
  out.value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.restarts; k++) {
    std::vector<double> x0;
    if (static_cast<std::size_t>(k) < starts.size()) {
      x0 = starts[static_cast<std::size_t>(k)];
      if (x0.size() != bounds.size()) {
        throw std::invalid_argument("starting point has the wrong dimension");
      }
    } else {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(k));
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (const auto& b : bounds) {
        x0.push_back(b.lo + (b.hi - b.lo) * u(rng));
      }
    }
    try {
      RunResult r = nelder_mead(f, std::move(x0), bounds, cfg);
      out.evaluations += r.evaluations;
      if (r.f < out.value) {
        out.value = r.f;
        out.argmin = std::move(r.x);
        out.converged = r.converged;
        out.best_restart = k;
      }
    } catch (const NonFinite&) {
      out.failed_restarts++;
    }
    out.restarts_used = k + 1;
    out.history.push_back(out.value);
  }
  return out;
}

GridResult grid_oracle(const Objective& f, const std::vector<Bound>& bounds, const OptimizerConfig& cfg) {
  cfg.check();
  const std::size_t dim = bounds.size();
  if (dim == 0 || dim > kMaxGridDimension) {
    throw std::invalid_argument("grid oracle supports 1.." + std::to_string(kMaxGridDimension) + " coordinates");
  }
  const int g = cfg.grid_density;
  std::vector<int> counter(dim, 0);
  std::vector<double> x(dim);
  GridResult out;
  out.value = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 0; i < dim; i++) {
      x[i] = bounds[i].lo + (bounds[i].hi - bounds[i].lo) * counter[i] / (g - 1);
    }
    double v = f(x);
    out.evaluations++;
    if (v < out.value) {
      out.value = v;
      out.argmin = x;
    }
    std::size_t i = 0;
    while (i < dim && ++counter[i] == g) {
      counter[i] = 0;
      i++;
    }
    if (i == dim) {
      break;
    }
  }
  return out;
}

}  // namespace dissension
