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

#include "dissension/dissension.h"

#include <algorithm>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dissension/entropy.h"
#include "dissension/mutualinfo.h"

namespace dissension {

namespace {

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

// All k-element subsets of {lo, ..., n-1}, each in increasing order,
// in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t lo, std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n - lo) {
    return out;
  }
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), lo);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) {
      i--;
    }
    if (i == 0) {
      break;
    }
    c[i - 1]++;
    for (std::size_t j = i; j < k; j++) {
      c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

std::string join_labels(const LabelSet& s) {
  bool short_names = std::all_of(s.begin(), s.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); i++) {
    if (i > 0 && !short_names) {
      out += ",";
    }
    out += s[i];
  }
  return out;
}

// Accumulates terms while merging duplicates.
class ExpressionBuilder {
 public:
  explicit ExpressionBuilder(const std::vector<std::string>& party_order) : order_(party_order) {}

  LabelSet sorted(const LabelSet& s) const {
    LabelSet out = s;
    std::sort(out.begin(), out.end(), [this](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
    return out;
  }

  void add(int c, const LabelSet& subset) {
    LabelSet s = sorted(subset);
    for (auto& t : e_.unconditioned) {
      if (t.subset == s) {
        t.coefficient += c;
        return;
      }
    }
    e_.unconditioned.push_back({c, s});
  }

  void add(int c, const LabelSet& target, const LabelSet& cond) {
    LabelSet t = sorted(target);
    LabelSet k = sorted(cond);
    for (auto& term : e_.conditioned) {
      if (term.target == t && term.condition == k) {
        term.coefficient += c;
        return;
      }
    }
    e_.conditioned.push_back({c, t, k});
  }

  ConditionedExpression finish() {
    std::erase_if(e_.unconditioned, [](const EntropyTerm& t) { return t.coefficient == 0; });
    std::erase_if(e_.conditioned, [](const ConditionalTerm& t) { return t.coefficient == 0; });
    return e_;
  }

 private:
  std::size_t rank(const std::string& l) const {
    return static_cast<std::size_t>(std::find(order_.begin(), order_.end(), l) - order_.begin());
  }

  const std::vector<std::string>& order_;
  ConditionedExpression e_;
};

Partition party_partition(const DensityOperator& r, const DissensionSpec& spec) {
  std::vector<LabelSet> parts;
  for (const auto& p : spec.party_order) {
    parts.push_back({p});
  }
  return Partition(r.reg(), parts);
}

struct GroupTerm {
  int coefficient;
  ConditionalEntropyEvaluator evaluator;
};

}  // namespace

std::string track_name(Track t) { return t == Track::kOne ? "1" : "2"; }

void DissensionSpec::check() const {
  const std::size_t n = party_order.size();
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("dissension needs 2.." + std::to_string(kMaxQubits) + " parties");
  }
  if (m < 1 || static_cast<std::size_t>(m) >= n) {
    throw std::invalid_argument("measured-party count m=" + std::to_string(m) + " unsupported for n=" +
                                std::to_string(n) + " (need 1 <= m < n)");
  }
  if (track != Track::kOne && track != Track::kTwo) {
    throw std::invalid_argument("track must be 1 or 2");
  }
  std::set<std::string> seen(party_order.begin(), party_order.end());
  if (seen.size() != n) {
    throw std::invalid_argument("repeated party label");
  }
  if (!symmetric() && !seen.count(anchor)) {
    throw std::invalid_argument("anchor '" + anchor + "' is not a party");
  }
}

std::vector<std::string> DissensionSpec::canonical_order() const {
  check();
  const std::size_t n = party_order.size();
  std::size_t a = 0;
  if (!symmetric()) {
    a = static_cast<std::size_t>(std::find(party_order.begin(), party_order.end(), anchor) - party_order.begin());
  }
  std::size_t shift = (m == 1 && !symmetric()) ? a + 1 : a;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; i++) {
    out.push_back(party_order[(shift + i) % n]);
  }
  return out;
}

std::vector<LabelSet> ConditionedExpression::conditioning_subsets() const {
  std::vector<LabelSet> out;
  for (const auto& t : conditioned) {
    if (std::find(out.begin(), out.end(), t.condition) == out.end()) {
      out.push_back(t.condition);
    }
  }
  return out;
}

std::string ConditionedExpression::to_string() const {
  std::string out;
  auto coef = [&out](int c) {
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (std::abs(c) != 1) {
      out += std::to_string(std::abs(c));
    }
  };
  for (const auto& t : unconditioned) {
    coef(t.coefficient);
    out += "S(" + join_labels(t.subset) + ")";
  }
  for (const auto& t : conditioned) {
    coef(t.coefficient);
    out += "S(" + join_labels(t.target) + "|" + join_labels(t.condition) + ")";
  }
  return out.empty() ? "0" : out;
}

ConditionedExpression build_expression(const DissensionSpec& spec) {
  auto x = spec.canonical_order();
  const std::size_t n = spec.n();
  const auto m = static_cast<std::size_t>(spec.m);
  ExpressionBuilder b(spec.party_order);
  auto labels = [&x](const std::vector<std::size_t>& idx, std::size_t from, std::size_t to) {
    LabelSet out;
    for (std::size_t i = from; i < to; i++) {
      out.push_back(x[idx[i]]);
    }
    return out;
  };

  for (std::size_t k = 1; k < m; k++) {
    for (const auto& c : combinations(0, n, k)) {
      b.add(parity_sign(k - 1), labels(c, 0, k));
    }
  }

  const int mid = parity_sign(m - 1);
  for (const auto& rest : combinations(1, n, m - 1)) {
    std::vector<std::size_t> c = {0};
    c.insert(c.end(), rest.begin(), rest.end());
    LabelSet cond = labels(c, 0, c.size());
    if (spec.track == Track::kOne) {
      b.add(mid, cond);
    } else if (m == 1) {
      // S(x1) -> S(x1 x2) - S(x2 | x1)
      b.add(mid, {x[0], x[1]});
      b.add(-mid, {x[1]}, cond);
    } else {
      // S(C) -> S(all) - S(complement | C)
      LabelSet comp;
      for (std::size_t i = 0; i < n; i++) {
        if (std::find(c.begin(), c.end(), i) == c.end()) {
          comp.push_back(x[i]);
        }
      }
      b.add(mid, x);
      b.add(-mid, comp, cond);
    }
  }

  for (std::size_t p = m + 1; p <= n; p++) {
    for (const auto& c : combinations(0, n, p)) {
      b.add(parity_sign(p - 1), labels(c, 0, p - m), labels(c, p - m, p));
    }
  }
  return b.finish();
}

double evaluate_expression(const DensityOperator& r, const ConditionedExpression& e, const MeasurementAssignment& a) {
  double total = 0;
  for (const auto& t : e.unconditioned) {
    total += t.coefficient * subsystem_entropy(r, t.subset);
  }
  for (const auto& t : e.conditioned) {
    const ProjectiveBasis& b = a.at(t.condition);
    total += t.coefficient * measured_conditional_entropy(r, t.target, t.condition, b);
  }
  return total;
}

double dissension_function(const DensityOperator& r, const DissensionSpec& spec, const MeasurementAssignment& a) {
  auto e = build_expression(spec);
  double i0 = interaction_information(r, party_partition(r, spec));
  return parity_sign(spec.n()) * (i0 - evaluate_expression(r, e, a));
}

double dissension_offset(const DensityOperator& r, const DissensionSpec& spec) {
  auto e = build_expression(spec);
  double base = interaction_information(r, party_partition(r, spec));
  for (const auto& t : e.unconditioned) {
    base -= t.coefficient * subsystem_entropy(r, t.subset);
  }
  return parity_sign(spec.n()) * base;
}

std::vector<GroupObjective> group_objectives(const DensityOperator& r, const DissensionSpec& spec) {
  auto e = build_expression(spec);
  const int sign = parity_sign(spec.n());
  std::vector<GroupObjective> out;
  for (const auto& subset : e.conditioning_subsets()) {
    GroupObjective g;
    g.subset = r.reg().in_order(subset);
    for (const auto& t : e.conditioned) {
      if (t.condition == subset) {
        g.terms.emplace_back(t.coefficient, r.reg().in_order(t.target));
      }
    }
    std::sort(g.terms.begin(), g.terms.end());
    const std::size_t m = g.subset.size();
    auto evaluators = std::make_shared<std::vector<GroupTerm>>();
    for (const auto& [c, target] : g.terms) {
      evaluators->push_back({c, ConditionalEntropyEvaluator(r, target, g.subset)});
    }
    g.f = [evaluators, m, sign](std::span<const double> p) {
      CMatrix u = basis_unitary(m, p);
      double v = 0;
      for (const auto& t : *evaluators) {
        v += t.coefficient * t.evaluator(u);
      }
      return -sign * v;
    };
    if (m == 1) {
      g.bounds = {{0, std::numbers::pi}, {0, 2 * std::numbers::pi}};
    } else {
      g.bounds.assign(basis_param_count(m), {-std::numbers::pi, std::numbers::pi});
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Minimizations of one conditioning subset's terms, keyed by the subset and
// its (coefficient, target) list. Anchors of one vector often share groups.
using GroupKey = std::pair<LabelSet, std::vector<std::pair<int, LabelSet>>>;
using GroupCache = std::map<GroupKey, MinimizeResult>;

MinimizeResult minimize_group(const GroupObjective& g, const OptimizerConfig& cfg) {
  const std::size_t m = g.subset.size();
  auto res = minimize(g.f, g.bounds, cfg, {computational_params(m), hadamard_params(m)});
  if (res.argmin.empty()) {
    throw std::runtime_error("optimizer produced no finite value");
  }
  return res;
}

DissensionResult dissension_cached(const DensityOperator& r, const DissensionSpec& spec, const OptimizerConfig& cfg,
                                   GroupCache& cache) {
  cfg.check();
  const double base = dissension_offset(r, spec);

  // Each conditioning subset's basis only enters the terms conditioned on that
  // subset, so the minimum over all bases is the sum of per-subset minima.
  DissensionResult out;
  out.anchor = spec.symmetric() ? "" : spec.anchor;
  out.best_objective_history.assign(static_cast<std::size_t>(cfg.restarts), base);
  out.converged = true;
  for (const auto& g : group_objectives(r, spec)) {
    GroupKey key{g.subset, g.terms};
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, minimize_group(g, cfg)).first;
    } else {
      out.reused_groups++;
    }
    const MinimizeResult& res = it->second;
    for (std::size_t k = 0; k < res.history.size(); k++) {
      out.best_objective_history[k] += res.history[k];
    }
    out.converged = out.converged && res.converged;
    out.evaluations += res.evaluations;
    out.restarts_used = std::max(out.restarts_used, res.restarts_used);
    out.argmin.set(basis_from_params(g.subset, res.argmin));
    out.argmin_params.emplace_back(g.subset, res.argmin);
  }
  out.value = dissension_function(r, spec, out.argmin);
  return out;
}

}  // namespace

DissensionResult dissension(const DensityOperator& r, const DissensionSpec& spec, const OptimizerConfig& cfg) {
  GroupCache cache;
  return dissension_cached(r, spec, cfg, cache);
}

const DissensionResult& DissensionVector::at(const std::string& anchor) const {
  for (const auto& e : entries) {
    if (e.anchor == anchor) {
      return e;
    }
  }
  throw std::out_of_range("no dissension entry for '" + anchor + "'");
}

std::vector<double> DissensionVector::values() const {
  std::vector<double> out;
  for (const auto& e : entries) {
    out.push_back(e.value);
  }
  return out;
}

bool DissensionVector::converged() const {
  return std::all_of(entries.begin(), entries.end(), [](const DissensionResult& e) { return e.converged; });
}

DissensionVector dissension_vector(const DensityOperator& r, int m, Track track, const OptimizerConfig& cfg,
                                   const std::vector<std::string>& party_order) {
  DissensionVector v;
  v.m = m;
  v.track = track;
  DissensionSpec spec{m, track, party_order.empty() ? std::string() : party_order[0], party_order};
  v.symmetric = spec.symmetric();
  GroupCache cache;
  if (v.symmetric) {
    v.entries.push_back(dissension_cached(r, spec, cfg, cache));
    return v;
  }
  for (const auto& a : party_order) {
    spec.anchor = a;
    v.entries.push_back(dissension_cached(r, spec, cfg, cache));
  }
  return v;
}

DissensionVector dissension_vector(const DensityOperator& r, int m, Track track, const OptimizerConfig& cfg) {
  return dissension_vector(r, m, track, cfg, r.reg().names());
}

DiscordVector discord_vector(const DensityOperator& r, const OptimizerConfig& cfg) {
  if (r.num_qubits() != 2) {
    throw std::invalid_argument("discord vector needs a two-qubit state");
  }
  const auto& names = r.reg().names();
  DiscordVector out;
  auto x = dissension(r, {1, Track::kOne, names[0], names}, cfg);
  auto y = dissension(r, {1, Track::kOne, names[1], names}, cfg);
  auto a = dissension(r, {1, Track::kTwo, names[0], names}, cfg);
  out.delta_x = x.value;
  out.delta_y = y.value;
  out.delta_a = a.value;
  out.converged = x.converged && y.converged && a.converged;
  return out;
}

double average_dissension(const DissensionVector& v) {
  if (v.entries.empty()) {
    return 0;
  }
  double s = 0;
  for (const auto& e : v.entries) {
    s += e.value;
  }
  return s / static_cast<double>(v.entries.size());
}

DecompositionCheck discord_decomposition(const DensityOperator& r, const DissensionSpec& spec,
                                         const MeasurementAssignment& a) {
  auto e = build_expression(spec);
  double rhs = 0;
  for (const auto& t : e.conditioned) {
    rhs += t.coefficient * bipartite_discord_function(r, t.target, t.condition, a.at(t.condition));
  }
  rhs *= -parity_sign(spec.n());
  return {dissension_function(r, spec, a), rhs};
}

}  // namespace dissension
