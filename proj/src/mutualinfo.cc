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

#include "dissension/mutualinfo.h"

#include <algorithm>
#include <map>
#include <set>

#include "dissension/entropy.h"

namespace dissension {

namespace {

LabelSet join(const LabelSet& a, const LabelSet& b) {
  LabelSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_disjoint(const LabelSet& a, const LabelSet& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw PartitionError("parts overlap on '" + x + "'");
    }
  }
}

void check_cover(const Register& reg, const std::vector<const LabelSet*>& parts) {
  std::set<std::string> seen;
  for (const auto* p : parts) {
    if (p->empty()) {
      throw PartitionError("empty part");
    }
    for (const auto& l : *p) {
      if (!reg.contains(l)) {
        throw PartitionError("unknown label '" + l + "'");
      }
      if (!seen.insert(l).second) {
        throw PartitionError("parts overlap on '" + l + "'");
      }
    }
  }
  if (seen.size() != reg.size()) {
    throw PartitionError("parts do not cover the register");
  }
}

// Joint entropies of unions of parts, memoized per call by part mask.
class PartEntropies {
 public:
  PartEntropies(const DensityOperator& r, const Partition& p) : r_(r), p_(p) {}

  double operator()(unsigned mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) {
      return it->second;
    }
    LabelSet labels;
    for (std::size_t i = 0; i < p_.size(); i++) {
      if (mask & (1u << i)) {
        labels.insert(labels.end(), p_.parts()[i].begin(), p_.parts()[i].end());
      }
    }
    double s = subsystem_entropy(r_, labels);
    memo_.emplace(mask, s);
    return s;
  }

 private:
  const DensityOperator& r_;
  const Partition& p_;
  std::map<unsigned, double> memo_;
};

}  // namespace

Partition::Partition(const Register& reg, std::vector<LabelSet> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw PartitionError("a partition needs at least two parts");
  }
  std::vector<const LabelSet*> ptrs;
  for (const auto& p : parts_) {
    ptrs.push_back(&p);
  }
  check_cover(reg, ptrs);
}

Partition Partition::singletons(const Register& reg) {
  std::vector<LabelSet> parts;
  for (const auto& n : reg.names()) {
    parts.push_back({n});
  }
  return Partition(reg, std::move(parts));
}

double bipartite_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b) {
  check_cover(r.reg(), {&a, &b});
  return subsystem_entropy(r, a) + subsystem_entropy(r, b) - subsystem_entropy(r, join(a, b));
}

double measured_bipartite_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b, MeasuredSide side,
                             const ProjectiveBasis* basis_a, const ProjectiveBasis* basis_b) {
  check_cover(r.reg(), {&a, &b});
  auto need = [](const ProjectiveBasis* p, const char* which) -> const ProjectiveBasis& {
    if (p == nullptr) {
      throw std::invalid_argument(std::string("missing basis on part ") + which);
    }
    return *p;
  };
  switch (side) {
    case MeasuredSide::kB:
      return subsystem_entropy(r, a) - measured_conditional_entropy(r, a, b, need(basis_b, "b"));
    case MeasuredSide::kA:
      return subsystem_entropy(r, b) - measured_conditional_entropy(r, b, a, need(basis_a, "a"));
    case MeasuredSide::kBoth:
      return subsystem_entropy(r, join(a, b)) - measured_conditional_entropy(r, a, b, need(basis_b, "b")) -
             measured_conditional_entropy(r, b, a, need(basis_a, "a"));
  }
  throw std::invalid_argument("unknown measured side");
}

double interaction_information(const DensityOperator& r, const Partition& parts) {
  PartEntropies s(r, parts);
  const unsigned full = (1u << parts.size()) - 1;
  double total = 0;
  for (unsigned mask = 1; mask <= full; mask++) {
    int k = __builtin_popcount(mask);
    total += (k % 2 ? 1.0 : -1.0) * s(mask);
  }
  return total;
}

double total_correlation(const DensityOperator& r, const Partition& parts) {
  PartEntropies s(r, parts);
  const unsigned full = (1u << parts.size()) - 1;
  double total = -s(full);
  for (std::size_t i = 0; i < parts.size(); i++) {
    total += s(1u << i);
  }
  return total;
}

double binding_information(const DensityOperator& r, const Partition& parts) {
  PartEntropies s(r, parts);
  const unsigned full = (1u << parts.size()) - 1;
  double total = -static_cast<double>(parts.size() - 1) * s(full);
  for (std::size_t i = 0; i < parts.size(); i++) {
    total += s(full & ~(1u << i));
  }
  return total;
}

double measured_conditional_mi(const DensityOperator& r, const LabelSet& a, const LabelSet& b, const LabelSet& c,
                               const ProjectiveBasis& basis_c) {
  check_cover(r.reg(), {&a, &b, &c});
  return measured_conditional_entropy(r, a, c, basis_c) + measured_conditional_entropy(r, b, c, basis_c) -
         measured_conditional_entropy(r, join(a, b), c, basis_c);
}

double bipartite_discord_function(const DensityOperator& r, const LabelSet& target, const LabelSet& cond,
                                  const ProjectiveBasis& basis_cond) {
  check_disjoint(target, cond);
  DensityOperator local = partial_trace(r, join(target, cond));
  return bipartite_mi(local, target, cond) -
         measured_bipartite_mi(local, target, cond, MeasuredSide::kB, nullptr, &basis_cond);
}

}  // namespace dissension
