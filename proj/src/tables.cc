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

#include "dissension/tables.h"

#include <algorithm>
#include <cmath>

#include "dissension/jobs.h"
#include "dissension/states.h"

namespace dissension {

namespace {

bool excluded(const std::string& table, const std::string& state) {
  for (const auto& d : reference_fixtures().discrepancies) {
    if (d.excluded && d.scope == "table" && d.id == table && d.state == state) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellReport& c) { return !c.pass && !c.excluded; }));
}

std::vector<double> compute_cell(const DensityOperator& r, const FixtureColumn& c, const OptimizerConfig& cfg,
                                 bool* converged) {
  auto v = dissension_vector(r, c.m, c.track, cfg);
  if (converged) {
    *converged = v.converged();
  }
  switch (c.kind) {
    case CellKind::kAverage:
      return {average_dissension(v)};
    case CellKind::kSymmetric:
      return {v.entries.at(0).value};
    case CellKind::kVector:
      break;
  }
  return v.values();
}

TableReport reproduce_table(const FixtureTable& t, const OptimizerConfig& cfg, int jobs) {
  std::vector<std::vector<CellReport>> per_row(t.rows.size());
  parallel_for(t.rows.size(), jobs, [&](std::size_t i) {
    const auto& row = t.rows[i];
    auto r = build(StateRecipe::parse(row.state));
    for (std::size_t c = 0; c < t.columns.size(); c++) {
      const auto& col = t.columns[c];
      bool conv = false;
      auto got = compute_cell(r, col, cfg, &conv);
      for (std::size_t k = 0; k < got.size(); k++) {
        CellReport cell;
        cell.table = t.id;
        cell.state = row.state;
        cell.label = row.label;
        cell.column = col.label;
        cell.anchor = col.kind == CellKind::kVector ? r.reg().names()[k] : "";
        cell.computed = got[k];
        cell.expected = row.cells[c][k];
        cell.delta = std::abs(cell.computed - cell.expected);
        cell.tolerance = t.tolerance_for(cell.expected);
        cell.pass = cell.delta <= cell.tolerance;
        cell.converged = conv;
        cell.excluded = excluded(t.id, row.state);
        cell.note = row.note;
        per_row[i].push_back(std::move(cell));
      }
    }
  });
  TableReport out;
  out.id = t.id;
  for (auto& cells : per_row) {
    for (auto& c : cells) out.cells.push_back(std::move(c));
  }
  return out;
}

}  // namespace dissension
