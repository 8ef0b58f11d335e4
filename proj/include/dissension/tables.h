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

#ifndef DISSENSION_TABLES_H
#define DISSENSION_TABLES_H

#include <string>
#include <vector>

#include "dissension/fixtures.h"
#include "dissension/optim.h"

namespace dissension {

/// One compared entry of a table cell.
struct CellReport {
  std::string table;
  std::string state;
  std::string label;
  std::string column;
  std::string anchor;  // empty for symmetric and average cells
  double computed = 0;
  double expected = 0;
  double delta = 0;
  double tolerance = 0;
  bool pass = false;
  bool converged = false;
  bool excluded = false;  // on the discrepancy list: reported, never fails
  std::string note;
};

struct TableReport {
  std::string id;
  std::vector<CellReport> cells;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Computes every cell of a fixture table. Rows run on up to `jobs` threads;
/// the report is in fixture order.
TableReport reproduce_table(const FixtureTable& t, const OptimizerConfig& cfg, int jobs = 1);

/// Computed values of one (state, column), as listed in the table.
std::vector<double> compute_cell(const DensityOperator& r, const FixtureColumn& c, const OptimizerConfig& cfg,
                                 bool* converged = nullptr);

}  // namespace dissension

#endif  // DISSENSION_TABLES_H
