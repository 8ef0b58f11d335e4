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

#ifndef DISSENSION_FIXTURES_H
#define DISSENSION_FIXTURES_H

#include <optional>
#include <string>
#include <vector>

#include "dissension/dissension.h"

namespace dissension {

enum class CellKind { kVector, kSymmetric, kAverage };

struct FixtureColumn {
  std::string label;
  int m = 1;
  Track track = Track::kOne;
  CellKind kind = CellKind::kVector;
};

struct FixtureRow {
  std::string state;  // catalog recipe
  std::string label;
  std::vector<std::vector<double>> cells;  // one per column; vectors in register order
  std::string note;
};

struct FixtureTable {
  std::string id;
  std::string title;
  std::size_t qubits = 0;
  double tolerance = 0;
  double integer_tolerance = 0;  // equals tolerance when the table has no separate integer bound
  std::vector<FixtureColumn> columns;
  std::vector<FixtureRow> rows;

  /// The bound for one expected entry.
  double tolerance_for(double expected) const;
};

struct Discrepancy {
  std::string id;
  std::string scope;
  std::string state;
  bool excluded = false;
  std::string note;
};

struct Fixtures {
  std::vector<FixtureTable> tables;
  std::vector<Discrepancy> discrepancies;
};

/// The reference tables compiled into the library.
const Fixtures& reference_fixtures();

/// Parses a fixtures document; throws std::invalid_argument on malformed input.
Fixtures parse_fixtures(const std::string& text);

/// Throws std::invalid_argument for an unknown id.
const FixtureTable& fixture_table(const std::string& id);

std::vector<std::string> fixture_table_ids();

}  // namespace dissension

#endif  // DISSENSION_FIXTURES_H
