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

#include "dissension/fixtures.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace dissension {

namespace detail {
extern const char* const kReferenceTablesJson;
}  // namespace detail

namespace {

CellKind parse_kind(const std::string& s) {
  if (s == "vector") return CellKind::kVector;
  if (s == "symmetric") return CellKind::kSymmetric;
  if (s == "average") return CellKind::kAverage;
  throw std::invalid_argument("unknown cell kind '" + s + "'");
}

}  // namespace

double FixtureTable::tolerance_for(double expected) const {
  return std::abs(expected - std::round(expected)) < 1e-12 ? integer_tolerance : tolerance;
}

Fixtures parse_fixtures(const std::string& text) {
  Fixtures out;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& jt : j.at("tables")) {
      FixtureTable t;
      t.id = jt.at("id").get<std::string>();
      t.title = jt.at("title").get<std::string>();
      t.qubits = jt.at("qubits").get<std::size_t>();
      t.tolerance = jt.at("tolerance").get<double>();
      t.integer_tolerance = jt.value("integer_tolerance", t.tolerance);
      for (const auto& jc : jt.at("columns")) {
        FixtureColumn c;
        c.label = jc.at("label").get<std::string>();
        c.m = jc.at("m").get<int>();
        c.track = jc.at("track").get<int>() == 2 ? Track::kTwo : Track::kOne;
        c.kind = parse_kind(jc.at("kind").get<std::string>());
        t.columns.push_back(c);
      }
      for (const auto& jr : jt.at("rows")) {
        FixtureRow r;
        r.state = jr.at("state").get<std::string>();
        r.label = jr.at("label").get<std::string>();
        r.cells = jr.at("cells").get<std::vector<std::vector<double>>>();
        r.note = jr.value("note", "");
        if (r.cells.size() != t.columns.size()) {
          throw std::invalid_argument("table " + t.id + " row " + r.label + " has the wrong number of cells");
        }
        for (std::size_t c = 0; c < r.cells.size(); c++) {
          std::size_t want = t.columns[c].kind == CellKind::kVector ? t.qubits : 1;
          if (r.cells[c].size() != want) {
            throw std::invalid_argument("table " + t.id + " row " + r.label + " column " + t.columns[c].label +
                                        " has " + std::to_string(r.cells[c].size()) + " entries");
          }
        }
        t.rows.push_back(std::move(r));
      }
      out.tables.push_back(std::move(t));
    }
    for (const auto& jd : j.value("discrepancies", nlohmann::json::array())) {
      Discrepancy d;
      d.id = jd.at("id").get<std::string>();
      d.scope = jd.at("scope").get<std::string>();
      d.state = jd.value("state", "");
      d.excluded = jd.value("excluded", false);
      d.note = jd.value("note", "");
      out.discrepancies.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fixtures: ") + e.what());
  }
  return out;
}

const Fixtures& reference_fixtures() {
  static const Fixtures f = parse_fixtures(detail::kReferenceTablesJson);
  return f;
}

const FixtureTable& fixture_table(const std::string& id) {
  for (const auto& t : reference_fixtures().tables) {
    if (t.id == id) {
      return t;
    }
  }
  throw std::invalid_argument("unknown table id '" + id + "'");
}

std::vector<std::string> fixture_table_ids() {
  std::vector<std::string> out;
  for (const auto& t : reference_fixtures().tables) {
    out.push_back(t.id);
  }
  return out;
}

}  // namespace dissension
