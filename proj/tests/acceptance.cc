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

// Acceptance checks: one PASS/FAIL line per criterion, details indented
// below it. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dissension/channels.h"
#include "dissension/cli.h"
#include "dissension/dissension.h"
#include "dissension/fixtures.h"
#include "dissension/measurement.h"
#include "dissension/mutualinfo.h"
#include "dissension/states.h"
#include "dissension/tables.h"
#include "properties.h"

using namespace dissension;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { details.push_back("info " + what); }
};

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, std::abs(v) < 5e-13 ? 0.0 : v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cell_name(const CellReport& c) {
  return c.state + " " + c.column + (c.anchor.empty() ? "" : "[" + c.anchor + "]");
}

TableReport run_table(const std::string& id, Criterion& c, double* elapsed = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  auto report = reproduce_table(fixture_table(id), OptimizerConfig{});
  double s = seconds_since(t0);
  if (elapsed != nullptr) *elapsed = s;
  std::size_t excluded = 0;
  for (const auto& cell : report.cells) {
    if (cell.excluded) {
      excluded++;
      c.info("excluded " + cell_name(cell) + ": computed " + fmt(cell.computed) + ", listed " +
             fmt(cell.expected));
    } else if (!cell.pass) {
      c.require(false, "table " + id + " " + cell_name(cell) + ": computed " + fmt(cell.computed) + ", expected " +
                           fmt(cell.expected) + " +/- " + fmt(cell.tolerance, 3));
    }
  }
  c.require(report.passed(), "table " + id + ": " + std::to_string(report.cells.size() - report.failures()) + "/" +
                                 std::to_string(report.cells.size()) + " entries within tolerance (" +
                                 std::to_string(excluded) + " excluded), " + fmt(s, 1) + " s");
  return report;
}

Criterion table_i() {
  Criterion c{1, "Table I reproduction (three-qubit Track-I)"};
  double s = 0;
  run_table("I", c, &s);
  c.require(s < 300, "runtime " + fmt(s, 1) + " s under 300 s with the default budget");
  return c;
}

Criterion table_ii() {
  Criterion c{2, "Table II reproduction (three-qubit Track-II)"};
  run_table("II", c);
  return c;
}

Criterion tables_iii_iv() {
  Criterion c{3, "Tables III-IV reproduction (four-qubit)"};
  run_table("III", c);
  run_table("IV", c);
  return c;
}

// values[state][column][anchor]
using CellMap = std::map<std::string, std::map<std::string, std::map<std::string, double>>>;

CellMap cell_map(const TableReport& r) {
  CellMap out;
  for (const auto& c : r.cells) out[c.state][c.column][c.anchor] = c.computed;
  return out;
}

Criterion biseparable_distinguishability() {
  Criterion c{4, "Tables V-VI biseparable distinguishability"};
  auto v = cell_map(reproduce_table(fixture_table("V"), OptimizerConfig{}));
  auto vi = cell_map(reproduce_table(fixture_table("VI"), OptimizerConfig{}));
  const std::vector<std::string> families = {"bisep4_", "bisep4c_", "bisep4q_"};
  for (const char* a : {"x", "y", "z", "w"}) {
    double track_i = 0;
    for (const auto& [column, entries] : v[families[0] + a]) {
      for (const auto& [anchor, value] : entries) {
        for (std::size_t f = 1; f < families.size(); f++) {
          track_i = std::max(track_i, std::abs(value - v[families[f] + a][column][anchor]));
        }
      }
    }
    c.require(track_i <= 0.02, std::string("Track-I vectors of the three families split at ") + a +
                                   " agree within " + fmt(track_i));
    for (std::size_t f = 0; f < families.size(); f++) {
      for (std::size_t g = f + 1; g < families.size(); g++) {
        double diff = 0;
        for (const auto& [anchor, value] : vi[families[f] + a]["delta_2^2"]) {
          diff = std::max(diff, std::abs(value - vi[families[g] + a]["delta_2^2"][anchor]));
        }
        c.require(diff > 0.3, "delta_2^2 of " + families[f] + a + " and " + families[g] + a + " differ by " +
                                  fmt(diff));
      }
    }
  }
  return c;
}

Criterion tables_vii_viii() {
  Criterion c{5, "Tables VII-VIII averages"};
  run_table("VII", c);
  run_table("VIII", c);
  return c;
}

Criterion ghz_conditional_mi() {
  Criterion c{6, "GHZ measured conditional mutual information"};
  auto g = ghz(3);
  const LabelSet z{"z"};
  auto comp = basis_from_params(z, computational_params(1));
  auto had = basis_from_params(z, hadamard_params(1));
  double i_comp = measured_conditional_mi(g, {"x"}, {"y"}, z, comp);
  double i_had = measured_conditional_mi(g, {"x"}, {"y"}, z, had);
  double mi = bipartite_mi(partial_trace(g, {"x", "y"}), {"x"}, {"y"});
  c.require(std::abs(i_comp) < 1e-9, "computational basis on z: I(x:y|z) = " + fmt(i_comp, 12));
  c.require(std::abs(i_had - 2) < 1e-9, "Hadamard basis on z: I(x:y|z) = " + fmt(i_had, 12));
  c.require(std::abs(mi - i_comp - 1) < 1e-9, "measured I_0 (computational) = " + fmt(mi - i_comp, 12));
  c.require(std::abs(mi - i_had + 1) < 1e-9, "measured I_0 (Hadamard) = " + fmt(mi - i_had, 12));
  return c;
}

Criterion discord_vectors() {
  Criterion c{7, "Two-qubit discord vectors"};
  OptimizerConfig cfg;
  auto check = [&](const std::string& name, double dx, double dy) {
    auto d = discord_vector(build(StateRecipe::parse(name)), cfg);
    c.require(std::abs(d.delta_x - dx) <= 0.01 && std::abs(d.delta_y - dy) <= 0.01,
              name + ": {" + fmt(d.delta_x) + ", " + fmt(d.delta_y) + "}, expected {" + fmt(dx, 1) + ", " +
                  fmt(dy, 1) + "}");
  };
  check("product2", 0, 0);
  check("classical2", 0, 0);
  check("cq", 0, 0.2);
  check("qc", 0.2, 0);
  for (const char* name : {"qq", "bell"}) {
    auto d = discord_vector(build(StateRecipe::parse(name)), cfg);
    c.info(std::string(name) + " (excluded): {" + fmt(d.delta_x) + ", " + fmt(d.delta_y) + "}, delta_a " +
           fmt(d.delta_a));
  }
  return c;
}

Criterion channels() {
  Criterion c{9, "Local channels on the four-qubit classical state"};
  OptimizerConfig cfg;
  auto cl = build(StateRecipe::parse("classical4"));
  auto base = dissension_vector(cl, 1, Track::kOne, cfg).values();
  auto nu = dissension_vector(apply_local(cl, "x", nonunital_channel(1)), 1, Track::kOne, cfg).values();
  auto pf = dissension_vector(apply_local(cl, "x", phase_flip_channel(0.3)), 1, Track::kOne, cfg).values();
  double largest = 0, change = 0, pf_change = 0;
  for (std::size_t i = 0; i < base.size(); i++) {
    largest = std::max(largest, std::abs(nu[i]));
    change = std::max(change, std::abs(nu[i] - base[i]));
    pf_change = std::max(pf_change, std::abs(pf[i] - base[i]));
  }
  c.require(largest > 0.01, "non-unital channel (n=1): largest |entry| " + fmt(largest));
  c.info("non-unital channel (n=1): largest change from the input vector " + fmt(change));
  c.require(pf_change <= 0.01, "phase flip: largest change " + fmt(pf_change));
  return c;
}

Criterion properties_suite() {
  Criterion c{8, "Property suites"};
  for (const auto& run : properties::all_properties(OptimizerConfig{})) {
    auto r = run();
    c.require(r.pass(), r.name + ": " + std::to_string(r.instances) + " instances, " +
                            std::to_string(r.failures) + " failures, worst " + fmt(r.worst, 12) +
                            (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
  }
  return c;
}

Criterion determinism() {
  Criterion c{10, "Determinism of reproduce I --seed 7"};
  auto run = [] {
    std::ostringstream out, err;
    run_cli({"reproduce", "I", "--seed", "7"}, out, err);
    return out.str();
  };
  auto a = run();
  auto b = run();
  c.require(!a.empty() && a == b, "two runs, " + std::to_string(a.size()) + " bytes each, identical: " +
                                      (a == b ? "yes" : "no"));
  return c;
}

}  // namespace

// Arguments, if any, select criteria by number.
int main(int argc, char** argv) {
  using Check = Criterion (*)();
  const std::vector<std::pair<int, Check>> checks = {
      {1, table_i},         {2, table_ii},           {3, tables_iii_iv},    {4, biseparable_distinguishability},
      {5, tables_vii_viii}, {6, ghz_conditional_mi}, {7, discord_vectors},  {8, properties_suite},
      {9, channels},        {10, determinism}};
  std::set<int> selected;
  for (int i = 1; i < argc; i++) selected.insert(std::atoi(argv[i]));
  int run = 0, failed = 0;
  for (const auto& [id, check] : checks) {
    if (!selected.empty() && !selected.contains(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Criterion c{id, "criterion " + std::to_string(id)};
    try {
      c = check();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %2d  %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds_since(t0));
    for (const auto& d : c.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
    run++;
    if (!c.pass) failed++;
  }
  std::printf("%d of %d criteria passed\n", run - failed, run);
  return failed == 0 ? 0 : 1;
}
