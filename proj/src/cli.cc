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

#include "dissension/cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dissension/dissension.h"
#include "dissension/fixtures.h"
#include "dissension/jobs.h"
#include "dissension/mutualinfo.h"
#include "dissension/states.h"
#include "dissension/tables.h"
#include "json.hpp"

namespace dissension {

namespace {

using nlohmann::json;

const std::vector<std::string> kMeasures = {"discord-vector",    "dissension",   "interaction-info",
                                            "total-correlation", "binding-info", "average-dissension",
                                            "all"};

// Bad command-line input that CLI11 cannot see (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (std::abs(v) < 5e-13) {
    return "0";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double clean(double v) { return std::abs(v) < 5e-13 ? 0.0 : v; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); i++) {
    out += (i ? "," : "") + csv_field(fields[i]);
  }
  return out + "\n";
}

struct Entry {
  std::string anchor;
  double value = 0;
  bool converged = true;
  json detail = json::object();
};

struct MeasureResult {
  std::string measure;  // column label in long-format output
  json header = json::object();
  std::vector<Entry> entries;
};

std::string track_label(int m, int t) { return "m" + std::to_string(m) + "_t" + std::to_string(t); }

Entry entry_from(const DissensionResult& d) {
  Entry e;
  e.anchor = d.anchor;
  e.value = clean(d.value);
  e.converged = d.converged;
  auto argmin = json::array();
  for (const auto& [subset, params] : d.argmin_params) {
    argmin.push_back({{"subset", subset}, {"params", params}});
  }
  e.detail = {{"restarts_used", d.restarts_used}, {"evaluations", d.evaluations}, {"argmin", argmin}};
  return e;
}

double grid_value(const DensityOperator& r, const DissensionSpec& spec, const OptimizerConfig& cfg) {
  double v = dissension_offset(r, spec);
  for (const auto& g : group_objectives(r, spec)) {
    v += grid_oracle(g.f, g.bounds, cfg).value;
  }
  return v;
}

std::vector<std::string> expand_measures(const std::vector<std::string>& requested, std::size_t n) {
  std::vector<std::string> out;
  auto add = [&out](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& s : requested) {
    if (s == "all") {
      if (n == 2) add("discord-vector");
      for (const char* k : {"interaction-info", "total-correlation", "binding-info", "dissension",
                            "average-dissension"}) {
        add(k);
      }
    } else {
      add(s);
    }
  }
  return out;
}

std::vector<MeasureResult> compute_measures(const DensityOperator& r, const RunManifest& man) {
  const std::size_t n = r.num_qubits();
  const auto& names = r.reg().names();
  const auto& cfg = man.optimizer;
  auto parts = Partition::singletons(r.reg());
  std::vector<int> ms;
  if (man.m) {
    if (*man.m < 1 || static_cast<std::size_t>(*man.m) >= n) {
      throw UsageError("--m must be in 1.." + std::to_string(n - 1) + " for a " + std::to_string(n) + "-qubit state");
    }
    ms.push_back(*man.m);
  } else {
    for (std::size_t k = 1; k < n; k++) ms.push_back(static_cast<int>(k));
  }
  std::vector<int> tracks = man.track ? std::vector<int>{*man.track} : std::vector<int>{1, 2};

  std::map<std::pair<int, int>, DissensionVector> vectors;
  auto vector_for = [&](int m, int t) -> const DissensionVector& {
    auto key = std::make_pair(m, t);
    auto it = vectors.find(key);
    if (it == vectors.end()) {
      it = vectors.emplace(key, dissension_vector(r, m, t == 1 ? Track::kOne : Track::kTwo, cfg)).first;
    }
    return it->second;
  };

  std::vector<MeasureResult> out;
  for (const auto& name : expand_measures(man.measures, n)) {
    if (name == "discord-vector") {
      if (n != 2) {
        throw UsageError("discord-vector needs a two-qubit state");
      }
      MeasureResult res{"discord", {{"measure", "discord-vector"}}, {}};
      auto x = dissension(r, {1, Track::kOne, names[0], names}, cfg);
      auto y = dissension(r, {1, Track::kOne, names[1], names}, cfg);
      auto a = dissension(r, {1, Track::kTwo, names[0], names}, cfg);
      for (auto [label, d] : {std::pair{"x", &x}, std::pair{"y", &y}, std::pair{"a", &a}}) {
        Entry e = entry_from(*d);
        e.anchor = label;
        res.entries.push_back(std::move(e));
      }
      out.push_back(std::move(res));
    } else if (name == "interaction-info" || name == "total-correlation" || name == "binding-info") {
      double v = name == "interaction-info"    ? interaction_information(r, parts)
                 : name == "total-correlation" ? total_correlation(r, parts)
                                               : binding_information(r, parts);
      std::string label = name == "interaction-info" ? "interaction_info"
                          : name == "total-correlation" ? "total_correlation"
                                                        : "binding_info";
      Entry e;
      e.value = clean(v);
      out.push_back({label, {{"measure", name}}, {e}});
    } else if (name == "dissension") {
      for (int t : tracks) {
        for (int m : ms) {
          const auto& v = vector_for(m, t);
          MeasureResult res{"dissension_" + track_label(m, t),
                            {{"measure", "dissension"}, {"m", m}, {"track", t}, {"symmetric", v.symmetric}},
                            {}};
          for (const auto& d : v.entries) {
            res.entries.push_back(entry_from(d));
          }
          out.push_back(std::move(res));
          if (man.grid_check && m == 1) {
            MeasureResult g{"dissension_" + track_label(m, t) + "_grid",
                            {{"measure", "dissension-grid"}, {"m", m}, {"track", t}, {"grid", cfg.grid_density}},
                            {}};
            for (const auto& d : v.entries) {
              DissensionSpec spec{m, t == 1 ? Track::kOne : Track::kTwo, d.anchor.empty() ? names[0] : d.anchor,
                                  names};
              Entry e;
              e.anchor = d.anchor;
              e.value = clean(grid_value(r, spec, cfg));
              g.entries.push_back(e);
            }
            out.push_back(std::move(g));
          }
        }
      }
    } else if (name == "average-dissension") {
      for (int t : tracks) {
        for (int m : ms) {
          const auto& v = vector_for(m, t);
          Entry e;
          e.value = clean(average_dissension(v));
          e.converged = v.converged();
          out.push_back({"average_" + track_label(m, t),
                         {{"measure", "average-dissension"}, {"m", m}, {"track", t}},
                         {e}});
        }
      }
    } else {
      throw UsageError("unknown measure '" + name + "'");
    }
  }
  return out;
}

json results_json(const std::vector<MeasureResult>& results) {
  auto arr = json::array();
  for (const auto& res : results) {
    json j = res.header;
    auto entries = json::array();
    for (const auto& e : res.entries) {
      json je = e.detail;
      je["anchor"] = e.anchor;
      je["value"] = e.value;
      je["converged"] = e.converged;
      entries.push_back(je);
    }
    j["entries"] = entries;
    arr.push_back(j);
  }
  return arr;
}

bool all_converged(const std::vector<MeasureResult>& results) {
  for (const auto& res : results) {
    for (const auto& e : res.entries) {
      if (!e.converged) return false;
    }
  }
  return true;
}

// The states named by a manifest, paired with a display label.
std::vector<std::pair<std::string, DensityOperator>> manifest_states(const RunManifest& man) {
  std::vector<std::pair<std::string, DensityOperator>> out;
  for (const auto& s : man.states) {
    out.emplace_back(StateRecipe::parse(s).to_string(), build(StateRecipe::parse(s)));
  }
  if (!man.state_json.empty()) {
    auto r = state_from_json(man.state_json);
    auto rep = validate(r);
    if (!rep.ok()) {
      throw ValidationError("state file " + man.state_file + ": " + rep.summary());
    }
    out.emplace_back(man.state_file.empty() ? "file" : man.state_file, DensityOperator(r.matrix(), r.reg()));
  }
  if (out.empty()) {
    throw UsageError("no state given (use --state or --state-file)");
  }
  return out;
}

struct Document {
  std::string text;
  int code = kExitOk;
};

std::string csv_preamble(const RunManifest& man) { return "# manifest: " + man.to_json() + "\n"; }

Document run_compute(const RunManifest& man, std::ostream& err) {
  auto states = manifest_states(man);
  std::vector<std::vector<MeasureResult>> results(states.size());
  parallel_for(states.size(), man.jobs,
               [&](std::size_t i) { results[i] = compute_measures(states[i].second, man); });
  Document doc;
  bool conv = true;
  for (const auto& r : results) conv = conv && all_converged(r);
  if (man.format == "json") {
    json j;
    j["manifest"] = json::parse(man.to_json());
    j["states"] = json::array();
    for (std::size_t i = 0; i < states.size(); i++) {
      j["states"].push_back({{"state", states[i].first},
                             {"qubits", states[i].second.num_qubits()},
                             {"results", results_json(results[i])}});
    }
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_preamble(man) + csv_line({"state", "measure", "anchor", "value", "converged"});
    for (std::size_t i = 0; i < states.size(); i++) {
      for (const auto& res : results[i]) {
        for (const auto& e : res.entries) {
          doc.text += csv_line({states[i].first, res.measure, e.anchor, fmt(e.value), e.converged ? "1" : "0"});
        }
      }
    }
  }
  if (!conv) {
    err << "warning: optimizer did not converge for at least one entry (flagged in output)\n";
    doc.code = kExitNonConvergence;
  }
  return doc;
}

Document run_sweep(const RunManifest& man, std::ostream& err) {
  if (man.states.size() != 1) {
    throw UsageError("sweep takes exactly one --state family");
  }
  if (man.sweep_points < 1) {
    throw UsageError("sweep needs at least one point");
  }
  auto base = StateRecipe::parse(man.states[0]);
  const auto& entry = catalog_entry(base.name);
  std::string param = man.sweep_param;
  if (param.empty()) {
    if (entry.params.size() != 1) {
      throw UsageError("state '" + base.name + "' needs --param (it has " + std::to_string(entry.params.size()) +
                       " parameters)");
    }
    param = entry.params[0].name;
  }
  std::vector<double> points;
  for (int i = 0; i < man.sweep_points; i++) {
    points.push_back(man.sweep_points == 1 ? man.sweep_from
                                           : man.sweep_from + (man.sweep_to - man.sweep_from) * i /
                                                                  (man.sweep_points - 1));
  }
  std::vector<std::vector<MeasureResult>> results(points.size());
  parallel_for(points.size(), man.jobs, [&](std::size_t i) {
    auto recipe = base;
    recipe.params[param] = points[i];
    results[i] = compute_measures(build(recipe), man);
  });
  Document doc;
  bool conv = true;
  for (const auto& r : results) conv = conv && all_converged(r);
  if (man.format == "json") {
    json j;
    j["manifest"] = json::parse(man.to_json());
    j["param"] = param;
    j["points"] = json::array();
    for (std::size_t i = 0; i < points.size(); i++) {
      j["points"].push_back({{"param", points[i]}, {"results", results_json(results[i])}});
    }
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_preamble(man) + csv_line({"param", "measure", "anchor", "value", "converged"});
    for (std::size_t i = 0; i < points.size(); i++) {
      for (const auto& res : results[i]) {
        for (const auto& e : res.entries) {
          doc.text += csv_line({fmt(points[i]), res.measure, e.anchor, fmt(e.value), e.converged ? "1" : "0"});
        }
      }
    }
  }
  if (!conv) {
    err << "warning: optimizer did not converge for at least one point (flagged in output)\n";
    doc.code = kExitNonConvergence;
  }
  return doc;
}

Document run_reproduce(const RunManifest& man, std::ostream& err) {
  const auto& table = fixture_table(man.table);
  auto rep = reproduce_table(table, man.optimizer, man.jobs);
  Document doc;
  auto status = [](const CellReport& c) { return c.excluded ? "excluded" : c.pass ? "pass" : "fail"; };
  if (man.format == "json") {
    json j;
    j["manifest"] = json::parse(man.to_json());
    j["table"] = table.id;
    j["title"] = table.title;
    j["failures"] = rep.failures();
    j["cells"] = json::array();
    for (const auto& c : rep.cells) {
      j["cells"].push_back({{"state", c.state},
                            {"label", c.label},
                            {"column", c.column},
                            {"anchor", c.anchor},
                            {"computed", clean(c.computed)},
                            {"expected", c.expected},
                            {"abs_delta", c.delta},
                            {"tolerance", c.tolerance},
                            {"status", status(c)},
                            {"converged", c.converged},
                            {"note", c.note}});
    }
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_preamble(man) + csv_line({"table", "state", "label", "column", "anchor", "computed", "expected",
                                             "abs_delta", "tolerance", "status", "converged"});
    for (const auto& c : rep.cells) {
      doc.text += csv_line({c.table, c.state, c.label, c.column, c.anchor, fmt(c.computed), fmt(c.expected),
                            fmt(c.delta), fmt(c.tolerance), status(c), c.converged ? "1" : "0"});
    }
  }
  err << "table " << table.id << ": " << rep.cells.size() << " entries, " << rep.failures() << " outside tolerance\n";
  for (const auto& c : rep.cells) {
    if (!c.pass && !c.excluded) {
      err << "  " << c.label << " " << c.column << (c.anchor.empty() ? "" : "[" + c.anchor + "]") << ": computed "
          << fmt(c.computed) << ", expected " << fmt(c.expected) << "\n";
    }
  }
  doc.code = rep.passed() ? kExitOk : kExitTableFailure;
  return doc;
}

Document run_validate(const RunManifest& man) {
  std::vector<std::pair<std::string, ValidationReport>> reports;
  for (const auto& s : man.states) {
    reports.emplace_back(s, validate(build(StateRecipe::parse(s))));
  }
  if (!man.state_json.empty()) {
    reports.emplace_back(man.state_file, validate(state_from_json(man.state_json)));
  }
  if (reports.empty()) {
    throw UsageError("no state given (use --state or --state-file)");
  }
  Document doc;
  bool ok = true;
  if (man.format == "json") {
    json j;
    j["manifest"] = json::parse(man.to_json());
    j["states"] = json::array();
    for (const auto& [name, r] : reports) {
      j["states"].push_back({{"state", name},
                             {"ok", r.ok()},
                             {"hermitian", r.hermitian},
                             {"unit_trace", r.unit_trace},
                             {"positive", r.positive},
                             {"hermiticity_defect", r.hermiticity_defect},
                             {"trace_defect", r.trace_defect},
                             {"min_eigenvalue", r.min_eigenvalue}});
    }
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_preamble(man) + csv_line({"state", "ok", "hermitian", "unit_trace", "positive",
                                             "hermiticity_defect", "trace_defect", "min_eigenvalue"});
    for (const auto& [name, r] : reports) {
      doc.text += csv_line({name, r.ok() ? "1" : "0", r.hermitian ? "1" : "0", r.unit_trace ? "1" : "0",
                            r.positive ? "1" : "0", fmt(r.hermiticity_defect), fmt(r.trace_defect),
                            fmt(r.min_eigenvalue)});
    }
  }
  for (const auto& [name, r] : reports) ok = ok && r.ok();
  doc.code = ok ? kExitOk : kExitValidation;
  return doc;
}

Document run_catalog(const RunManifest& man) {
  Document doc;
  auto params_text = [](const CatalogEntry& e) {
    std::string s;
    for (const auto& p : e.params) {
      s += (s.empty() ? "" : ";") + p.name + "=" + fmt(p.default_value) + " in [" + fmt(p.lo) + "," + fmt(p.hi) + "]";
    }
    return s;
  };
  if (man.format == "json") {
    json j;
    j["manifest"] = json::parse(man.to_json());
    j["states"] = json::array();
    for (const auto& e : catalog()) {
      auto params = json::array();
      for (const auto& p : e.params) {
        params.push_back({{"name", p.name},
                          {"lo", p.lo},
                          {"hi", p.hi},
                          {"default", p.default_value},
                          {"description", p.description}});
      }
      j["states"].push_back(
          {{"name", e.name}, {"qubits", e.qubits}, {"params", params}, {"description", e.description}});
    }
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_preamble(man) + csv_line({"name", "qubits", "params", "description"});
    for (const auto& e : catalog()) {
      doc.text += csv_line({e.name, std::to_string(e.qubits), params_text(e), e.description});
    }
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["states"] = states;
  j["state_file"] = state_file;
  j["state_json"] = state_json.empty() ? json(nullptr) : json::parse(state_json);
  j["measures"] = measures;
  j["m"] = m ? json(*m) : json(nullptr);
  j["track"] = track ? json(*track) : json(nullptr);
  j["optimizer"] = {{"restarts", optimizer.restarts},
                    {"max_iterations", optimizer.max_iterations},
                    {"tolerance", optimizer.simplex_tolerance},
                    {"grid_density", optimizer.grid_density}};
  j["seed"] = optimizer.seed;
  j["grid_check"] = grid_check;
  j["table"] = table;
  j["sweep"] = {{"param", sweep_param}, {"from", sweep_from}, {"to", sweep_to}, {"points", sweep_points}};
  j["jobs"] = jobs;
  j["out"] = out;
  j["format"] = format;
  j["version"] = version;
  return j.dump();
}

RunManifest RunManifest::from_text(const std::string& text) {
  json j;
  const std::string tag = "# manifest: ";
  if (text.rfind(tag, 0) == 0) {
    auto end = text.find('\n');
    j = json::parse(text.substr(tag.size(), end == std::string::npos ? std::string::npos : end - tag.size()));
  } else {
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("not a manifest: ") + e.what());
    }
    if (j.contains("manifest")) {
      j = j["manifest"];
    }
  }
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.states = j.at("states").get<std::vector<std::string>>();
    m.state_file = j.value("state_file", "");
    if (j.contains("state_json") && !j["state_json"].is_null()) {
      m.state_json = j["state_json"].dump();
    }
    m.measures = j.at("measures").get<std::vector<std::string>>();
    if (!j.at("m").is_null()) m.m = j["m"].get<int>();
    if (!j.at("track").is_null()) m.track = j["track"].get<int>();
    const auto& o = j.at("optimizer");
    m.optimizer.restarts = o.at("restarts").get<int>();
    m.optimizer.max_iterations = o.at("max_iterations").get<int>();
    m.optimizer.simplex_tolerance = o.at("tolerance").get<double>();
    m.optimizer.grid_density = o.at("grid_density").get<int>();
    m.optimizer.seed = j.at("seed").get<std::uint64_t>();
    m.grid_check = j.value("grid_check", false);
    m.table = j.value("table", "");
    const auto& s = j.at("sweep");
    m.sweep_param = s.at("param").get<std::string>();
    m.sweep_from = s.at("from").get<double>();
    m.sweep_to = s.at("to").get<double>();
    m.sweep_points = s.at("points").get<int>();
    m.jobs = j.value("jobs", 1);
    m.out = j.value("out", "");
    m.format = j.value("format", "csv");
    m.version = j.value("version", kToolVersion);
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
}

namespace {

int execute_to(const RunManifest& man, const std::string& dest, std::ostream& out, std::ostream& err) {
  Document doc;
  try {
    man.optimizer.check();
    if (man.command == "compute") {
      doc = run_compute(man, err);
    } else if (man.command == "sweep") {
      doc = run_sweep(man, err);
    } else if (man.command == "reproduce") {
      doc = run_reproduce(man, err);
    } else if (man.command == "validate") {
      doc = run_validate(man);
    } else if (man.command == "catalog") {
      doc = run_catalog(man);
    } else {
      throw UsageError("unknown command '" + man.command + "'");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    // Unknown states, bad parameters, invalid matrices, bad labels.
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  if (dest.empty()) {
    out << doc.text;
  } else {
    std::ofstream f(dest, std::ios::binary);
    f << doc.text;
    if (!f) {
      err << "error: cannot write '" << dest << "'\n";
      return kExitParse;
    }
  }
  return doc.code;
}

}  // namespace

int execute(const RunManifest& man, std::ostream& out, std::ostream& err) { return execute_to(man, man.out, out, err); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dissension vectors and multivariate quantum mutual information for qubit states", "dissension"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(0, 1);

  RunManifest man;
  std::string replay;
  std::string replay_out;
  app.add_option("--replay", replay, "Rerun the manifest embedded in a result file (or a bare manifest)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", replay_out, "Output path for --replay");

  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  bool fast = false;
  bool thorough = false;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", man.out, "Write the document here instead of stdout");
    sub->add_option("--format", man.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--restarts", restarts, "Optimizer restarts per minimization")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Random seed (default: $DISSENSION_SEED or built in)");
    sub->add_option("--grid", grid, "Grid density; also cross-checks single-qubit measurements on a grid")
        ->check(CLI::Range(2, 100000));
    sub->add_option("--jobs", man.jobs, "Concurrent workers")->check(CLI::PositiveNumber);
    auto* f = sub->add_flag("--fast", fast, "Halve the restarts");
    auto* t = sub->add_flag("--thorough", thorough, "Double the restarts");
    f->excludes(t);
  };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", man.states, "Catalog recipe, e.g. werner2:p=0.5 (repeatable)");
    sub->add_option("--state-file", man.state_file, "JSON density matrix")->check(CLI::ExistingFile);
  };
  auto add_measures = [&](CLI::App* sub) {
    sub->add_option("--measure", man.measures, "Measures to compute (repeatable)")->check(CLI::IsMember(kMeasures));
    sub->add_option("--m", man.m, "Measured-party count")->check(CLI::PositiveNumber);
    sub->add_option("--track", man.track, "Track, 1 or 2")->check(CLI::IsMember({1, 2}));
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "List the named states");
  add_output(catalog_cmd);

  auto* compute_cmd = app.add_subcommand("compute", "Compute measures for one or more states");
  add_state(compute_cmd);
  add_measures(compute_cmd);
  add_optimizer(compute_cmd);
  add_output(compute_cmd);

  std::string range;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a state family's parameter");
  add_state(sweep_cmd);
  add_measures(sweep_cmd);
  add_optimizer(sweep_cmd);
  add_output(sweep_cmd);
  sweep_cmd->add_option("--param", man.sweep_param, "Parameter to sweep (default: the family's only one)");
  sweep_cmd->add_option("--range", range, "from:to:points, inclusive (default 0:1:11)");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute a reference table and compare");
  reproduce_cmd->add_option("table", man.table, "Table id")->required()->check(CLI::IsMember(fixture_table_ids()));
  add_optimizer(reproduce_cmd);
  add_output(reproduce_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Check density-matrix invariants");
  add_state(validate_cmd);
  add_output(validate_cmd);

  std::vector<const char*> argv = {"dissension"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  if (!replay.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --replay takes no subcommand\n";
      return kExitParse;
    }
    try {
      // The manifest is kept byte for byte; only the destination changes.
      return execute_to(RunManifest::from_text(read_file(replay)), replay_out, out, err);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitParse;
    }
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return kExitParse;
  }
  man.command = app.get_subcommands()[0]->get_name();

  if (seed) {
    man.optimizer.seed = *seed;
  } else if (const char* env = std::getenv("DISSENSION_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      man.optimizer.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: DISSENSION_SEED is not an unsigned integer: '" << env << "'\n";
      return kExitParse;
    }
  }
  if (restarts) man.optimizer.restarts = *restarts;
  if (fast) man.optimizer.restarts = std::max(1, man.optimizer.restarts / 2);
  if (thorough) man.optimizer.restarts *= 2;
  if (grid) {
    man.optimizer.grid_density = *grid;
    man.grid_check = true;
  }
  if (man.measures.empty()) man.measures = {"all"};
  if (man.command == "catalog" || man.command == "reproduce") man.measures.clear();
  if (!range.empty()) {
    double a = 0, b = 0;
    int k = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(range);
    if (!(in >> a >> c1 >> b >> c2 >> k) || c1 != ':' || c2 != ':' || k < 1 || !(in >> std::ws).eof()) {
      err << "error: --range must look like from:to:points\n";
      return kExitParse;
    }
    man.sweep_from = a;
    man.sweep_to = b;
    man.sweep_points = k;
  }
  if (!man.state_file.empty()) {
    try {
      man.state_json = json::parse(read_file(man.state_file)).dump();
    } catch (const json::exception& e) {
      err << "error: " << man.state_file << " is not JSON: " << e.what() << "\n";
      return kExitParse;
    }
  }
  return execute(man, out, err);
}

}  // namespace dissension
