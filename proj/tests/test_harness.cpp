// Copyright 2026 The unient Authors.
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "unient/errors.hpp"
#include "unient/harness.hpp"
#include "unient/report_io.hpp"
#include "unient/state_io.hpp"

using namespace unient;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kUsage;
}

json ghz_config() {
  return json::parse(R"({
    "states": [{"named": "ghz", "n_qubits": 3}],
    "theorems": ["1"],
    "params": [[2, 1]],
    "alphas": [1, 2],
    "budget": {"restarts": 8}
  })");
}

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig c = parse_sweep_config(json::parse(R"({
    "states": [{"named": "w", "n_qubits": 4}, {"random": "pure", "n_qubits": 3, "count": 5, "seed": 9},
               {"random": "mixed", "n_qubits": 3, "rank": 2, "count": 2}],
    "focus": 1,
    "theorems": ["1", "base-poly", "4"],
    "params": [[2, 1], [1.5, 0.8]],
    "alphas": 2,
    "betas": [0.25, 0.5],
    "budget": {"restarts": 4, "iterations": 500, "ensemble_cap": 8, "tolerance": 1e-8, "seed": 3},
    "output": {"path": "out.csv", "format": "json", "witness": true},
    "exploratory": true,
    "jobs": 2
  })"));
  CHECK(c.states.size() == 3);
  CHECK(c.states[0].named == NamedKind::kW);
  CHECK(c.states[1].kind == StateSpec::Kind::kRandomPure);
  CHECK(c.states[1].count == 5);
  CHECK(c.states[2].rank == 2);
  CHECK(c.focus == 1);
  CHECK(c.theorems == std::vector<Theorem>{Theorem::kHammingMono, Theorem::kBasePoly, Theorem::kIndexedPoly});
  CHECK(c.alphas == std::vector<double>{2.0});
  CHECK(c.betas.size() == 2);
  CHECK(c.budget.restarts == 4);
  CHECK(c.budget.iterations == 500);
  CHECK(c.budget.max_ensemble == 8);
  CHECK(c.budget.seed == 3);
  CHECK(c.output_path == "out.csv");
  CHECK(c.format == OutputFormat::kJson);
  CHECK(c.include_witness);
  CHECK(c.exploratory);
  CHECK(c.jobs == 2);
  CHECK(expand_states(c.states).size() == 8);
}

TEST_CASE("config errors") {
  CHECK(code_of([] { parse_sweep_config(json::parse(R"({"states": [{"color": "red"}]})")); }) == ErrorCode::kUsage);
  CHECK(code_of([] { parse_sweep_config(json::parse(R"({"params": [[2]]})")); }) == ErrorCode::kUsage);
  CHECK(code_of([] { parse_sweep_config(json::parse(R"({"focus": "zero"})")); }) == ErrorCode::kUsage);
  CHECK(code_of([] { parse_sweep_config(json::parse(R"({"states": [{"named": "cluster"}]})")); }) ==
        ErrorCode::kUnknownState);

  json empty = ghz_config();
  empty["states"] = json::array();
  CHECK(code_of([&] { validate(parse_sweep_config(empty)); }) == ErrorCode::kUsage);

  json outside = ghz_config();
  outside["params"] = json::parse("[[2, 1.6]]");
  CHECK(code_of([&] { validate(parse_sweep_config(outside)); }) == ErrorCode::kRegion);
  outside["exploratory"] = true;
  CHECK_NOTHROW(validate(parse_sweep_config(outside)));

  json bad_alpha = ghz_config();
  bad_alpha["alphas"] = json::parse("[0.5]");
  CHECK(code_of([&] { validate(parse_sweep_config(bad_alpha)); }) == ErrorCode::kDomain);

  CHECK_THROWS(load_sweep_config("/nonexistent/config.json"));
}

TEST_CASE("GHZ sweep gives two confirmed rows") {
  const SweepResult r = run_sweep(parse_sweep_config(ghz_config()));
  REQUIRE(r.rows.size() == 2);
  for (const auto& row : r.rows) {
    CHECK(row.state_id == "ghz3");
    CHECK(row.report.verdict == Verdict::kConfirmed);
  }
  CHECK(r.rows[0].report.exponent == 1.0);
  CHECK(r.rows[1].report.exponent == 2.0);
  CHECK_FALSE(r.any_inconclusive_in_region);
}

TEST_CASE("row count and order") {
  json doc = ghz_config();
  doc["states"] = json::parse(R"([{"named": "w", "n_qubits": 3}, {"random": "pure", "n_qubits": 3, "count": 2}])");
  doc["theorems"] = json::parse(R"(["1", "2", "3"])");
  doc["params"] = json::parse("[[2, 1], [1.5, 1]]");
  doc["betas"] = json::parse("[0.5]");
  doc["exploratory"] = true;
  const SweepResult r = run_sweep(parse_sweep_config(doc));
  // states x (2 mono theorems x 2 params x 2 alphas + 1 poly theorem x 2 params x 1 beta)
  CHECK(r.rows.size() == 3 * (2 * 2 * 2 + 2 * 1));
  CHECK(r.rows.front().state_id == "w3");
  CHECK(r.rows.back().state_id == "haar3-s1-1");
  const std::string csv = render(r, OutputFormat::kCsv, false);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.rows.size()) + 1);
  CHECK(csv.rfind(csv_header() + "\n", 0) == 0);
  for (const auto& row : r.rows)
    if (!row.report.in_region) CHECK(row.report.verdict == Verdict::kInconclusive);
  const json rows = json::parse(render(r, OutputFormat::kJson, false));
  CHECK(rows.size() == r.rows.size());
}

TEST_CASE("sweeps are deterministic across worker counts") {
  json doc = ghz_config();
  doc["states"] = json::parse(R"([{"random": "pure", "n_qubits": 3, "count": 3, "seed": 4},
                                 {"random": "mixed", "n_qubits": 3, "rank": 2, "count": 1, "seed": 4}])");
  doc["theorems"] = json::parse(R"(["1", "2"])");
  SweepConfig c = parse_sweep_config(doc);
  c.jobs = 1;
  const std::string a = render(run_sweep(c), OutputFormat::kCsv, false);
  c.jobs = 3;
  const std::string b = render(run_sweep(c), OutputFormat::kCsv, false);
  CHECK(a == b);
}

TEST_CASE("sweep command writes the output file") {
  const auto path = std::filesystem::temp_directory_path() / "unient_sweep.csv";
  SweepConfig c = parse_sweep_config(ghz_config());
  c.output_path = path.string();
  std::ostringstream sink;
  CHECK(run_sweep_command(c, sink) == 0);
  CHECK(sink.str().empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == csv_header());
}

TEST_CASE("state files in configs") {
  const auto path = std::filesystem::temp_directory_path() / "unient_w3_cfg.json";
  save_state(named_state(NamedKind::kW, 3), path);
  json doc = ghz_config();
  doc["states"] = json::array({{{"file", path.string()}}});
  const auto states = expand_states(parse_sweep_config(doc).states);
  REQUIRE(states.size() == 1);
  CHECK(states[0].id == "unient_w3_cfg");
}

TEST_CASE("default ensemble composition") {
  StateSpec spec;
  spec.kind = StateSpec::Kind::kDefaultEnsemble;
  const auto states = expand_states({spec});
  CHECK(states.size() == 4 + 400 + 50);
  int mixed = 0;
  for (const auto& s : states) mixed += std::holds_alternative<DensityMatrix>(s.state);
  CHECK(mixed == 50);
}

TEST_CASE("csv rows") {
  const auto r = check(named_state(NamedKind::kGhz, 3), 0, {1, 2}, UnifiedParams::make(2.0, 1.0),
                       Theorem::kIndexedMono, 2.0, OptBudget{});
  const std::string row = csv_row("ghz3", r);
  CHECK(row.rfind("ghz3,monogamy,", 0) == 0);
  CHECK(row.find(",confirmed,true,") != std::string::npos);
  CHECK(row.find("0;1") != std::string::npos);
  const json j = report_to_json("ghz3", r, true);
  CHECK(j["verdict"] == "confirmed");
}
