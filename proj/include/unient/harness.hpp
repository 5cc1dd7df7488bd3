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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "unient/inequality.hpp"

namespace unient {

// One entry of a sweep's "states" list.
//   {"named": "ghz", "n_qubits": 3}
//   {"random": "pure",  "n_qubits": 4, "count": 200, "seed": 1}
//   {"random": "mixed", "n_qubits": 3, "rank": 4, "count": 50, "seed": 2}
//   {"file": "state.json", "id": "optional-label"}
//   {"ensemble": "default"}
struct StateSpec {
  enum class Kind { kNamed, kRandomPure, kRandomMixed, kFile, kDefaultEnsemble };
  Kind kind = Kind::kNamed;
  NamedKind named = NamedKind::kGhz;
  int n_qubits = 3;
  int count = 1;
  int rank = 4;
  std::uint64_t seed = 1;
  std::filesystem::path file;
  std::string id;
};

enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
  std::vector<StateSpec> states;
  int focus = 0;
  std::vector<Theorem> theorems;
  std::vector<std::pair<double, double>> params;
  std::vector<double> alphas{1.0};
  std::vector<double> betas{1.0};
  OptBudget budget;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::kCsv;
  bool include_witness = false;
  bool exploratory = false;
  int jobs = 0;  // 0: hardware concurrency
};

// Throws Error(kUsage) on malformed documents.
SweepConfig parse_sweep_config(const nlohmann::json& doc);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// Throws Error(kUsage) for empty lists and Error(kRegion) for an in-scope
// (q, s) outside a requested theorem's region when not exploratory.
void validate(const SweepConfig& config);

struct LabeledState {
  std::string id;
  QuantumState state;
};

std::vector<LabeledState> expand_states(const std::vector<StateSpec>& specs);

struct SweepRow {
  std::string state_id;
  InequalityReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // state x theorem x (q, s) x exponent
  bool any_inconclusive_in_region = false;
};

SweepResult run_sweep(const SweepConfig& config);
std::string render(const SweepResult& result, OutputFormat format, bool include_witness);

// Runs, writes to config.output_path (or `out` when empty) and returns the
// process exit status: 1 iff an in-region check was inconclusive.
int run_sweep_command(const SweepConfig& config, std::ostream& out);

// Runs f(i) for i in [0, count) on `jobs` threads (0: all cores).
void parallel_for(int count, int jobs, const std::function<void(int)>& f);

// ---------------------------------------------------------------------------
// Acceptance suite

struct AcceptanceOptions {
  std::uint64_t seed = 20180522;
  int jobs = 0;
  // |slack| gate for the W-state saturation checks.
  double saturation_gate = 2e-3;
  std::optional<std::set<int>> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<std::string> acceptance_criteria();

// Prints one line per criterion to `log` as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& log);

}  // namespace unient
