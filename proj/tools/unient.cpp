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

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unient/errors.hpp"
#include "unient/harness.hpp"
#include "unient/report_io.hpp"
#include "unient/state_io.hpp"

using namespace unient;

namespace {

struct BudgetFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<int> iterations;
  std::optional<int> ensemble_cap;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "optimizer seed");
    app->add_option("--restarts", restarts, "optimizer restarts per roof");
    app->add_option("--iters", iterations, "Nelder-Mead iterations per restart");
    app->add_option("--ensemble-cap", ensemble_cap, "largest decomposition size searched");
  }

  void apply(OptBudget& b) const {
    if (seed) b.seed = *seed;
    if (restarts) b.restarts = *restarts;
    if (iterations) b.iterations = *iterations;
    if (ensemble_cap) b.max_ensemble = *ensemble_cap;
    b.validate();
  }
};

struct StateFlags {
  std::string file;
  std::string named;
  int n = 3;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--state", file, "state file (JSON)");
    auto* k = app->add_option("--named", named, "ghz, w, product or bell");
    f->excludes(k);
    app->add_option("--n", n, "qubit count for --named");
  }

  QuantumState load() const {
    if (!file.empty()) return load_state(file);
    if (named.empty()) throw Error(ErrorCode::kUsage, "give --state or --named");
    return named_state(named, n);
  }
};

std::string dump(const nlohmann::json& doc) { return doc.dump(2); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unified-(q,s) entanglement measures and weighted monogamy/polygamy checks"};
  app.require_subcommand(1);

  // entropy
  auto* entropy_cmd = app.add_subcommand("entropy", "unified entropy of a spectrum");
  std::vector<double> spectrum;
  double q = 2.0, s = 1.0;
  entropy_cmd->add_option("--spectrum", spectrum, "eigenvalues")->required()->delimiter(',');
  entropy_cmd->add_option("--q", q);
  entropy_cmd->add_option("--s", s);

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "UE and UEoA across a cut");
  StateFlags measure_state;
  BudgetFlags measure_budget;
  std::vector<int> cut;
  bool witness = false;
  measure_state.attach(measure_cmd);
  measure_budget.attach(measure_cmd);
  measure_cmd->add_option("--cut", cut, "qubits on side A")->required()->delimiter(',');
  measure_cmd->add_option("--q", q);
  measure_cmd->add_option("--s", s);
  measure_cmd->add_flag("--witness", witness, "include optimal decompositions");

  // check
  auto* check_cmd = app.add_subcommand("check", "one inequality on one state");
  StateFlags check_state;
  BudgetFlags check_budget;
  std::string theorem_name = "1";
  std::optional<double> alpha, beta;
  int focus = 0;
  std::vector<int> parties;
  std::string format = "csv";
  bool exploratory = false;
  check_state.attach(check_cmd);
  check_budget.attach(check_cmd);
  check_cmd->add_option("--theorem", theorem_name, "1, 2, 3, 4, base-mono or base-poly");
  check_cmd->add_option("--q", q);
  check_cmd->add_option("--s", s);
  check_cmd->add_option("--alpha", alpha, "monogamy exponent");
  check_cmd->add_option("--beta", beta, "polygamy exponent");
  check_cmd->add_option("--focus", focus, "qubit A");
  check_cmd->add_option("--parties", parties, "qubits B_0, B_1, ... (default: all others)")->delimiter(',');
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  check_cmd->add_flag("--exploratory", exploratory, "allow (q, s) outside the proven region");
  check_cmd->add_flag("--witness", witness, "include optimal decompositions (json)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "batch verification from a config file");
  std::string config_path, out_path;
  std::optional<std::string> sweep_format;
  std::optional<int> jobs;
  BudgetFlags sweep_budget;
  sweep_cmd->add_option("--config", config_path, "sweep config (JSON)")->required();
  sweep_budget.attach(sweep_cmd);
  sweep_cmd->add_option("--out", out_path, "output file (default: stdout)");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--exploratory", exploratory);
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0: all cores)");

  // acceptance
  auto* acc_cmd = app.add_subcommand("acceptance", "run the acceptance criteria");
  AcceptanceOptions acc;
  bool list_only = false;
  std::vector<int> only;
  acc_cmd->add_option("--seed", acc.seed);
  acc_cmd->add_option("--jobs", acc.jobs);
  acc_cmd->add_option("--saturation-gate", acc.saturation_gate, "|slack| gate for the W-state checks");
  acc_cmd->add_option("--only", only, "criterion numbers")->delimiter(',');
  acc_cmd->add_flag("--list", list_only, "print criterion names and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*entropy_cmd) {
      const UnifiedParams params = UnifiedParams::make(q, s);
      const double value = unified_entropy(Spectrum(spectrum), params);
      std::cout << format_number(value) << "  (" << to_string(params.regime()) << ")\n";
      return 0;
    }

    if (*measure_cmd) {
      const QuantumState state = measure_state.load();
      OptBudget budget;
      measure_budget.apply(budget);
      const UnifiedParams params = UnifiedParams::make(q, s);
      const Bipartition bp = Bipartition::from_side_a(n_qubits(state), cut);
      nlohmann::json doc{{"q", q}, {"s", s}, {"cut", cut}};
      if (const auto* psi = std::get_if<PureState>(&state)) {
        doc["ue"] = ue_pure(*psi, bp, params);
      } else {
        const auto& rho = std::get<DensityMatrix>(state);
        doc["ue"] = roof_to_json(ue_mixed(rho, bp, params, budget), witness);
        doc["ueoa"] = roof_to_json(ueoa(rho, bp, params, budget), witness);
      }
      std::cout << dump(doc) << '\n';
      return 0;
    }

    if (*check_cmd) {
      const QuantumState state = check_state.load();
      OptBudget budget;
      check_budget.apply(budget);
      const Theorem theorem = parse_theorem(theorem_name);
      const bool mono = mode_of(theorem) == InequalityMode::kMonogamy;
      if (mono && beta) throw Error(ErrorCode::kUsage, "--beta applies to polygamy theorems");
      if (!mono && alpha) throw Error(ErrorCode::kUsage, "--alpha applies to monogamy theorems");
      const double exponent = mono ? alpha.value_or(1.0) : beta.value_or(1.0);
      if (parties.empty())
        for (int b = 0; b < n_qubits(state); ++b)
          if (b != focus) parties.push_back(b);
      const auto report =
          check(state, focus, parties, UnifiedParams::make(q, s), theorem, exponent, budget, exploratory);
      const std::string id = !check_state.file.empty() ? check_state.file
                                                       : check_state.named + std::to_string(check_state.n);
      if (format == "json") {
        std::cout << dump(report_to_json(id, report, witness)) << '\n';
      } else {
        std::cout << csv_header() << '\n' << csv_row(id, report) << '\n';
      }
      return report.verdict == Verdict::kInconclusive && report.in_region ? 1 : 0;
    }

    if (*sweep_cmd) {
      SweepConfig config = load_sweep_config(config_path);
      sweep_budget.apply(config.budget);
      if (!out_path.empty()) config.output_path = out_path;
      if (sweep_format) config.format = *sweep_format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      if (exploratory) config.exploratory = true;
      if (jobs) config.jobs = *jobs;
      return run_sweep_command(config, std::cout);
    }

    if (*acc_cmd) {
      if (list_only) {
        const auto names = acceptance_criteria();
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << i + 1 << ". " << names[i] << '\n';
        return 0;
      }
      if (!only.empty()) acc.only = std::set<int>(only.begin(), only.end());
      const auto results = run_acceptance(acc, std::cout);
      int failed = 0;
      for (const auto& r : results) failed += !r.passed;
      std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
