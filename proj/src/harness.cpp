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

#include "unient/harness.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "unient/errors.hpp"
#include "unient/report_io.hpp"
#include "unient/state_io.hpp"

namespace unient {

using nlohmann::json;

namespace {

[[noreturn]] void usage_error(const std::string& what) { throw Error(ErrorCode::kUsage, what); }

template <class T>
T field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    usage_error(std::string("config field '") + key + "' has the wrong type");
  }
}

StateSpec parse_state_spec(const json& entry) {
  if (!entry.is_object()) usage_error("state entries must be objects");
  StateSpec spec;
  spec.n_qubits = field(entry, "n_qubits", 3);
  spec.count = field(entry, "count", 1);
  spec.rank = field(entry, "rank", 4);
  spec.seed = field<std::uint64_t>(entry, "seed", 1);
  spec.id = field<std::string>(entry, "id", "");
  if (entry.contains("named")) {
    spec.kind = StateSpec::Kind::kNamed;
    spec.named = parse_named_kind(field<std::string>(entry, "named", ""));
  } else if (entry.contains("random")) {
    const auto kind = field<std::string>(entry, "random", "");
    if (kind == "pure") {
      spec.kind = StateSpec::Kind::kRandomPure;
    } else if (kind == "mixed") {
      spec.kind = StateSpec::Kind::kRandomMixed;
    } else {
      usage_error("random state kind must be \"pure\" or \"mixed\"");
    }
    if (spec.count < 1) usage_error("random state count must be positive");
  } else if (entry.contains("file")) {
    spec.kind = StateSpec::Kind::kFile;
    spec.file = field<std::string>(entry, "file", "");
  } else if (entry.contains("ensemble")) {
    if (field<std::string>(entry, "ensemble", "") != "default") usage_error("unknown ensemble");
    spec.kind = StateSpec::Kind::kDefaultEnsemble;
  } else {
    usage_error("state entry needs one of named, random, file, ensemble");
  }
  return spec;
}

std::vector<double> number_list(const json& doc, const char* key, std::vector<double> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) usage_error(std::string("'") + key + "' must be a number or a list");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) usage_error(std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(const json& doc) {
  if (!doc.is_object()) usage_error("sweep config must be a JSON object");
  SweepConfig config;
  if (doc.contains("states")) {
    if (!doc["states"].is_array()) usage_error("'states' must be a list");
    for (const auto& entry : doc["states"]) config.states.push_back(parse_state_spec(entry));
  }
  config.focus = field(doc, "focus", 0);
  if (doc.contains("theorems")) {
    if (!doc["theorems"].is_array()) usage_error("'theorems' must be a list");
    for (const auto& t : doc["theorems"])
      config.theorems.push_back(parse_theorem(t.is_string() ? t.get<std::string>() : t.dump()));
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_array()) usage_error("'params' must be a list of [q, s] pairs");
    for (const auto& p : doc["params"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        usage_error("'params' entries must be [q, s] pairs");
      config.params.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  }
  config.alphas = number_list(doc, "alphas", config.alphas);
  config.betas = number_list(doc, "betas", config.betas);
  if (doc.contains("budget")) {
    const json& b = doc["budget"];
    if (!b.is_object()) usage_error("'budget' must be an object");
    config.budget.restarts = field(b, "restarts", config.budget.restarts);
    config.budget.iterations = field(b, "iterations", config.budget.iterations);
    config.budget.max_ensemble = field(b, "ensemble_cap", config.budget.max_ensemble);
    config.budget.tolerance = field(b, "tolerance", config.budget.tolerance);
    config.budget.seed = field(b, "seed", config.budget.seed);
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    if (!o.is_object()) usage_error("'output' must be an object");
    config.output_path = field<std::string>(o, "path", "");
    const auto fmt = field<std::string>(o, "format", "csv");
    if (fmt == "csv") {
      config.format = OutputFormat::kCsv;
    } else if (fmt == "json") {
      config.format = OutputFormat::kJson;
    } else {
      usage_error("output format must be csv or json");
    }
    config.include_witness = field(o, "witness", false);
  }
  config.exploratory = field(doc, "exploratory", false);
  config.jobs = field(doc, "jobs", 0);
  return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot open config " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    usage_error(path.string() + ": " + e.what());
  }
  return parse_sweep_config(doc);
}

void validate(const SweepConfig& config) {
  if (config.states.empty()) usage_error("sweep needs at least one state");
  if (config.theorems.empty()) usage_error("sweep needs at least one theorem");
  if (config.params.empty()) usage_error("sweep needs at least one (q, s) pair");
  if (config.jobs < 0) usage_error("jobs must be nonnegative");
  config.budget.validate();
  for (Theorem t : config.theorems) {
    const auto& exponents = mode_of(t) == InequalityMode::kMonogamy ? config.alphas : config.betas;
    if (exponents.empty()) usage_error("theorem " + to_string(t) + " has no exponents");
    for (double e : exponents) check_exponent(t, e);
    for (const auto& [q, s] : config.params) check_region(t, UnifiedParams::make(q, s), config.exploratory);
  }
}

std::vector<LabeledState> expand_states(const std::vector<StateSpec>& specs) {
  std::vector<LabeledState> out;
  auto label = [](const StateSpec& spec, std::string fallback) {
    return spec.id.empty() ? fallback : spec.id;
  };
  for (const auto& spec : specs) {
    switch (spec.kind) {
      case StateSpec::Kind::kNamed:
        out.push_back({label(spec, to_string(spec.named) + std::to_string(spec.n_qubits)),
                       named_state(spec.named, spec.n_qubits)});
        break;
      case StateSpec::Kind::kRandomPure:
        for (int i = 0; i < spec.count; ++i) {
          const std::string id = label(spec, "haar" + std::to_string(spec.n_qubits) + "-s" +
                                                 std::to_string(spec.seed)) + "-" + std::to_string(i);
          out.push_back({id, haar_random_pure(spec.n_qubits, derive_seed(spec.seed, static_cast<std::uint64_t>(i)))});
        }
        break;
      case StateSpec::Kind::kRandomMixed:
        for (int i = 0; i < spec.count; ++i) {
          const std::string id = label(spec, "mixed" + std::to_string(spec.n_qubits) + "r" +
                                                 std::to_string(spec.rank) + "-s" +
                                                 std::to_string(spec.seed)) + "-" + std::to_string(i);
          out.push_back({id, random_mixed(spec.n_qubits, spec.rank,
                                          derive_seed(spec.seed, static_cast<std::uint64_t>(i)))});
        }
        break;
      case StateSpec::Kind::kFile:
        out.push_back({label(spec, spec.file.stem().string()), load_state(spec.file)});
        break;
      case StateSpec::Kind::kDefaultEnsemble: {
        std::vector<StateSpec> preset;
        for (int n : {3, 4}) {
          preset.push_back({.kind = StateSpec::Kind::kNamed, .named = NamedKind::kGhz, .n_qubits = n});
          preset.push_back({.kind = StateSpec::Kind::kNamed, .named = NamedKind::kW, .n_qubits = n});
        }
        for (int n : {3, 4})
          preset.push_back({.kind = StateSpec::Kind::kRandomPure, .n_qubits = n, .count = 200,
                            .seed = spec.seed + static_cast<std::uint64_t>(n)});
        preset.push_back({.kind = StateSpec::Kind::kRandomMixed, .n_qubits = 3, .count = 50,
                          .rank = 4, .seed = spec.seed + 100});
        for (auto& s : expand_states(preset)) out.push_back(std::move(s));
        break;
      }
    }
  }
  return out;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& f) {
  const int workers = std::max(1, std::min(count, jobs > 0 ? jobs
                                                   : static_cast<int>(std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < count; i = next++) {
          try {
            f(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  const std::vector<LabeledState> states = expand_states(config.states);

  // One profile per (state, mode, params); theorems and exponents reuse it.
  struct Unit {
    std::size_t state;
    InequalityMode mode;
    std::size_t param;
  };
  std::vector<Unit> units;
  auto unit_index = [&](std::size_t state, InequalityMode mode, std::size_t param) {
    for (std::size_t u = 0; u < units.size(); ++u)
      if (units[u].state == state && units[u].mode == mode && units[u].param == param) return u;
    units.push_back({state, mode, param});
    return units.size() - 1;
  };
  for (std::size_t st = 0; st < states.size(); ++st)
    for (Theorem t : config.theorems)
      for (std::size_t p = 0; p < config.params.size(); ++p) unit_index(st, mode_of(t), p);

  std::vector<std::shared_ptr<const PairwiseProfile>> profiles(units.size());
  parallel_for(static_cast<int>(units.size()), config.jobs, [&](int u) {
    const Unit& unit = units[static_cast<std::size_t>(u)];
    const QuantumState& state = states[unit.state].state;
    const int n = n_qubits(state);
    if (config.focus < 0 || config.focus >= n)
      usage_error("focus qubit out of range for state " + states[unit.state].id);
    std::vector<int> parties;
    for (int q = 0; q < n; ++q)
      if (q != config.focus) parties.push_back(q);
    const auto [q, s] = config.params[unit.param];
    profiles[static_cast<std::size_t>(u)] = std::make_shared<const PairwiseProfile>(
        measure_profile(state, config.focus, parties, UnifiedParams::make(q, s), unit.mode, config.budget));
  });

  SweepResult result;
  for (std::size_t st = 0; st < states.size(); ++st) {
    for (Theorem t : config.theorems) {
      for (std::size_t p = 0; p < config.params.size(); ++p) {
        const auto& profile = profiles[unit_index(st, mode_of(t), p)];
        const auto& exponents = mode_of(t) == InequalityMode::kMonogamy ? config.alphas : config.betas;
        for (double e : exponents) {
          InequalityReport report = evaluate(profile, t, e, config.exploratory);
          if (report.in_region && report.verdict == Verdict::kInconclusive)
            result.any_inconclusive_in_region = true;
          result.rows.push_back({states[st].id, std::move(report)});
        }
      }
    }
  }
  return result;
}

std::string render(const SweepResult& result, OutputFormat format, bool include_witness) {
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << csv_header() << '\n';
    for (const auto& row : result.rows) out << csv_row(row.state_id, row.report) << '\n';
  } else {
    json rows = json::array();
    for (const auto& row : result.rows) rows.push_back(report_to_json(row.state_id, row.report, include_witness));
    out << rows.dump(2) << '\n';
  }
  return out.str();
}

int run_sweep_command(const SweepConfig& config, std::ostream& out) {
  const SweepResult result = run_sweep(config);
  const std::string text = render(result, config.format, config.include_witness);
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kUsage, "cannot write " + config.output_path);
    file << text;
    if (!file) throw Error(ErrorCode::kUsage, "failed writing " + config.output_path);
  }
  return result.any_inconclusive_in_region ? 1 : 0;
}

}  // namespace unient
