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

#include "unient/state_io.hpp"

#include <fstream>
#include <optional>

#include "unient/errors.hpp"

namespace unient {

namespace {

using nlohmann::json;

Complex parse_complex(const json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
    throw Error(ErrorCode::kInvalidState, "complex entries must be [re, im]");
  return {value[0].get<double>(), value[1].get<double>()};
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

QuantumState state_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidState, "state file must be a JSON object");
  const std::string kind = doc.value("kind", "");
  std::optional<int> declared;
  if (doc.contains("n_qubits")) {
    if (!doc["n_qubits"].is_number_integer())
      throw Error(ErrorCode::kInvalidState, "n_qubits must be an integer");
    declared = doc["n_qubits"].get<int>();
  }

  auto check_qubits = [&](int actual) {
    if (declared && *declared != actual)
      throw Error(ErrorCode::kInvalidState,
                  "n_qubits " + std::to_string(*declared) + " does not match data size");
  };

  if (kind == "pure") {
    const json& amps = doc.at("amplitudes");
    if (!amps.is_array()) throw Error(ErrorCode::kInvalidState, "amplitudes must be an array");
    CVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(amps[i]);
    PureState psi(std::move(v));
    check_qubits(psi.n_qubits());
    return psi;
  }
  if (kind == "mixed") {
    const json& rows = doc.at("matrix");
    if (!rows.is_array()) throw Error(ErrorCode::kInvalidState, "matrix must be an array");
    const auto dim = static_cast<Eigen::Index>(rows.size());
    CMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
        throw Error(ErrorCode::kInvalidState, "matrix must be square");
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = parse_complex(row[static_cast<std::size_t>(j)]);
    }
    DensityMatrix rho(std::move(m));
    check_qubits(rho.n_qubits());
    return rho;
  }
  throw Error(ErrorCode::kInvalidState, "state kind must be \"pure\" or \"mixed\"");
}

json state_to_json(const QuantumState& state) {
  json doc;
  doc["n_qubits"] = n_qubits(state);
  if (const auto* psi = std::get_if<PureState>(&state)) {
    doc["kind"] = "pure";
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi->dim(); ++i) amps.push_back(dump_complex(psi->amplitudes()(i)));
    doc["amplitudes"] = std::move(amps);
  } else {
    const auto& rho = std::get<DensityMatrix>(state);
    doc["kind"] = "mixed";
    json rows = json::array();
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < rho.dim(); ++j) row.push_back(dump_complex(rho.entries()(i, j)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  return doc;
}

QuantumState load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open state file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidState, path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

void save_state(const QuantumState& state, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kUsage, "cannot write state file " + path.string());
  out << state_to_json(state).dump(2) << '\n';
}

}  // namespace unient
