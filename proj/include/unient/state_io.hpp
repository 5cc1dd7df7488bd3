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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "unient/qstate.hpp"

// JSON state files, row-major with complex numbers as [re, im] pairs:
//   {"n_qubits": k, "kind": "pure",  "amplitudes": [[re, im], ...]}
//   {"n_qubits": k, "kind": "mixed", "matrix": [[[re, im], ...], ...]}
namespace unient {

QuantumState state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const QuantumState& state);

QuantumState load_state(const std::filesystem::path& path);
void save_state(const QuantumState& state, const std::filesystem::path& path);

}  // namespace unient
