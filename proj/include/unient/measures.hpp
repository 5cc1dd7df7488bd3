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
#include <string>
#include <vector>

#include "unient/entropy.hpp"
#include "unient/qstate.hpp"

namespace unient {

struct OptBudget {
  int restarts = 32;
  int iterations = 2000;
  // Ensemble sizes are searched up to max(rank^2, max_ensemble).
  int max_ensemble = 6;
  double tolerance = 1e-9;
  std::uint64_t seed = 20180522;
  // Worker threads for independent restarts; 1 runs them inline.
  int jobs = 1;

  void validate() const;
};

struct DecompositionMember {
  double probability;
  PureState state;
};

// Pure-state ensemble {p_i, |psi_i>} of a density matrix.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<DecompositionMember> members);

  const std::vector<DecompositionMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  CMatrix reconstruct() const;

 private:
  std::vector<DecompositionMember> members_;
};

enum class RoofMode { kMin, kMax };

std::string to_string(RoofMode mode);

struct RoofResult {
  // Min mode: an upper bound on the convex roof. Max mode: a lower bound on
  // the concave roof. Either way the witness attains it.
  double value = 0.0;
  Decomposition witness;
  RoofMode mode = RoofMode::kMin;
  int restarts_used = 0;
  bool converged = false;
  // Rank-one input: the single-member decomposition is the only one.
  bool exact = false;
  int ensemble_size = 1;
  // The best decomposition uses every slot of the largest searched ensemble.
  bool at_ensemble_cap = false;
};

double ue_pure(const PureState& psi, const Bipartition& cut, const UnifiedParams& params);

// Average pure-state entanglement of an ensemble across the cut.
double average_entanglement(const Decomposition& decomposition, const Bipartition& cut,
                            const UnifiedParams& params);

RoofResult convex_roof(const DensityMatrix& rho, const Bipartition& cut,
                       const UnifiedParams& params, const OptBudget& budget, RoofMode mode);

inline RoofResult ue_mixed(const DensityMatrix& rho, const Bipartition& cut,
                           const UnifiedParams& params, const OptBudget& budget) {
  return convex_roof(rho, cut, params, budget, RoofMode::kMin);
}

inline RoofResult ueoa(const DensityMatrix& rho, const Bipartition& cut,
                       const UnifiedParams& params, const OptBudget& budget) {
  return convex_roof(rho, cut, params, budget, RoofMode::kMax);
}

}  // namespace unient
