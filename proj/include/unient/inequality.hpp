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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unient/entropy.hpp"
#include "unient/measures.hpp"
#include "unient/qstate.hpp"

// Verifiers for the unified-entanglement monogamy and polygamy inequalities
//   monogamy:  E(A|B_0..B_{N-1})^a   >= sum_j w_j E(A|B_j)^a,     a >= 1
//   polygamy:  Ea(A|B_0..B_{N-1})^b  <= sum_j w_j Ea(A|B_j)^b,    0 <= b <= 1
// with weights w_j = 1 (plain), e^{hamming(j)} (Hamming) or e^j (indexed),
// over parties sorted so that the pairwise values are non-increasing.
namespace unient {

enum class InequalityMode { kMonogamy, kPolygamy };
enum class Theorem { kBaseMono, kHammingMono, kIndexedMono, kBasePoly, kHammingPoly, kIndexedPoly };
enum class Weighting { kPlain, kHamming, kIndexed };
enum class Verdict { kConfirmed, kInconclusive, kNotApplicable };
enum class LhsBound { kExact, kUpperBound, kLowerBound };

// Accepts "1".."4", "base-mono", "base-poly".
Theorem parse_theorem(std::string_view name);
std::string to_string(Theorem theorem);
std::string to_string(InequalityMode mode);
std::string to_string(Verdict verdict);
std::string to_string(LhsBound bound);
InequalityMode mode_of(Theorem theorem);
Weighting weighting_of(Theorem theorem);

// A slack at or above -kSlackGate confirms an inequality.
inline constexpr double kSlackGate = 1e-7;

struct RegionSpec {
  InequalityMode mode;
  double q;
  double s;

  // monogamy: q >= 2, 0 <= s <= 1, q s <= 3
  // polygamy: 1 <= q <= 2, -q^2 + 4q - 3 <= s <= 1
  bool valid() const;
};

// Stable descending order of the pairwise values; entry j is the index of the
// party placed at position j. Throws Error(kMeasurement) on negative input.
std::vector<int> order_subsystems(std::span<const double> pairwise);

// One-time measurement of the quantities every weighting shares.
struct PairwiseProfile {
  InequalityMode mode = InequalityMode::kMonogamy;
  UnifiedParams params = UnifiedParams::make(2.0, 1.0);
  int focus = 0;
  std::vector<int> parties;
  double lhs_value = 0.0;
  LhsBound lhs_bound = LhsBound::kExact;
  std::optional<RoofResult> lhs_roof;
  std::vector<double> pairwise;       // caller's party order
  std::vector<RoofResult> pair_roofs;  // caller's party order
  bool all_converged = true;
  bool any_at_cap = false;
};

// Pairwise terms use ue_mixed (monogamy) or ueoa (polygamy) on the two-qubit
// marginals rho_{A B_j}. Roof seeds depend on the qubit index of B_j, so party
// order and appended padding parties do not change existing terms.
PairwiseProfile measure_profile(const QuantumState& state, int focus, std::vector<int> parties,
                                const UnifiedParams& params, InequalityMode mode,
                                const OptBudget& budget);

struct RhsTerm {
  int party;        // qubit index of B_j
  int position;     // j after sorting
  double pairwise;  // E(A|B_j) or Ea(A|B_j)
  double weight;
};

struct InequalityReport {
  Theorem theorem = Theorem::kHammingMono;
  InequalityMode mode = InequalityMode::kMonogamy;
  double q = 0.0;
  double s = 0.0;
  double exponent = 1.0;
  double lhs = 0.0;  // lhs_value^exponent
  double lhs_value = 0.0;
  LhsBound lhs_bound = LhsBound::kExact;
  std::vector<RhsTerm> rhs_terms;  // sorted positions
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs (monogamy) or rhs - lhs (polygamy)
  std::vector<int> permutation;  // order_subsystems() of the pairwise values
  std::optional<bool> condition_met;
  Verdict verdict = Verdict::kInconclusive;
  bool in_region = true;
  // exponent 0: weights read 0^0 = 1 and terms x^0 = [x > 0].
  bool zero_power_convention = false;
  bool all_converged = true;
  bool any_at_cap = false;
  std::shared_ptr<const PairwiseProfile> profile;
};

// Throws Error(kRegion) outside the theorem's region unless exploratory, and
// Error(kDomain) for an exponent outside the theorem's range.
InequalityReport evaluate(std::shared_ptr<const PairwiseProfile> profile, Theorem theorem,
                          double exponent, bool exploratory = false);

void check_region(Theorem theorem, const UnifiedParams& params, bool exploratory);
void check_exponent(Theorem theorem, double exponent);

InequalityReport check(const QuantumState& state, int focus, std::vector<int> parties,
                       const UnifiedParams& params, Theorem theorem, double exponent,
                       const OptBudget& budget, bool exploratory = false);

InequalityReport check_monogamy_hamming(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double alpha, const OptBudget& budget);
InequalityReport check_monogamy_indexed(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double alpha, const OptBudget& budget);
InequalityReport check_polygamy_hamming(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double beta, const OptBudget& budget);
InequalityReport check_polygamy_indexed(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double beta, const OptBudget& budget);

struct TightnessCertificate {
  InequalityMode mode = InequalityMode::kMonogamy;
  double rhs_plain = 0.0;
  double rhs_hamming = 0.0;
  std::optional<double> rhs_indexed;
  // monogamy: indexed >= hamming >= plain; polygamy: indexed <= hamming <= plain
  bool holds = false;
};

inline constexpr double kChainTolerance = 1e-10;

// Throws Error(kMismatch) unless the reports share mode, exponent and
// pairwise terms and carry the expected weightings.
TightnessCertificate tightness_chain(const InequalityReport& hamming, const InequalityReport& plain,
                                     const InequalityReport* indexed = nullptr);

struct PaddedSystem {
  QuantumState state;
  std::vector<int> parties;
};

// Appends |0> parties until there are `target` of them (default: the next
// power of two). The extra qubits follow the existing register.
PaddedSystem pad_parties(const QuantumState& state, std::vector<int> parties,
                         std::optional<int> target = std::nullopt);

}  // namespace unient
