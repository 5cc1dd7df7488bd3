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

#include "unient/inequality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "unient/errors.hpp"
#include "unient/hamming.hpp"

namespace unient {

namespace {

// x^e with the exponent-zero reading x^0 = [x > 0].
double term_power(double x, double exponent) {
  if (exponent == 0.0) return x > tol::kZeroEigenvalue ? 1.0 : 0.0;
  return std::pow(x, exponent);
}

// base^k with 0^0 = 1.
double weight_power(double base, int k) { return k == 0 ? 1.0 : std::pow(base, k); }

}  // namespace

Theorem parse_theorem(std::string_view name) {
  if (name == "1") return Theorem::kHammingMono;
  if (name == "2") return Theorem::kIndexedMono;
  if (name == "3") return Theorem::kHammingPoly;
  if (name == "4") return Theorem::kIndexedPoly;
  if (name == "base-mono") return Theorem::kBaseMono;
  if (name == "base-poly") return Theorem::kBasePoly;
  throw Error(ErrorCode::kUsage, "unknown theorem '" + std::string(name) + "'");
}

std::string to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::kBaseMono: return "base-mono";
    case Theorem::kHammingMono: return "1";
    case Theorem::kIndexedMono: return "2";
    case Theorem::kBasePoly: return "base-poly";
    case Theorem::kHammingPoly: return "3";
    case Theorem::kIndexedPoly: return "4";
  }
  return "unknown";
}

std::string to_string(InequalityMode mode) {
  return mode == InequalityMode::kMonogamy ? "monogamy" : "polygamy";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(LhsBound bound) {
  switch (bound) {
    case LhsBound::kExact: return "exact";
    case LhsBound::kUpperBound: return "upper-bound";
    case LhsBound::kLowerBound: return "lower-bound";
  }
  return "unknown";
}

InequalityMode mode_of(Theorem theorem) {
  switch (theorem) {
    case Theorem::kBaseMono:
    case Theorem::kHammingMono:
    case Theorem::kIndexedMono:
      return InequalityMode::kMonogamy;
    default:
      return InequalityMode::kPolygamy;
  }
}

Weighting weighting_of(Theorem theorem) {
  switch (theorem) {
    case Theorem::kBaseMono:
    case Theorem::kBasePoly:
      return Weighting::kPlain;
    case Theorem::kHammingMono:
    case Theorem::kHammingPoly:
      return Weighting::kHamming;
    default:
      return Weighting::kIndexed;
  }
}

bool RegionSpec::valid() const {
  if (!std::isfinite(q) || !std::isfinite(s)) return false;
  if (mode == InequalityMode::kMonogamy) return q >= 2.0 && s >= 0.0 && s <= 1.0 && q * s <= 3.0;
  return q >= 1.0 && q <= 2.0 && s >= -q * q + 4.0 * q - 3.0 && s <= 1.0;
}

std::vector<int> order_subsystems(std::span<const double> pairwise) {
  for (double v : pairwise) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "pairwise entanglement " << v << " is not a finite nonnegative value";
      throw Error(ErrorCode::kMeasurement, msg.str());
    }
  }
  std::vector<int> order(pairwise.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pairwise[static_cast<std::size_t>(a)] > pairwise[static_cast<std::size_t>(b)]; });
  return order;
}

PairwiseProfile measure_profile(const QuantumState& state, int focus, std::vector<int> parties,
                                const UnifiedParams& params, InequalityMode mode,
                                const OptBudget& budget) {
  const int n = n_qubits(state);
  if (focus < 0 || focus >= n) throw Error(ErrorCode::kInvalidPartition, "focus qubit out of range");
  if (parties.empty()) throw Error(ErrorCode::kInvalidPartition, "at least one party is required");
  {
    std::vector<int> sorted = parties;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::kInvalidPartition, "duplicate party");
    for (int b : sorted)
      if (b < 0 || b >= n || b == focus)
        throw Error(ErrorCode::kInvalidPartition, "party " + std::to_string(b) + " is invalid");
  }
  budget.validate();

  PairwiseProfile profile;
  profile.mode = mode;
  profile.params = params;
  profile.focus = focus;
  profile.parties = parties;
  const RoofMode roof_mode = mode == InequalityMode::kMonogamy ? RoofMode::kMin : RoofMode::kMax;

  auto reduce = [&](const std::vector<int>& keep) -> CMatrix {
    if (const auto* psi = std::get_if<PureState>(&state))
      return reduced_matrix(psi->amplitudes(), n, keep);
    return reduced_matrix(std::get<DensityMatrix>(state).entries(), n, keep);
  };

  // A | B_0 ... B_{N-1}
  std::vector<int> keep = parties;
  keep.push_back(focus);
  std::sort(keep.begin(), keep.end());
  const int focus_slot = static_cast<int>(std::find(keep.begin(), keep.end(), focus) - keep.begin());
  const int n_keep = static_cast<int>(keep.size());
  const Bipartition lhs_cut = Bipartition::from_side_a(n_keep, {focus_slot});
  const auto* pure = std::get_if<PureState>(&state);
  if (pure && n_keep == n) {
    profile.lhs_value = ue_pure(*pure, lhs_cut, params);
    profile.lhs_bound = LhsBound::kExact;
  } else {
    const DensityMatrix rho = n_keep == n ? std::get<DensityMatrix>(state) : DensityMatrix(reduce(keep));
    OptBudget lhs_budget = budget;
    lhs_budget.seed = derive_seed(budget.seed, static_cast<std::uint64_t>(focus));
    RoofResult roof = convex_roof(rho, lhs_cut, params, lhs_budget, roof_mode);
    profile.lhs_value = roof.value;
    profile.lhs_bound = roof.exact ? LhsBound::kExact
                        : mode == InequalityMode::kMonogamy ? LhsBound::kUpperBound
                                                            : LhsBound::kLowerBound;
    profile.all_converged = profile.all_converged && roof.converged;
    profile.any_at_cap = profile.any_at_cap || roof.at_ensemble_cap;
    profile.lhs_roof = std::move(roof);
  }

  for (int b : parties) {
    const std::vector<int> pair = {std::min(focus, b), std::max(focus, b)};
    const DensityMatrix rho_pair(reduce(pair));
    const Bipartition cut = Bipartition::from_side_a(2, {focus < b ? 0 : 1});
    OptBudget pair_budget = budget;
    pair_budget.seed = derive_seed(derive_seed(budget.seed, static_cast<std::uint64_t>(focus)),
                                   static_cast<std::uint64_t>(b) + 1);
    RoofResult roof = convex_roof(rho_pair, cut, params, pair_budget, roof_mode);
    profile.pairwise.push_back(roof.value);
    profile.all_converged = profile.all_converged && roof.converged;
    profile.any_at_cap = profile.any_at_cap || roof.at_ensemble_cap;
    profile.pair_roofs.push_back(std::move(roof));
  }
  return profile;
}

void check_region(Theorem theorem, const UnifiedParams& params, bool exploratory) {
  const RegionSpec region{mode_of(theorem), params.q(), params.s()};
  if (!region.valid() && !exploratory) {
    std::ostringstream msg;
    msg << "(q, s) = (" << params.q() << ", " << params.s() << ") is outside the "
        << to_string(region.mode) << " region";
    throw Error(ErrorCode::kRegion, msg.str());
  }
}

void check_exponent(Theorem theorem, double exponent) {
  if (mode_of(theorem) == InequalityMode::kMonogamy) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent))
      throw Error(ErrorCode::kDomain, "monogamy exponent alpha must be >= 1");
  } else if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorCode::kDomain, "polygamy exponent beta must lie in [0, 1]");
  }
}

InequalityReport evaluate(std::shared_ptr<const PairwiseProfile> profile, Theorem theorem,
                          double exponent, bool exploratory) {
  const PairwiseProfile& p = *profile;
  if (mode_of(theorem) != p.mode)
    throw Error(ErrorCode::kMismatch, "theorem " + to_string(theorem) + " needs a " +
                                          to_string(mode_of(theorem)) + " profile");
  check_exponent(theorem, exponent);
  check_region(theorem, p.params, exploratory);

  InequalityReport report;
  report.theorem = theorem;
  report.mode = p.mode;
  report.q = p.params.q();
  report.s = p.params.s();
  report.exponent = exponent;
  report.lhs_value = p.lhs_value;
  report.lhs_bound = p.lhs_bound;
  report.lhs = term_power(p.lhs_value, exponent);
  report.in_region = RegionSpec{p.mode, p.params.q(), p.params.s()}.valid();
  report.zero_power_convention = exponent == 0.0;
  report.all_converged = p.all_converged;
  report.any_at_cap = p.any_at_cap;
  report.permutation = order_subsystems(p.pairwise);

  const Weighting weighting = weighting_of(theorem);
  const std::size_t count = report.permutation.size();
  std::vector<double> sorted(count);
  for (std::size_t j = 0; j < count; ++j) {
    const auto src = static_cast<std::size_t>(report.permutation[j]);
    sorted[j] = p.pairwise[src];
    double weight = 1.0;
    if (weighting == Weighting::kHamming) weight = weight_power(exponent, hamming_weight(j));
    if (weighting == Weighting::kIndexed) weight = weight_power(exponent, static_cast<int>(j));
    report.rhs_terms.push_back({p.parties[src], static_cast<int>(j), sorted[j], weight});
    report.rhs += weight * term_power(sorted[j], exponent);
  }
  report.slack = p.mode == InequalityMode::kMonogamy ? report.lhs - report.rhs : report.rhs - report.lhs;

  if (weighting == Weighting::kIndexed) {
    bool met = true;
    double tail = 0.0;
    for (std::size_t i = count; i-- > 0;) {
      if (i + 1 < count && sorted[i] < tail - kSlackGate) met = false;
      tail += sorted[i];
    }
    report.condition_met = met;
  }

  if (report.condition_met == false) {
    report.verdict = Verdict::kNotApplicable;
  } else if (!report.in_region || !std::isfinite(report.slack)) {
    report.verdict = Verdict::kInconclusive;
  } else {
    report.verdict = report.slack >= -kSlackGate ? Verdict::kConfirmed : Verdict::kInconclusive;
  }
  report.profile = std::move(profile);
  return report;
}

InequalityReport check(const QuantumState& state, int focus, std::vector<int> parties,
                       const UnifiedParams& params, Theorem theorem, double exponent,
                       const OptBudget& budget, bool exploratory) {
  check_exponent(theorem, exponent);
  check_region(theorem, params, exploratory);
  auto profile = std::make_shared<const PairwiseProfile>(
      measure_profile(state, focus, std::move(parties), params, mode_of(theorem), budget));
  return evaluate(std::move(profile), theorem, exponent, exploratory);
}

InequalityReport check_monogamy_hamming(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double alpha, const OptBudget& budget) {
  return check(state, focus, std::move(parties), params, Theorem::kHammingMono, alpha, budget);
}

InequalityReport check_monogamy_indexed(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double alpha, const OptBudget& budget) {
  return check(state, focus, std::move(parties), params, Theorem::kIndexedMono, alpha, budget);
}

InequalityReport check_polygamy_hamming(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double beta, const OptBudget& budget) {
  return check(state, focus, std::move(parties), params, Theorem::kHammingPoly, beta, budget);
}

InequalityReport check_polygamy_indexed(const QuantumState& state, int focus,
                                        std::vector<int> parties, const UnifiedParams& params,
                                        double beta, const OptBudget& budget) {
  return check(state, focus, std::move(parties), params, Theorem::kIndexedPoly, beta, budget);
}

TightnessCertificate tightness_chain(const InequalityReport& hamming, const InequalityReport& plain,
                                     const InequalityReport* indexed) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kMismatch, what);
  };
  require(weighting_of(hamming.theorem) == Weighting::kHamming, "first report must use Hamming weights");
  require(weighting_of(plain.theorem) == Weighting::kPlain, "second report must use unit weights");
  auto same_inputs = [](const InequalityReport& a, const InequalityReport& b) {
    if (a.mode != b.mode || a.exponent != b.exponent || a.q != b.q || a.s != b.s) return false;
    if (a.permutation != b.permutation || a.rhs_terms.size() != b.rhs_terms.size()) return false;
    for (std::size_t j = 0; j < a.rhs_terms.size(); ++j)
      if (a.rhs_terms[j].pairwise != b.rhs_terms[j].pairwise || a.rhs_terms[j].party != b.rhs_terms[j].party)
        return false;
    return true;
  };
  require(same_inputs(hamming, plain), "reports were computed on different inputs");
  if (indexed) {
    require(weighting_of(indexed->theorem) == Weighting::kIndexed, "third report must use indexed weights");
    require(same_inputs(hamming, *indexed), "reports were computed on different inputs");
  }

  TightnessCertificate cert;
  cert.mode = hamming.mode;
  cert.rhs_plain = plain.rhs;
  cert.rhs_hamming = hamming.rhs;
  if (indexed) cert.rhs_indexed = indexed->rhs;
  // Orient every link as "stronger >= weaker" for monogamy; polygamy flips it.
  const double sign = cert.mode == InequalityMode::kMonogamy ? 1.0 : -1.0;
  cert.holds = sign * (cert.rhs_hamming - cert.rhs_plain) >= -kChainTolerance;
  if (cert.rhs_indexed)
    cert.holds = cert.holds && sign * (*cert.rhs_indexed - cert.rhs_hamming) >= -kChainTolerance;
  return cert;
}

PaddedSystem pad_parties(const QuantumState& state, std::vector<int> parties, std::optional<int> target) {
  const int count = static_cast<int>(parties.size());
  if (count < 1) throw Error(ErrorCode::kInvalidPartition, "at least one party is required");
  const int goal = target.value_or(static_cast<int>(std::bit_ceil(static_cast<unsigned>(count))));
  if (goal < count || !std::has_single_bit(static_cast<unsigned>(goal)))
    throw Error(ErrorCode::kDomain, "padding target must be a power of two no smaller than N");
  const int extra = goal - count;
  const int n = n_qubits(state);
  if (extra == 0) return {state, std::move(parties)};
  if (n + extra > 20) throw Error(ErrorCode::kDomain, "padded register too large");

  CVector zero = CVector::Zero(Eigen::Index{1} << extra);
  zero(0) = 1.0;
  for (int k = 0; k < extra; ++k) parties.push_back(n + k);
  if (const auto* psi = std::get_if<PureState>(&state))
    return {PureState(kron(psi->amplitudes(), zero)), std::move(parties)};
  const CMatrix& rho = std::get<DensityMatrix>(state).entries();
  return {DensityMatrix(kron(rho, CMatrix(zero * zero.adjoint()))), std::move(parties)};
}

}  // namespace unient
