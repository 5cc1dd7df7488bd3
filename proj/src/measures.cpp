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

#include "unient/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>

#include "unient/errors.hpp"
#include "unient/nelder_mead.hpp"

namespace unient {

namespace {

constexpr double kRankEigenvalue = 1e-12;
constexpr double kNegligibleWeight = 1e-14;
// UE is nonnegative, so a min search within this many tolerances of zero is
// done.
constexpr double kRoofFloorTolerances = 10.0;

void check_cut(const Bipartition& cut, int n_qubits) {
  if (cut.n_qubits() != n_qubits)
    throw Error(ErrorCode::kInvalidPartition,
                "cut covers " + std::to_string(cut.n_qubits()) + " qubits, state has " +
                    std::to_string(n_qubits));
}

const std::vector<int>& smaller_side(const Bipartition& cut) {
  return cut.side_a().size() <= cut.side_b().size() ? cut.side_a() : cut.side_b();
}

// Entropy of the marginal held in `reduced` (unnormalized by `weight`).
double marginal_entropy(const CMatrix& reduced, double weight, const UnifiedParams& params) {
  if (reduced.rows() == 2) {
    const auto [hi, lo] = eigenvalues_2x2(reduced(0, 0).real() / weight,
                                          reduced(1, 1).real() / weight, reduced(0, 1) / weight);
    const double eig[2] = {hi, lo};
    return detail::unified_entropy(eig, params);
  }
  EigenSystem eig = jacobi_eigh(reduced / weight);
  return detail::unified_entropy(eig.values, params);
}

int isometry_param_count(int m, int r) {
  int count = r;
  for (int k = 0; k < r; ++k) count += 2 * (m - 1 - k);
  return count;
}

// V = [prod_{k<r} prod_{i>k} R_{k,i}(theta, phi)] * diag-phase I_{m x r},
// row-major in `v`. Every m x r isometry is reachable up to row phases.
void build_isometry(int m, int r, std::span<const double> x, std::vector<Complex>& v) {
  v.assign(static_cast<std::size_t>(m) * r, Complex(0.0, 0.0));
  for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k) * r + k] = std::polar(1.0, x[k]);
  std::vector<int> group_offset(static_cast<std::size_t>(r));
  for (int k = 0, off = r; k < r; ++k) {
    group_offset[static_cast<std::size_t>(k)] = off;
    off += 2 * (m - 1 - k);
  }
  for (int k = r - 1; k >= 0; --k) {
    for (int i = m - 1; i > k; --i) {
      const std::size_t p = static_cast<std::size_t>(group_offset[static_cast<std::size_t>(k)] + 2 * (i - k - 1));
      const double c = std::cos(x[p]);
      const double s = std::sin(x[p]);
      const Complex phase = std::polar(1.0, x[p + 1]);
      Complex* row_k = v.data() + static_cast<std::size_t>(k) * r;
      Complex* row_i = v.data() + static_cast<std::size_t>(i) * r;
      for (int col = 0; col < r; ++col) {
        const Complex a = row_k[col];
        const Complex b = row_i[col];
        row_k[col] = c * a - std::conj(phase) * s * b;
        row_i[col] = phase * s * a + c * b;
      }
    }
  }
}

// Spectral data of rho shared by every restart of one roof search.
struct RoofProblem {
  int n_qubits = 0;
  int rank = 0;
  CMatrix weighted;        // d x r, columns sqrt(lambda_k) e_k
  CMatrix weighted_split;  // rows reordered to (kept, traced) = (k * dim_t + t)
  Eigen::Index dim_kept = 0;
  Eigen::Index dim_traced = 0;
  UnifiedParams params;
  Bipartition cut;
};

class RoofEvaluator {
 public:
  RoofEvaluator(const RoofProblem& problem, int ensemble)
      : problem_(problem), m_(ensemble) {}

  int param_count() const { return isometry_param_count(m_, problem_.rank); }

  double average(std::span<const double> x) {
    const int r = problem_.rank;
    build_isometry(m_, r, x, isometry_);
    const Eigen::Index dk = problem_.dim_kept;
    const Eigen::Index dt = problem_.dim_traced;
    member_.resize(dk * dt);
    double total = 0.0;
    for (int i = 0; i < m_; ++i) {
      const Complex* row = isometry_.data() + static_cast<std::size_t>(i) * r;
      member_.setZero();
      for (int l = 0; l < r; ++l) member_ += row[l] * problem_.weighted_split.col(l);
      const double weight = member_.squaredNorm();
      if (weight < kNegligibleWeight) continue;
      double entropy;
      if (dk == 2) {
        double a = 0.0, d = 0.0;
        Complex b = 0.0;
        for (Eigen::Index t = 0; t < dt; ++t) {
          const Complex u = member_(t);
          const Complex w = member_(dt + t);
          a += std::norm(u);
          d += std::norm(w);
          b += u * std::conj(w);
        }
        const auto [hi, lo] = eigenvalues_2x2(a / weight, d / weight, b / weight);
        const double eig[2] = {hi, lo};
        entropy = detail::unified_entropy(eig, problem_.params);
      } else {
        const auto block = Eigen::Map<const CMatrix>(member_.data(), dt, dk);
        const CMatrix reduced = block.transpose() * block.conjugate();
        entropy = marginal_entropy(reduced, weight, problem_.params);
      }
      total += weight * entropy;
    }
    return total;
  }

  Decomposition witness(std::span<const double> x) {
    const int r = problem_.rank;
    build_isometry(m_, r, x, isometry_);
    std::vector<std::pair<double, CVector>> raw;
    double total_weight = 0.0;
    for (int i = 0; i < m_; ++i) {
      CVector member = CVector::Zero(problem_.weighted.rows());
      for (int l = 0; l < r; ++l)
        member += isometry_[static_cast<std::size_t>(i) * r + l] * problem_.weighted.col(l);
      const double weight = member.squaredNorm();
      if (weight < kNegligibleWeight) continue;
      total_weight += weight;
      raw.emplace_back(weight, member / std::sqrt(weight));
    }
    std::vector<DecompositionMember> members;
    members.reserve(raw.size());
    for (auto& [weight, vec] : raw) members.push_back({weight / total_weight, PureState(std::move(vec))});
    return Decomposition(std::move(members));
  }

  int ensemble() const { return m_; }

 private:
  const RoofProblem& problem_;
  int m_;
  std::vector<Complex> isometry_;
  CVector member_;
};

struct RestartOutcome {
  double objective = HUGE_VAL;
  std::vector<double> x;
  int ensemble = 0;
  bool converged = false;
};

}  // namespace

void OptBudget::validate() const {
  if (restarts < 1 || iterations < 1 || max_ensemble < 1 || !(tolerance > 0.0) || jobs < 1)
    throw Error(ErrorCode::kDomain, "optimizer budget must be positive");
}

Decomposition::Decomposition(std::vector<DecompositionMember> members)
    : members_(std::move(members)) {
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.probability >= 0.0 && m.probability <= 1.0 + 1e-12))
      throw Error(ErrorCode::kInvalidState, "decomposition probability outside [0, 1]");
    total += m.probability;
  }
  if (members_.empty() || std::abs(total - 1.0) > 1e-9)
    throw Error(ErrorCode::kInvalidState, "decomposition probabilities must sum to 1");
  for (const auto& m : members_)
    if (m.state.n_qubits() != members_.front().state.n_qubits())
      throw Error(ErrorCode::kInvalidState, "decomposition members differ in size");
}

CMatrix Decomposition::reconstruct() const {
  const Eigen::Index d = members_.front().state.dim();
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& m : members_) {
    const CVector& a = m.state.amplitudes();
    out += m.probability * (a * a.adjoint());
  }
  return out;
}

std::string to_string(RoofMode mode) { return mode == RoofMode::kMin ? "min" : "max"; }

double ue_pure(const PureState& psi, const Bipartition& cut, const UnifiedParams& params) {
  check_cut(cut, psi.n_qubits());
  const CMatrix reduced = reduced_matrix(psi.amplitudes(), psi.n_qubits(), smaller_side(cut));
  return marginal_entropy(reduced, 1.0, params);
}

double average_entanglement(const Decomposition& decomposition, const Bipartition& cut,
                            const UnifiedParams& params) {
  double total = 0.0;
  for (const auto& m : decomposition.members())
    total += m.probability * ue_pure(m.state, cut, params);
  return total;
}

RoofResult convex_roof(const DensityMatrix& rho, const Bipartition& cut,
                       const UnifiedParams& params, const OptBudget& budget, RoofMode mode) {
  check_cut(cut, rho.n_qubits());
  budget.validate();

  const EigenSystem eig = jacobi_eigh(rho.entries());
  int rank = 0;
  for (double v : eig.values)
    if (v > kRankEigenvalue) ++rank;
  rank = std::max(rank, 1);

  RoofResult result;
  result.mode = mode;
  if (rank == 1) {
    PureState psi(eig.vectors.col(0).normalized());
    result.value = ue_pure(psi, cut, params);
    result.witness = Decomposition({{1.0, std::move(psi)}});
    result.converged = true;
    result.exact = true;
    return result;
  }

  RoofProblem problem{.n_qubits = rho.n_qubits(), .rank = rank, .params = params, .cut = cut};
  problem.weighted.resize(rho.dim(), rank);
  for (int k = 0; k < rank; ++k)
    problem.weighted.col(k) = std::sqrt(eig.values[static_cast<std::size_t>(k)]) * eig.vectors.col(k);
  const std::vector<int>& kept = smaller_side(cut);
  problem.dim_kept = Eigen::Index{1} << kept.size();
  problem.dim_traced = rho.dim() / problem.dim_kept;
  {
    // Route each amplitude to its (kept, traced) slot via the identity basis.
    problem.weighted_split.resize(rho.dim(), rank);
    for (Eigen::Index k = 0; k < problem.dim_kept; ++k) {
      for (Eigen::Index t = 0; t < problem.dim_traced; ++t) {
        Eigen::Index full = 0;
        const int nk = static_cast<int>(kept.size());
        for (int i = 0, ki = 0, ti = 0; i < problem.n_qubits; ++i) {
          int bit;
          if (ki < nk && kept[static_cast<std::size_t>(ki)] == i) {
            bit = static_cast<int>((k >> (nk - 1 - ki)) & 1);
            ++ki;
          } else {
            const int nt = problem.n_qubits - nk;
            bit = static_cast<int>((t >> (nt - 1 - ti)) & 1);
            ++ti;
          }
          full = (full << 1) | bit;
        }
        problem.weighted_split.row(k * problem.dim_traced + t) = problem.weighted.row(full);
      }
    }
  }

  const int cap = std::max(rank * rank, budget.max_ensemble);
  const int sizes = cap - rank + 1;
  const double sign = mode == RoofMode::kMin ? 1.0 : -1.0;
  NelderMeadOptions nm;
  nm.max_iterations = budget.iterations;
  nm.tolerance = budget.tolerance;

  auto run_restart = [&](int index) {
    const int ensemble = rank + index % sizes;
    RoofEvaluator evaluator(problem, ensemble);
    std::vector<double> x0(static_cast<std::size_t>(evaluator.param_count()), 0.0);
    if (index > 0) {
      std::mt19937_64 rng(derive_seed(budget.seed, static_cast<std::uint64_t>(index)));
      std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
      for (double& v : x0) v = angle(rng);
    }
    auto objective = [&](std::span<const double> x) { return sign * evaluator.average(x); };
    NelderMeadResult r = nelder_mead(objective, std::move(x0), nm);
    return RestartOutcome{r.value, std::move(r.x), ensemble, r.converged};
  };

  std::vector<std::optional<RestartOutcome>> outcomes(static_cast<std::size_t>(budget.restarts));
  if (budget.jobs > 1) {
    std::atomic<int> next{0};
    std::vector<std::jthread> workers;
    const int n_workers = std::min(budget.jobs, budget.restarts);
    for (int w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (int i = next++; i < budget.restarts; i = next++)
          outcomes[static_cast<std::size_t>(i)] = run_restart(i);
      });
    }
  }

  // Merge in restart order so the result does not depend on scheduling.
  std::optional<RestartOutcome> best;
  for (int i = 0; i < budget.restarts; ++i) {
    auto& slot = outcomes[static_cast<std::size_t>(i)];
    if (!slot) slot = run_restart(i);
    result.restarts_used = i + 1;
    if (!best || slot->objective < best->objective) best = std::move(*slot);
    if (mode == RoofMode::kMin && best->objective <= kRoofFloorTolerances * budget.tolerance) {
      best->converged = true;
      break;
    }
  }

  RoofEvaluator final_eval(problem, best->ensemble);
  result.witness = final_eval.witness(best->x);
  result.value = average_entanglement(result.witness, cut, params);
  result.converged = best->converged;
  result.ensemble_size = best->ensemble;
  result.at_ensemble_cap =
      best->ensemble == cap && static_cast<int>(result.witness.size()) == cap;
  return result;
}

}  // namespace unient
