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

#include "unient/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "unient/errors.hpp"

namespace unient {

namespace {

// Eigenvalues above this count toward the rank of a numerically built state.
constexpr double kRankEigenvalue = 1e-12;

int log2_exact(Eigen::Index dim, const char* what) {
  if (dim < 2 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    std::ostringstream msg;
    msg << what << ": dimension " << dim << " is not 2^n with n >= 1";
    throw Error(ErrorCode::kInvalidState, msg.str());
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

void check_keep(const std::vector<int>& keep, int n, bool allow_all) {
  if (keep.empty()) throw Error(ErrorCode::kInvalidPartition, "empty qubit set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw Error(ErrorCode::kInvalidPartition,
                  "qubit index " + std::to_string(keep[i]) + " out of range");
    if (i > 0 && keep[i] == keep[i - 1])
      throw Error(ErrorCode::kInvalidPartition, "duplicate qubit index");
  }
  if (!allow_all && static_cast<int>(keep.size()) == n)
    throw Error(ErrorCode::kInvalidPartition, "kept set must be a proper subset");
}

// full_index[k * dim_t + t] for kept index k and traced index t.
std::vector<Eigen::Index> split_index_map(int n, std::span<const int> keep) {
  std::vector<int> traced;
  for (int q = 0, k = 0; q < n; ++q) {
    if (k < static_cast<int>(keep.size()) && keep[k] == q) {
      ++k;
    } else {
      traced.push_back(q);
    }
  }
  const Eigen::Index dim_k = Eigen::Index{1} << keep.size();
  const Eigen::Index dim_t = Eigen::Index{1} << traced.size();
  auto scatter = [n](Eigen::Index local, const auto& qubits) {
    Eigen::Index full = 0;
    const int m = static_cast<int>(qubits.size());
    for (int i = 0; i < m; ++i)
      if ((local >> (m - 1 - i)) & 1) full |= Eigen::Index{1} << (n - 1 - qubits[i]);
    return full;
  };
  std::vector<Eigen::Index> map(static_cast<std::size_t>(dim_k * dim_t));
  for (Eigen::Index k = 0; k < dim_k; ++k) {
    const Eigen::Index hi = scatter(k, keep);
    for (Eigen::Index t = 0; t < dim_t; ++t)
      map[static_cast<std::size_t>(k * dim_t + t)] = hi | scatter(t, traced);
  }
  return map;
}

}  // namespace

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  n_qubits_ = log2_exact(amplitudes_.size(), "pure state");
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol::kNorm) {
    std::ostringstream msg;
    msg << "pure state: squared norm " << norm2 << " differs from 1";
    throw Error(ErrorCode::kInvalidState, msg.str());
  }
}

DensityMatrix::DensityMatrix(CMatrix entries, Trusted) : entries_(std::move(entries)) {
  n_qubits_ = log2_exact(entries_.rows(), "density matrix");
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw Error(ErrorCode::kInvalidState, "density matrix must be square");
  n_qubits_ = log2_exact(entries_.rows(), "density matrix");
  if (!entries_.allFinite()) throw Error(ErrorCode::kInvalidState, "non-finite entries");
  if (hermiticity_defect(entries_) > tol::kHermitian)
    throw Error(ErrorCode::kInvalidState, "density matrix is not Hermitian");
  const double trace = entries_.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    std::ostringstream msg;
    msg << "density matrix trace " << trace << " differs from 1";
    throw Error(ErrorCode::kInvalidState, msg.str());
  }
  const EigenSystem eig = jacobi_eigh(entries_);
  if (eig.values.back() < tol::kPsd) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << eig.values.back();
    throw Error(ErrorCode::kInvalidState, msg.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint(), Trusted{});
}

int n_qubits(const QuantumState& state) {
  return std::visit([](const auto& s) { return s.n_qubits(); }, state);
}

DensityMatrix to_density(const QuantumState& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(state);
}

Bipartition Bipartition::from_side_a(int n_qubits, std::vector<int> side_a) {
  std::sort(side_a.begin(), side_a.end());
  check_keep(side_a, n_qubits, /*allow_all=*/false);
  std::vector<int> side_b;
  for (int q = 0; q < n_qubits; ++q)
    if (!std::binary_search(side_a.begin(), side_a.end(), q)) side_b.push_back(q);
  return Bipartition(std::move(side_a), std::move(side_b));
}

Bipartition Bipartition::swapped() const { return Bipartition(side_b_, side_a_); }

Spectrum::Spectrum(std::vector<double> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.empty()) throw Error(ErrorCode::kInvalidState, "empty spectrum");
  std::sort(eigenvalues_.begin(), eigenvalues_.end(), std::greater<>());
  double clamped_sum = 0.0;
  for (double& v : eigenvalues_) {
    if (!(v >= tol::kPsd && v <= 1.0 - tol::kPsd)) {
      std::ostringstream msg;
      msg << "spectrum value " << v << " outside [0, 1]";
      throw Error(ErrorCode::kInvalidState, msg.str());
    }
    v = std::clamp(v, 0.0, 1.0);
    clamped_sum += v;
  }
  if (std::abs(clamped_sum - 1.0) > tol::kSpectrumSum) {
    std::ostringstream msg;
    msg << "spectrum sums to " << clamped_sum;
    throw Error(ErrorCode::kInvalidState, msg.str());
  }
}

CMatrix reduced_matrix(const CVector& psi, int n_qubits, std::span<const int> keep) {
  const auto map = split_index_map(n_qubits, keep);
  const Eigen::Index dim_k = Eigen::Index{1} << keep.size();
  const Eigen::Index dim_t = psi.size() / dim_k;
  // Plain ordered sums: traced qubits holding |0> contribute exact zeros, so
  // padding a register leaves its marginals bit-identical.
  CMatrix out(dim_k, dim_k);
  for (Eigen::Index i = 0; i < dim_k; ++i) {
    for (Eigen::Index j = 0; j < dim_k; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dim_t; ++t)
        acc += psi(map[static_cast<std::size_t>(i * dim_t + t)]) *
               std::conj(psi(map[static_cast<std::size_t>(j * dim_t + t)]));
      out(i, j) = acc;
    }
  }
  return out;
}

CMatrix reduced_matrix(const CMatrix& rho, int n_qubits, std::span<const int> keep) {
  const auto map = split_index_map(n_qubits, keep);
  const Eigen::Index dim_k = Eigen::Index{1} << keep.size();
  const Eigen::Index dim_t = rho.rows() / dim_k;
  CMatrix out = CMatrix::Zero(dim_k, dim_k);
  for (Eigen::Index i = 0; i < dim_k; ++i) {
    for (Eigen::Index j = 0; j < dim_k; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dim_t; ++t)
        acc += rho(map[static_cast<std::size_t>(i * dim_t + t)],
                   map[static_cast<std::size_t>(j * dim_t + t)]);
      out(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  check_keep(keep, rho.n_qubits(), /*allow_all=*/false);
  return DensityMatrix(reduced_matrix(rho.entries(), rho.n_qubits(), keep));
}

DensityMatrix partial_trace(const PureState& psi, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  check_keep(keep, psi.n_qubits(), /*allow_all=*/false);
  return DensityMatrix(reduced_matrix(psi.amplitudes(), psi.n_qubits(), keep));
}

Spectrum hermitian_spectrum(const CMatrix& hermitian) {
  if (hermiticity_defect(hermitian) > tol::kHermitian)
    throw Error(ErrorCode::kInvalidState, "matrix is not Hermitian");
  return Spectrum(jacobi_eigh(hermitian).values);
}

Spectrum hermitian_spectrum(const DensityMatrix& rho) {
  return Spectrum(jacobi_eigh(rho.entries()).values);
}

PureState purify(const DensityMatrix& rho) {
  const EigenSystem eig = jacobi_eigh(rho.entries());
  int rank = 0;
  for (double v : eig.values)
    if (v > kRankEigenvalue) ++rank;
  rank = std::max(rank, 1);
  const int ancillas = std::bit_width(static_cast<unsigned>(rank - 1));
  const Eigen::Index dim_anc = Eigen::Index{1} << ancillas;
  CVector out = CVector::Zero(rho.dim() * dim_anc);
  for (int k = 0; k < rank; ++k) {
    const double weight = std::sqrt(std::max(eig.values[static_cast<std::size_t>(k)], 0.0));
    for (Eigen::Index i = 0; i < rho.dim(); ++i) out(i * dim_anc + k) += weight * eig.vectors(i, k);
  }
  out.normalize();
  return PureState(std::move(out));
}

NamedKind parse_named_kind(std::string_view name) {
  if (name == "ghz") return NamedKind::kGhz;
  if (name == "w") return NamedKind::kW;
  if (name == "product") return NamedKind::kProduct;
  if (name == "bell") return NamedKind::kBell;
  throw Error(ErrorCode::kUnknownState, "unknown named state '" + std::string(name) + "'");
}

std::string to_string(NamedKind kind) {
  switch (kind) {
    case NamedKind::kGhz: return "ghz";
    case NamedKind::kW: return "w";
    case NamedKind::kProduct: return "product";
    case NamedKind::kBell: return "bell";
  }
  return "unknown";
}

PureState named_state(NamedKind kind, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 20)
    throw Error(ErrorCode::kUnknownState, "named state needs 1..20 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CVector a = CVector::Zero(dim);
  switch (kind) {
    case NamedKind::kGhz:
      if (n_qubits < 2) throw Error(ErrorCode::kUnknownState, "ghz needs at least 2 qubits");
      a(0) = a(dim - 1) = 1.0 / std::sqrt(2.0);
      break;
    case NamedKind::kW:
      if (n_qubits < 2) throw Error(ErrorCode::kUnknownState, "w needs at least 2 qubits");
      for (int q = 0; q < n_qubits; ++q) a(Eigen::Index{1} << q) = 1.0 / std::sqrt(double(n_qubits));
      break;
    case NamedKind::kProduct:
      a(0) = 1.0;
      break;
    case NamedKind::kBell:
      if (n_qubits != 2) throw Error(ErrorCode::kUnknownState, "bell is a 2-qubit state");
      a(0) = a(3) = 1.0 / std::sqrt(2.0);
      break;
  }
  return PureState(std::move(a));
}

PureState named_state(std::string_view kind, int n_qubits) {
  return named_state(parse_named_kind(kind), n_qubits);
}

namespace {

CVector complex_gaussian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState haar_random_pure(int n_qubits, std::mt19937_64& rng) {
  if (n_qubits < 1 || n_qubits > 20)
    throw Error(ErrorCode::kDomain, "haar_random_pure needs 1..20 qubits");
  CVector v = complex_gaussian(Eigen::Index{1} << n_qubits, rng);
  v.normalize();
  return PureState(std::move(v));
}

PureState haar_random_pure(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_pure(n_qubits, rng);
}

DensityMatrix random_mixed(int n_qubits, int rank, std::mt19937_64& rng) {
  if (n_qubits < 1 || n_qubits > 10)
    throw Error(ErrorCode::kDomain, "random_mixed needs 1..10 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (rank < 1 || rank > dim)
    throw Error(ErrorCode::kDomain, "rank must lie in [1, 2^n_qubits]");
  // Column j of g is the environment-j slice of a Haar vector on dim * rank.
  CVector v = complex_gaussian(dim * rank, rng);
  v.normalize();
  const CMatrix g = Eigen::Map<const CMatrix>(v.data(), rank, dim).transpose();
  CMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_mixed(int n_qubits, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_mixed(n_qubits, rank, rng);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace unient
