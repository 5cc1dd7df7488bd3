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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unient/linalg.hpp"

// Multi-qubit pure and mixed states. Qubit 0 is the leftmost tensor factor,
// i.e. the most significant bit of a computational basis index.
namespace unient {

class PureState {
 public:
  // Throws Error(kInvalidState) unless size is 2^n and the norm is 1.
  explicit PureState(CVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  CVector amplitudes_;
  int n_qubits_;
};

class DensityMatrix {
 public:
  // Checks Hermiticity, unit trace and positive semidefiniteness.
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_pure(const PureState& psi);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }

 private:
  struct Trusted {};
  DensityMatrix(CMatrix entries, Trusted);

  CMatrix entries_;
  int n_qubits_;
};

using QuantumState = std::variant<PureState, DensityMatrix>;

int n_qubits(const QuantumState& state);
DensityMatrix to_density(const QuantumState& state);

class Bipartition {
 public:
  // side_b is the complement of side_a in {0, ..., n_qubits-1}.
  static Bipartition from_side_a(int n_qubits, std::vector<int> side_a);

  int n_qubits() const { return static_cast<int>(side_a_.size() + side_b_.size()); }
  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }
  Bipartition swapped() const;

 private:
  Bipartition(std::vector<int> a, std::vector<int> b)
      : side_a_(std::move(a)), side_b_(std::move(b)) {}

  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

class Spectrum {
 public:
  // Sorts descending and validates the probability-vector invariant.
  explicit Spectrum(std::vector<double> eigenvalues);

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  std::size_t size() const { return eigenvalues_.size(); }

 private:
  std::vector<double> eigenvalues_;
};

// Partial trace keeping the listed qubits, returned in ascending qubit order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);
DensityMatrix partial_trace(const PureState& psi, std::vector<int> keep);

// Raw reduced matrix of an (unnormalized) vector; `keep` must be sorted.
CMatrix reduced_matrix(const CVector& psi, int n_qubits, std::span<const int> keep);
CMatrix reduced_matrix(const CMatrix& rho, int n_qubits, std::span<const int> keep);

Spectrum hermitian_spectrum(const DensityMatrix& rho);
// Throws Error(kInvalidState) on non-Hermitian input.
Spectrum hermitian_spectrum(const CMatrix& hermitian);

// Spectral purification onto n + ceil(log2 rank) qubits; ancillas follow the
// original register.
PureState purify(const DensityMatrix& rho);

enum class NamedKind { kGhz, kW, kProduct, kBell };

NamedKind parse_named_kind(std::string_view name);
std::string to_string(NamedKind kind);

PureState named_state(NamedKind kind, int n_qubits);
PureState named_state(std::string_view kind, int n_qubits);

PureState haar_random_pure(int n_qubits, std::mt19937_64& rng);
PureState haar_random_pure(int n_qubits, std::uint64_t seed);
// Marginal of a Haar vector on C^(2^n) (x) C^rank.
DensityMatrix random_mixed(int n_qubits, int rank, std::mt19937_64& rng);
DensityMatrix random_mixed(int n_qubits, int rank, std::uint64_t seed);

// Mixes a base seed with a stream index so sibling streams are decorrelated.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace unient
