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

#include <span>
#include <string>

#include "unient/qstate.hpp"

namespace unient {

enum class Regime { kGeneric, kRenyiLimit, kTsallisValue, kVonNeumannLimit };

std::string to_string(Regime regime);

// The (q, s) pair of the unified entropy with its limit classification.
class UnifiedParams {
 public:
  // Distance from q = 1 or s = 0 below which the closed-form limit is used.
  static constexpr double kLimitThreshold = 1e-6;

  // Throws Error(kDomain) for negative or non-finite values and
  // Error(kSingularParameters) for q = s = 0.
  static UnifiedParams make(double q, double s);

  double q() const { return q_; }
  double s() const { return s_; }
  Regime regime() const { return regime_; }

 private:
  UnifiedParams(double q, double s, Regime r) : q_(q), s_(s), regime_(r) {}

  double q_;
  double s_;
  Regime regime_;
};

// S_{q,s} = ((tr rho^q)^s - 1) / ((1 - q) s), in nats, with the Renyi limit
// at s -> 0 and the von Neumann limit at q -> 1.
double unified_entropy(const Spectrum& spectrum, const UnifiedParams& params);

double renyi_entropy(const Spectrum& spectrum, double q);
double tsallis_entropy(const Spectrum& spectrum, double q);
double von_neumann_entropy(const Spectrum& spectrum);

namespace detail {

// Unvalidated spectra (already in [-1e-9, 1]); hot path for roof searches.
double unified_entropy(std::span<const double> eigenvalues, const UnifiedParams& params);
double von_neumann_entropy(std::span<const double> eigenvalues);
// tr rho^q, with tr rho^0 read as the rank.
double trace_power(std::span<const double> eigenvalues, double q);

}  // namespace detail

}  // namespace unient
