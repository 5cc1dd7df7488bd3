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

#include "unient/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unient/errors.hpp"

namespace unient {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kGeneric: return "generic";
    case Regime::kRenyiLimit: return "renyi_limit";
    case Regime::kTsallisValue: return "tsallis_value";
    case Regime::kVonNeumannLimit: return "von_neumann_limit";
  }
  return "unknown";
}

UnifiedParams UnifiedParams::make(double q, double s) {
  if (!std::isfinite(q) || !std::isfinite(s) || q < 0.0 || s < 0.0) {
    std::ostringstream msg;
    msg << "unified entropy needs finite q, s >= 0 (got q=" << q << ", s=" << s << ")";
    throw Error(ErrorCode::kDomain, msg.str());
  }
  if (q == 0.0 && s == 0.0) throw Error(ErrorCode::kSingularParameters, "q = s = 0 is singular");
  Regime regime = Regime::kGeneric;
  if (std::abs(q - 1.0) < kLimitThreshold) {
    regime = Regime::kVonNeumannLimit;
  } else if (std::abs(s) < kLimitThreshold) {
    regime = Regime::kRenyiLimit;
  } else if (std::abs(s - 1.0) < kLimitThreshold) {
    regime = Regime::kTsallisValue;
  }
  return UnifiedParams(q, s, regime);
}

namespace detail {

namespace {

// Eigenvalues at or below the zero threshold are rounding noise: they are
// dropped and the rest rescaled to unit sum, so a numerically pure spectrum
// reads as exactly pure.
double retained_scale(std::span<const double> eigenvalues) {
  double kept = 0.0;
  for (double v : eigenvalues)
    if (v > tol::kZeroEigenvalue) kept += v;
  return kept > 0.0 ? 1.0 / kept : 1.0;
}

}  // namespace

double trace_power(std::span<const double> eigenvalues, double q) {
  double acc = 0.0;
  if (q == 0.0) {
    for (double v : eigenvalues)
      if (v > tol::kZeroEigenvalue) acc += 1.0;
    return acc;
  }
  const double scale = retained_scale(eigenvalues);
  for (double v : eigenvalues) {
    if (v <= tol::kZeroEigenvalue) continue;
    const double x = v * scale;
    acc += q == 2.0 ? x * x : std::pow(x, q);
  }
  return acc;
}

double von_neumann_entropy(std::span<const double> eigenvalues) {
  const double scale = retained_scale(eigenvalues);
  double acc = 0.0;
  for (double v : eigenvalues) {
    if (v <= tol::kZeroEigenvalue) continue;
    const double x = v * scale;
    acc -= x * std::log(x);
  }
  return std::max(acc, 0.0);
}

double unified_entropy(std::span<const double> eigenvalues, const UnifiedParams& params) {
  const double q = params.q();
  const double s = params.s();
  double value = 0.0;
  switch (params.regime()) {
    case Regime::kVonNeumannLimit:
      return von_neumann_entropy(eigenvalues);
    case Regime::kRenyiLimit:
      value = std::log(trace_power(eigenvalues, q)) / (1.0 - q);
      break;
    case Regime::kTsallisValue:
    case Regime::kGeneric:
    {
      const double tr = trace_power(eigenvalues, q);
      // expm1 keeps (tr^s - 1) accurate when s ln(tr) is small.
      const double numerator = s == 1.0 ? tr - 1.0 : std::expm1(s * std::log(tr));
      value = numerator / ((1.0 - q) * s);
      break;
    }
  }
  return std::max(value, 0.0);
}

}  // namespace detail

double unified_entropy(const Spectrum& spectrum, const UnifiedParams& params) {
  return detail::unified_entropy(spectrum.eigenvalues(), params);
}

double von_neumann_entropy(const Spectrum& spectrum) {
  return detail::von_neumann_entropy(spectrum.eigenvalues());
}

double renyi_entropy(const Spectrum& spectrum, double q) {
  if (!std::isfinite(q) || q < 0.0) throw Error(ErrorCode::kDomain, "Renyi order must be >= 0");
  if (std::abs(q - 1.0) < UnifiedParams::kLimitThreshold) return von_neumann_entropy(spectrum);
  const double value = std::log(detail::trace_power(spectrum.eigenvalues(), q)) / (1.0 - q);
  return std::max(value, 0.0);
}

double tsallis_entropy(const Spectrum& spectrum, double q) {
  return unified_entropy(spectrum, UnifiedParams::make(q, 1.0));
}

}  // namespace unient
