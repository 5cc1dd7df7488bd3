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

#include "unient/hamming.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "unient/errors.hpp"

namespace unient {

std::uint64_t BinaryVector::value() const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out |= std::uint64_t{1} << i;
  return out;
}

BinaryVector binary_vector(std::uint64_t j, int n) {
  if (n < 0 || n > 64) throw Error(ErrorCode::kDomain, "binary length must lie in [0, 64]");
  if (n < 64 && (j >> n) != 0)
    throw Error(ErrorCode::kOverflow,
                std::to_string(j) + " does not fit in " + std::to_string(n) + " bits");
  BinaryVector v;
  v.bits.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((j >> i) & 1);
  return v;
}

int hamming_weight(const BinaryVector& v) {
  int weight = 0;
  for (auto b : v.bits) weight += b ? 1 : 0;
  return weight;
}

int hamming_weight(std::uint64_t j) { return std::popcount(j); }

double lemma1_check(double x, double exponent, LemmaMode mode) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::kDomain, "x must lie in [0, 1]");
  if (mode == LemmaMode::kAlpha && !(exponent >= 1.0 && std::isfinite(exponent)))
    throw Error(ErrorCode::kDomain, "alpha exponent must be >= 1");
  if (mode == LemmaMode::kBeta && !(exponent >= 0.0 && exponent <= 1.0))
    throw Error(ErrorCode::kDomain, "beta exponent must lie in [0, 1]");
  // x^0 = 1 here, including x = 0.
  const double x_pow = exponent == 0.0 ? 1.0 : std::pow(x, exponent);
  return std::pow(1.0 + x, exponent) - (1.0 + exponent * x_pow);
}

}  // namespace unient
