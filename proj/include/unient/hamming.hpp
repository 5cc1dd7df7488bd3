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
#include <vector>

namespace unient {

// Binary expansion j = sum_i bits[i] 2^i; bits[0] is the least significant.
struct BinaryVector {
  std::vector<std::uint8_t> bits;

  std::uint64_t value() const;
};

// Throws Error(kOverflow) when j >= 2^n.
BinaryVector binary_vector(std::uint64_t j, int n);

int hamming_weight(const BinaryVector& v);
int hamming_weight(std::uint64_t j);

enum class LemmaMode { kAlpha, kBeta };

// Signed slack (1 + x)^e - (1 + e x^e) of the scalar power inequalities:
// nonnegative for e >= 1 (alpha), nonpositive for 0 <= e <= 1 (beta).
// Throws Error(kDomain) outside x in [0, 1] or the mode's exponent range.
double lemma1_check(double x, double exponent, LemmaMode mode);

}  // namespace unient
