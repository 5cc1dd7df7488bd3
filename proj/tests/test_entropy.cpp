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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "unient/entropy.hpp"
#include "unient/errors.hpp"

using namespace unient;

TEST_CASE("regime classification") {
  CHECK(UnifiedParams::make(2.0, 0.5).regime() == Regime::kGeneric);
  CHECK(UnifiedParams::make(1.0 + 5e-7, 0.5).regime() == Regime::kVonNeumannLimit);
  CHECK(UnifiedParams::make(1.0 + 2e-6, 0.5).regime() == Regime::kGeneric);
  CHECK(UnifiedParams::make(2.0, 5e-7).regime() == Regime::kRenyiLimit);
  CHECK(UnifiedParams::make(1.0, 0.0).regime() == Regime::kVonNeumannLimit);
  CHECK(UnifiedParams::make(2.0, 1.0 - 5e-7).regime() == Regime::kTsallisValue);
  CHECK_THROWS_AS(UnifiedParams::make(-1.0, 0.5), Error);
  CHECK_THROWS_AS(UnifiedParams::make(2.0, -0.5), Error);
  CHECK_THROWS_AS(UnifiedParams::make(NAN, 0.5), Error);
  try {
    UnifiedParams::make(0.0, 0.0);
    FAIL("expected singular parameters");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingularParameters);
  }
}

TEST_CASE("closed-form examples") {
  const Spectrum half({0.5, 0.5});
  CHECK(unified_entropy(Spectrum({1.0, 0.0}), UnifiedParams::make(2.0, 1.0)) == 0.0);
  CHECK(unified_entropy(half, UnifiedParams::make(2.0, 1.0)) == 0.5);
  CHECK(unified_entropy(half, UnifiedParams::make(2.0, 0.5)) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(unified_entropy(Spectrum({2.0 / 3.0, 1.0 / 3.0}), UnifiedParams::make(2.0, 1.0)) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(von_neumann_entropy(half) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(tsallis_entropy(half, 2.0) == 0.5);
  CHECK(renyi_entropy(half, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(renyi_entropy(half, 1.0) == von_neumann_entropy(half));
  CHECK(tsallis_entropy(half, 1.0) == von_neumann_entropy(half));
}

TEST_CASE("generic regime matches direct evaluation") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> q(0.05, 5.0);
  std::uniform_real_distribution<double> s(0.01, 2.0);
  for (int i = 0; i < 500; ++i) {
    const auto p = oracle::random_spectrum(2 + static_cast<int>(rng() % 7), rng);
    const double qq = q(rng), ss = s(rng);
    const UnifiedParams params = UnifiedParams::make(qq, ss);
    if (params.regime() != Regime::kGeneric) continue;
    CHECK(unified_entropy(Spectrum(p), params) == doctest::Approx(oracle::unified(p, qq, ss)).epsilon(1e-9));
  }
}

TEST_CASE("rank counting at q = 0") {
  const Spectrum rank2({0.7, 0.3, 0.0, 0.0});
  // tr rho^0 = 2: ((2)^s - 1) / s
  CHECK(unified_entropy(rank2, UnifiedParams::make(0.0, 0.5)) == doctest::Approx((std::sqrt(2.0) - 1.0) / 0.5));
  CHECK(unified_entropy(rank2, UnifiedParams::make(0.0, 1.0)) == doctest::Approx(1.0));
}

TEST_CASE("pure spectra have zero entropy in both regions") {
  const Spectrum pure({1.0, 0.0, 0.0});
  for (double q : {1.0, 1.3, 1.7, 2.0, 2.5, 3.0, 4.0})
    for (double s : {0.0, 0.2, 0.5, 0.9, 1.0})
      CHECK(std::abs(unified_entropy(pure, UnifiedParams::make(q, s))) <= 1e-12);
}

TEST_CASE("entropy vanishes only on pure spectra") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_spectrum(2 + static_cast<int>(rng() % 4), rng);
    CHECK(unified_entropy(Spectrum(p), UnifiedParams::make(2.0, 0.5)) > 1e-10);
    CHECK(unified_entropy(Spectrum(p), UnifiedParams::make(1.5, 1.0)) > 1e-10);
  }
}

TEST_CASE("limit continuity") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> q(0.1, 4.0);
  std::uniform_real_distribution<double> s(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Spectrum spec(oracle::random_spectrum(2 + static_cast<int>(rng() % 7), rng));
    const double qq = q(rng), ss = s(rng);
    CHECK(std::abs(unified_entropy(spec, UnifiedParams::make(qq, 1e-5)) - renyi_entropy(spec, qq)) <= 1e-4);
    CHECK(std::abs(unified_entropy(spec, UnifiedParams::make(1.0 + 1e-5, ss)) - von_neumann_entropy(spec)) <= 1e-4);
    CHECK(std::abs(unified_entropy(spec, UnifiedParams::make(1.0 - 1e-5, ss)) - von_neumann_entropy(spec)) <= 1e-4);
    CHECK(std::abs(unified_entropy(spec, UnifiedParams::make(qq, 1.0 - 1e-9)) - tsallis_entropy(spec, qq)) <= 1e-8);
  }
}

TEST_CASE("maximally mixed spectrum is maximal") {
  std::mt19937_64 rng(21);
  for (const auto& [q, s] : std::vector<std::pair<double, double>>{{2.0, 1.0}, {3.0, 0.5}, {1.5, 0.8}, {1.0, 1.0}}) {
    const UnifiedParams params = UnifiedParams::make(q, s);
    for (int d : {2, 3, 4, 8}) {
      const double top = unified_entropy(Spectrum(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d)), params);
      for (int i = 0; i < 250; ++i)
        CHECK(unified_entropy(Spectrum(oracle::random_spectrum(d, rng)), params) <= top + 1e-12);
    }
  }
}
