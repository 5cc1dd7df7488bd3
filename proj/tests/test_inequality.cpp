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

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "unient/errors.hpp"
#include "unient/inequality.hpp"

using namespace unient;

namespace {

const UnifiedParams kT2 = UnifiedParams::make(2.0, 1.0);

OptBudget budget(int restarts = 8) {
  OptBudget b;
  b.restarts = restarts;
  return b;
}

std::shared_ptr<const PairwiseProfile> synthetic(InequalityMode mode, double lhs, std::vector<double> pairwise,
                                                 UnifiedParams params) {
  auto p = std::make_shared<PairwiseProfile>();
  p->mode = mode;
  p->params = params;
  p->lhs_value = lhs;
  for (std::size_t j = 0; j < pairwise.size(); ++j) p->parties.push_back(static_cast<int>(j) + 1);
  p->pairwise = std::move(pairwise);
  p->pair_roofs.resize(p->pairwise.size());
  return p;
}

bool monogamy_region(double q, double s) { return q >= 2.0 && s >= 0.0 && s <= 1.0 && q * s <= 3.0; }
bool polygamy_region(double q, double s) { return q >= 1.0 && q <= 2.0 && s <= 1.0 && s >= -q * q + 4.0 * q - 3.0; }

}  // namespace

TEST_CASE("ordering of subsystems") {
  const std::vector<double> a{0.1, 0.3, 0.2};
  CHECK(order_subsystems(a) == std::vector<int>{1, 2, 0});
  const std::vector<double> b{0.2, 0.2, 0.2};
  CHECK(order_subsystems(b) == std::vector<int>{0, 1, 2});
  const std::vector<double> c{0.0, 0.5};
  CHECK(order_subsystems(c) == std::vector<int>{1, 0});
  const std::vector<double> bad{0.1, -0.2};
  try {
    order_subsystems(bad);
    FAIL("expected measurement error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMeasurement);
  }
}

TEST_CASE("region gate agrees with the closed-form predicates") {
  for (int i = 0; i < 50; ++i) {
    for (int k = 0; k < 50; ++k) {
      const double q = 4.0 * i / 49.0;
      const double s = 4.0 * k / 49.0;
      CHECK(RegionSpec{InequalityMode::kMonogamy, q, s}.valid() == monogamy_region(q, s));
      CHECK(RegionSpec{InequalityMode::kPolygamy, q, s}.valid() == polygamy_region(q, s));
      if (q == 0.0 && s == 0.0) continue;
      const UnifiedParams p = UnifiedParams::make(q, s);
      if (monogamy_region(q, s)) {
        CHECK_NOTHROW(check_region(Theorem::kHammingMono, p, false));
      } else {
        CHECK_THROWS_AS(check_region(Theorem::kHammingMono, p, false), Error);
        CHECK_NOTHROW(check_region(Theorem::kHammingMono, p, true));
      }
      if (polygamy_region(q, s)) {
        CHECK_NOTHROW(check_region(Theorem::kIndexedPoly, p, false));
      } else {
        CHECK_THROWS_AS(check_region(Theorem::kIndexedPoly, p, false), Error);
      }
    }
  }
}

TEST_CASE("exponent domains") {
  CHECK_THROWS_AS(check_exponent(Theorem::kHammingMono, 0.5), Error);
  CHECK_NOTHROW(check_exponent(Theorem::kHammingMono, 1.0));
  CHECK_THROWS_AS(check_exponent(Theorem::kHammingPoly, 1.5), Error);
  CHECK_NOTHROW(check_exponent(Theorem::kHammingPoly, 0.0));
}

TEST_CASE("theorem names") {
  CHECK(parse_theorem("1") == Theorem::kHammingMono);
  CHECK(parse_theorem("2") == Theorem::kIndexedMono);
  CHECK(parse_theorem("3") == Theorem::kHammingPoly);
  CHECK(parse_theorem("4") == Theorem::kIndexedPoly);
  CHECK(parse_theorem("base-mono") == Theorem::kBaseMono);
  CHECK(parse_theorem("base-poly") == Theorem::kBasePoly);
  CHECK_THROWS_AS(parse_theorem("5"), Error);
}

TEST_CASE("GHZ and W monogamy examples") {
  const auto ghz = check_monogamy_hamming(named_state(NamedKind::kGhz, 3), 0, {1, 2}, kT2, 2.0, budget());
  CHECK(ghz.lhs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ghz.rhs < 1e-8);
  CHECK(ghz.verdict == Verdict::kConfirmed);
  CHECK(ghz.lhs_bound == LhsBound::kExact);

  const PureState w = named_state(NamedKind::kW, 3);
  const auto w1 = check_monogamy_hamming(w, 0, {1, 2}, kT2, 1.0, budget());
  CHECK(w1.lhs == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(w1.slack) < 1e-3);
  const auto w2 = evaluate(w1.profile, Theorem::kHammingMono, 2.0);
  CHECK(w2.lhs == doctest::Approx(16.0 / 81.0).epsilon(1e-12));
  CHECK(std::abs(w2.rhs - 12.0 / 81.0) < 1e-3);
  CHECK(w2.verdict == Verdict::kConfirmed);
  REQUIRE(w2.rhs_terms.size() == 2);
  CHECK(w2.rhs_terms[0].weight == 1.0);
  CHECK(w2.rhs_terms[1].weight == 2.0);
  double sum = 0.0;
  for (const auto& t : w2.rhs_terms) sum += t.weight * std::pow(t.pairwise, 2.0);
  CHECK(std::abs(sum - w2.rhs) < 1e-10);

  const auto wi = evaluate(w1.profile, Theorem::kIndexedMono, 2.0);
  CHECK(wi.condition_met == true);
  CHECK(wi.verdict == Verdict::kConfirmed);
  CHECK(std::abs(wi.rhs - w2.rhs) < 1e-12);

  const auto cert = tightness_chain(w2, evaluate(w1.profile, Theorem::kBaseMono, 2.0), &wi);
  CHECK(cert.holds);
  CHECK(std::abs(cert.rhs_plain - 8.0 / 81.0) < 1e-3);
  CHECK(std::abs(cert.rhs_hamming - 12.0 / 81.0) < 1e-3);
}

TEST_CASE("indexed monogamy gating") {
  const auto ghz = check_monogamy_indexed(named_state(NamedKind::kGhz, 3), 0, {1, 2}, kT2, 2.0, budget());
  CHECK(ghz.condition_met == true);
  CHECK(ghz.verdict == Verdict::kConfirmed);
  const auto w4 = check_monogamy_indexed(named_state(NamedKind::kW, 4), 0, {1, 2, 3}, kT2, 1.0, budget());
  for (const auto& t : w4.rhs_terms) CHECK(std::abs(t.pairwise - 0.125) < 1e-3);
  CHECK(w4.condition_met == false);
  CHECK(w4.verdict == Verdict::kNotApplicable);
}

TEST_CASE("polygamy examples") {
  const UnifiedParams eoa = UnifiedParams::make(1.0, 1.0);
  const auto ghz = check_polygamy_hamming(named_state(NamedKind::kGhz, 3), 0, {1, 2}, eoa, 0.5, budget());
  CHECK(std::abs(ghz.lhs - std::sqrt(std::log(2.0))) < 1e-9);
  CHECK(std::abs(ghz.rhs - 1.5 * std::sqrt(std::log(2.0))) < 1e-3);
  CHECK(ghz.verdict == Verdict::kConfirmed);
  const auto ghz_idx = evaluate(ghz.profile, Theorem::kIndexedPoly, 0.5);
  CHECK(ghz_idx.condition_met == true);
  CHECK(ghz_idx.verdict == Verdict::kConfirmed);

  const auto product = check_polygamy_hamming(named_state(NamedKind::kProduct, 3), 0, {1, 2},
                                              UnifiedParams::make(1.5, 1.0), 0.5, budget());
  CHECK(product.lhs == 0.0);
  CHECK(product.verdict == Verdict::kConfirmed);

  const auto w = check_polygamy_hamming(named_state(NamedKind::kW, 3), 0, {1, 2}, UnifiedParams::make(1.5, 1.0),
                                        1.0, budget());
  CHECK(w.verdict == Verdict::kConfirmed);
  const auto base = evaluate(w.profile, Theorem::kBasePoly, 1.0);
  CHECK(std::abs(base.rhs - w.rhs) < 1e-12);

  // Two parties: indexed and Hamming weights coincide.
  const auto two = check_polygamy_indexed(named_state(NamedKind::kW, 3), 0, {1, 2}, UnifiedParams::make(1.5, 1.0),
                                          0.5, budget());
  CHECK(std::abs(two.rhs - evaluate(w.profile, Theorem::kHammingPoly, 0.5).rhs) < 1e-12);
}

TEST_CASE("synthetic terms failing the indexed condition") {
  const auto p = synthetic(InequalityMode::kPolygamy, 0.9, {0.4, 0.3, 0.2}, UnifiedParams::make(1.5, 1.0));
  const auto r = evaluate(p, Theorem::kIndexedPoly, 0.5);
  CHECK(r.condition_met == false);
  CHECK(r.verdict == Verdict::kNotApplicable);
}

TEST_CASE("zero exponent conventions") {
  const auto p = synthetic(InequalityMode::kPolygamy, 0.9, {0.4, 0.0, 0.2}, UnifiedParams::make(1.5, 1.0));
  const auto r = evaluate(p, Theorem::kHammingPoly, 0.0);
  CHECK(r.zero_power_convention);
  CHECK(r.lhs == 1.0);
  // weights 0^0 = 1, 0^1 = 0 and terms [x > 0]
  CHECK(r.rhs == 1.0);
}

TEST_CASE("monotone weighting") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> terms(5);
    for (double& t : terms) t = unit(rng);
    const auto mono = synthetic(InequalityMode::kMonogamy, 1.0, terms, kT2);
    const auto poly = synthetic(InequalityMode::kPolygamy, 1.0, terms, UnifiedParams::make(1.5, 1.0));
    for (Theorem t : {Theorem::kHammingMono, Theorem::kIndexedMono}) {
      for (double a = 1.0; a <= 4.0; a += 0.5) {
        const auto r = evaluate(mono, t, a);
        for (const auto& term : r.rhs_terms) CHECK(term.weight >= 1.0);
        CHECK(r.rhs_terms.front().weight == 1.0);
      }
    }
    for (double a = 1.0; a < 4.0; a += 0.5) {
      const auto lo = evaluate(mono, Theorem::kHammingMono, a);
      const auto hi = evaluate(mono, Theorem::kHammingMono, a + 0.5);
      for (std::size_t j = 0; j < lo.rhs_terms.size(); ++j)
        CHECK(hi.rhs_terms[j].weight >= lo.rhs_terms[j].weight);
    }
    for (double b = 0.0; b < 1.0; b += 0.25) {
      const auto lo = evaluate(poly, Theorem::kHammingPoly, b);
      const auto hi = evaluate(poly, Theorem::kHammingPoly, b + 0.25);
      for (std::size_t j = 1; j < lo.rhs_terms.size(); ++j)
        CHECK(hi.rhs_terms[j].weight >= lo.rhs_terms[j].weight);
    }
  }
}

TEST_CASE("tightness chains on synthetic terms") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> terms(3 + trial % 5);
    for (double& t : terms) t = unit(rng);
    const auto mono = synthetic(InequalityMode::kMonogamy, 1.0, terms, kT2);
    const auto poly = synthetic(InequalityMode::kPolygamy, 1.0, terms, UnifiedParams::make(1.5, 1.0));
    for (double a : {1.0, 1.5, 2.0, 3.0}) {
      const auto ri = evaluate(mono, Theorem::kIndexedMono, a);
      CHECK(tightness_chain(evaluate(mono, Theorem::kHammingMono, a), evaluate(mono, Theorem::kBaseMono, a), &ri).holds);
    }
    for (double b : {0.0, 0.25, 0.5, 1.0}) {
      const auto ri = evaluate(poly, Theorem::kIndexedPoly, b);
      CHECK(tightness_chain(evaluate(poly, Theorem::kHammingPoly, b), evaluate(poly, Theorem::kBasePoly, b), &ri).holds);
    }
    const auto one = tightness_chain(evaluate(mono, Theorem::kHammingMono, 1.0), evaluate(mono, Theorem::kBaseMono, 1.0));
    CHECK(one.rhs_plain == doctest::Approx(one.rhs_hamming));
  }
  const auto mono = synthetic(InequalityMode::kMonogamy, 1.0, {0.3, 0.2}, kT2);
  try {
    tightness_chain(evaluate(mono, Theorem::kBaseMono, 2.0), evaluate(mono, Theorem::kHammingMono, 2.0));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMismatch);
  }
  try {
    tightness_chain(evaluate(mono, Theorem::kHammingMono, 2.0), evaluate(mono, Theorem::kBaseMono, 3.0));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMismatch);
  }
}

TEST_CASE("party padding") {
  const PaddedSystem three = pad_parties(named_state(NamedKind::kGhz, 4), {1, 2, 3});
  CHECK(three.parties == std::vector<int>{1, 2, 3, 4});
  CHECK(n_qubits(three.state) == 5);
  const PaddedSystem four = pad_parties(named_state(NamedKind::kGhz, 5), {1, 2, 3, 4});
  CHECK(four.parties.size() == 4);
  CHECK(n_qubits(four.state) == 5);

  const PureState ghz = named_state(NamedKind::kGhz, 4);
  const auto plain = check_monogamy_hamming(ghz, 0, {1, 2, 3}, kT2, 2.0, budget());
  const auto padded = check_monogamy_hamming(three.state, 0, three.parties, kT2, 2.0, budget());
  CHECK(std::abs(plain.slack - padded.slack) < 1e-9);
  CHECK(plain.verdict == padded.verdict);
  REQUIRE(padded.rhs_terms.size() == 4);
  CHECK(padded.rhs_terms.back().pairwise < 1e-12);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 3; ++i) {
    const PureState psi = haar_random_pure(4, rng);
    const PaddedSystem p = pad_parties(psi, {1, 2, 3});
    for (Theorem t : {Theorem::kHammingMono, Theorem::kHammingPoly}) {
      const bool mono = t == Theorem::kHammingMono;
      const UnifiedParams params = mono ? kT2 : UnifiedParams::make(1.5, 1.0);
      const auto a = check(psi, 0, {1, 2, 3}, params, t, mono ? 2.0 : 0.5, budget(4));
      const auto b = check(p.state, 0, p.parties, params, t, mono ? 2.0 : 0.5, budget(4));
      CHECK(std::abs(a.slack - b.slack) < 1e-9);
      CHECK(a.verdict == b.verdict);
      for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(a.profile->pairwise[j] - b.profile->pairwise[j]) < 1e-9);
    }
  }
}

TEST_CASE("party order does not change the verdict") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 3; ++i) {
    const PureState psi = haar_random_pure(4, rng);
    std::vector<int> parties{1, 2, 3};
    const auto ref = check_monogamy_hamming(psi, 0, parties, kT2, 2.0, budget(4));
    for (int k = 0; k < 3; ++k) {
      std::shuffle(parties.begin(), parties.end(), rng);
      const auto r = check_monogamy_hamming(psi, 0, parties, kT2, 2.0, budget(4));
      CHECK(r.verdict == ref.verdict);
      CHECK(std::abs(r.slack - ref.slack) < 1e-12);
    }
  }
}

TEST_CASE("confirmed verdicts survive a doubled budget") {
  std::mt19937_64 rng(23);
  int confirmed = 0;
  for (int i = 0; i < 50; ++i) {
    const PureState psi = haar_random_pure(3, rng);
    const bool mono = i % 2 == 0;
    const Theorem t = mono ? Theorem::kHammingMono : Theorem::kHammingPoly;
    const UnifiedParams params = mono ? kT2 : UnifiedParams::make(1.5, 0.8);
    const double e = mono ? 2.0 : 0.5;
    const auto r = check(psi, 0, {1, 2}, params, t, e, budget(3));
    if (r.verdict != Verdict::kConfirmed) continue;
    ++confirmed;
    const auto doubled = check(psi, 0, {1, 2}, params, t, e, budget(6));
    CHECK(doubled.verdict == Verdict::kConfirmed);
    CHECK(doubled.slack >= r.slack - 1e-12);
  }
  CHECK(confirmed == 50);
}

TEST_CASE("mixed global states bound the left side") {
  const DensityMatrix rho = random_mixed(3, 2, 4);
  const auto r = check_monogamy_hamming(rho, 0, {1, 2}, kT2, 1.0, budget(4));
  CHECK(r.lhs_bound == LhsBound::kUpperBound);
  const auto p = check_polygamy_hamming(rho, 0, {1, 2}, UnifiedParams::make(1.5, 1.0), 1.0, budget(4));
  CHECK(p.lhs_bound == LhsBound::kLowerBound);
  const auto partial = check_monogamy_hamming(named_state(NamedKind::kGhz, 4), 0, {1, 2}, kT2, 1.0, budget(4));
  CHECK(partial.lhs_bound == LhsBound::kUpperBound);
}

TEST_CASE("checkers reject bad inputs") {
  const PureState ghz = named_state(NamedKind::kGhz, 3);
  try {
    check_monogamy_hamming(ghz, 0, {1, 2}, UnifiedParams::make(2.0, 1.6), 1.0, budget());
    FAIL("expected region error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRegion);
  }
  CHECK_THROWS_AS(check_monogamy_hamming(ghz, 0, {0, 1}, kT2, 1.0, budget()), Error);
  CHECK_THROWS_AS(check_monogamy_hamming(ghz, 0, {1, 3}, kT2, 1.0, budget()), Error);
  CHECK_THROWS_AS(check_polygamy_hamming(ghz, 0, {1, 2}, UnifiedParams::make(1.5, 1.0), 2.0, budget()), Error);
  const auto out = check(ghz, 0, {1, 2}, UnifiedParams::make(2.0, 1.6), Theorem::kHammingMono, 1.0, budget(), true);
  CHECK_FALSE(out.in_region);
  CHECK(out.verdict == Verdict::kInconclusive);
}
