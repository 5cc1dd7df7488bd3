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

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "unient/errors.hpp"
#include "unient/hamming.hpp"
#include "unient/harness.hpp"
#include "unient/report_io.hpp"

namespace unient {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "FAILED: " << what << "; ";
    passed = passed && ok;
  }
};

std::string fmt(double v) { return format_number(v); }

// Two-qubit concurrence from the spin-flipped spectrum; independent of the
// roof optimizer.
double wootters_concurrence(const CMatrix& rho) {
  CMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const CMatrix flip = kron(sy, sy);
  const CMatrix tilde = flip * rho.conjugate() * flip;
  Eigen::ComplexEigenSolver<CMatrix> solver(rho * tilde);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < 4; ++i) roots.push_back(std::sqrt(std::max(solver.eigenvalues()(i).real(), 0.0)));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

std::vector<double> random_spectrum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(2, 8);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(static_cast<std::size_t>(dim(rng)));
  double total = 0.0;
  for (double& x : v) total += (x = expo(rng));
  for (double& x : v) x /= total;
  return v;
}

const std::vector<std::pair<double, double>> kMonoParams = {{2.0, 1.0}, {2.5, 1.0}, {3.0, 0.5}, {2.0, 0.25}};
const std::vector<double> kAlphas = {1.0, 1.5, 2.0, 3.0};
const std::vector<std::pair<double, double>> kPolyParams = {{1.5, 1.0}, {1.5, 0.8}, {2.0, 1.0}};
const std::vector<double> kBetas = {0.25, 0.5, 0.75, 1.0};

std::vector<int> others(int n, int focus) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (q != focus) out.push_back(q);
  return out;
}

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& options) : opt_(options) { budget_.seed = options.seed; }

  Outcome entropy_closed_forms() {
    Outcome o;
    const Spectrum mixed({0.5, 0.5});
    const double s21 = unified_entropy(mixed, UnifiedParams::make(2.0, 1.0));
    o.require(s21 == 0.5, "S_{2,1}(I/2) = " + fmt(s21));
    // 2 - sqrt(2), evaluated in extended precision.
    const double s2h = unified_entropy(mixed, UnifiedParams::make(2.0, 0.5));
    o.require(std::abs(s2h - 0.58578643762690495119) <= 1e-9, "S_{2,0.5}(I/2) = " + fmt(s2h));
    o.require(std::abs(s2h - 0.58578644) <= 5e-9, "S_{2,0.5}(I/2) rounds to 0.58578644");
    const std::vector<std::pair<double, double>> grid = {
        {2.0, 0.0}, {2.0, 0.5}, {2.0, 1.0}, {2.5, 0.3}, {2.5, 1.0},
        {3.0, 0.0}, {3.0, 1.0}, {4.0, 0.75}, {6.0, 0.5}, {3.0, 0.2},
        {1.0, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {1.2, 0.5}, {1.5, 0.75},
        {1.5, 1.0}, {1.8, 0.97}, {2.0, 1.0}, {1.1, 0.2}, {1.7, 0.95}};
    double worst = 0.0;
    for (const auto& [q, s] : grid) {
      for (const Spectrum& pure : {Spectrum({1.0, 0.0}), Spectrum({1.0, 0.0, 0.0, 0.0})})
        worst = std::max(worst, std::abs(unified_entropy(pure, UnifiedParams::make(q, s))));
    }
    int in_mono = 0, in_poly = 0;
    for (const auto& [q, s] : grid) {
      in_mono += RegionSpec{InequalityMode::kMonogamy, q, s}.valid();
      in_poly += RegionSpec{InequalityMode::kPolygamy, q, s}.valid();
    }
    o.require(in_mono >= 10 && in_poly >= 10, "grid covers both regions");
    o.require(worst <= 1e-12, "pure-state entropy " + fmt(worst));
    o.detail << "S21=" << fmt(s21) << " S2,0.5=" << fmt(s2h) << " max|S(pure)|=" << fmt(worst);
    return o;
  }

  Outcome limit_continuity() {
    Outcome o;
    std::mt19937_64 rng(derive_seed(opt_.seed, 2));
    std::uniform_real_distribution<double> q_dist(0.1, 4.0);
    std::uniform_real_distribution<double> s_dist(0.0, 1.0);
    double renyi = 0.0, vn = 0.0, tsallis = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Spectrum spec(random_spectrum(rng));
      const double q = q_dist(rng);
      const double s = s_dist(rng);
      renyi = std::max(renyi, std::abs(unified_entropy(spec, UnifiedParams::make(q, 1e-5)) - renyi_entropy(spec, q)));
      const double ref = von_neumann_entropy(spec);
      for (double dq : {1e-5, -1e-5})
        vn = std::max(vn, std::abs(unified_entropy(spec, UnifiedParams::make(1.0 + dq, s)) - ref));
      tsallis = std::max(tsallis,
                         std::abs(unified_entropy(spec, UnifiedParams::make(q, 1.0 - 1e-9)) - tsallis_entropy(spec, q)));
    }
    o.require(renyi <= 1e-4, "Renyi stitching " + fmt(renyi));
    o.require(vn <= 1e-4, "von Neumann stitching " + fmt(vn));
    o.require(tsallis <= 1e-8, "Tsallis stitching " + fmt(tsallis));
    o.detail << "max gaps: renyi=" << fmt(renyi) << " vn=" << fmt(vn) << " tsallis=" << fmt(tsallis);
    return o;
  }

  Outcome lemma_fuzz() {
    Outcome o;
    std::mt19937_64 rng(derive_seed(opt_.seed, 3));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> alpha(1.0, 8.0);
    int violations = 0;
    double worst_alpha = HUGE_VAL, worst_beta = -HUGE_VAL;
    for (int i = 0; i < 100000; ++i) {
      const double a = lemma1_check(unit(rng), alpha(rng), LemmaMode::kAlpha);
      const double b = lemma1_check(unit(rng), unit(rng), LemmaMode::kBeta);
      violations += (a < -1e-12) + (b > 1e-12);
      worst_alpha = std::min(worst_alpha, a);
      worst_beta = std::max(worst_beta, b);
    }
    o.require(violations == 0, std::to_string(violations) + " sign violations");
    o.detail << "violations=" << violations << " min alpha slack=" << fmt(worst_alpha)
             << " max beta slack=" << fmt(worst_beta);
    return o;
  }

  Outcome roof_oracle() {
    Outcome o;
    const UnifiedParams p = UnifiedParams::make(2.0, 1.0);
    const Bipartition cut = Bipartition::from_side_a(2, {0});
    const DensityMatrix w_pair = partial_trace(named_state(NamedKind::kW, 3), {0, 1});
    const double concurrence = wootters_concurrence(w_pair.entries());
    const double oracle = concurrence * concurrence / 2.0;
    const RoofResult roof = ue_mixed(w_pair, cut, p, budget_);
    o.require(std::abs(concurrence - 2.0 / 3.0) <= 1e-9, "C(W pair) = " + fmt(concurrence));
    o.require(std::abs(roof.value - 2.0 / 9.0) <= 1e-3, "UE(W pair) = " + fmt(roof.value));
    o.require(std::abs(roof.value - oracle) <= 1e-3, "UE vs C^2/2 oracle");
    const DensityMatrix ghz_pair = partial_trace(named_state(NamedKind::kGhz, 3), {0, 1});
    const RoofResult assisted = ueoa(ghz_pair, cut, p, budget_);
    o.require(std::abs(assisted.value - 0.5) <= 1e-3, "UEoA(GHZ pair) = " + fmt(assisted.value));
    o.detail << "UE(W pair)=" << fmt(roof.value) << " C^2/2=" << fmt(oracle)
             << " UEoA(GHZ pair)=" << fmt(assisted.value);
    return o;
  }

  Outcome saturation() {
    Outcome o;
    const UnifiedParams p = UnifiedParams::make(2.0, 1.0);
    const double gate = opt_.saturation_gate;
    const auto w3 = named_state(NamedKind::kW, 3);
    const auto w4 = named_state(NamedKind::kW, 4);
    const auto r1 = check_monogamy_hamming(w3, 0, {1, 2}, p, 1.0, budget_);
    const auto r2 = evaluate(r1.profile, Theorem::kHammingMono, 2.0);
    const auto r4 = check_monogamy_hamming(w4, 0, {1, 2, 3}, p, 1.0, budget_);
    o.require(std::abs(r1.slack) <= gate, "W3 alpha=1 slack " + fmt(r1.slack));
    o.require(std::abs(r2.slack - 4.0 / 81.0) <= gate, "W3 alpha=2 slack " + fmt(r2.slack));
    o.require(std::abs(r4.slack) <= gate, "W4 alpha=1 slack " + fmt(r4.slack));
    o.require(std::abs(r4.lhs - 3.0 / 8.0) <= 1e-12, "W4 lhs " + fmt(r4.lhs));
    o.detail << "W3 a=1 slack=" << fmt(r1.slack) << " W3 a=2 slack=" << fmt(r2.slack)
             << " (4/81=" << fmt(4.0 / 81.0) << ") W4 a=1 slack=" << fmt(r4.slack) << " lhs=" << fmt(r4.lhs)
             << " gate=" << fmt(gate);
    return o;
  }

  Outcome theorem1_ensemble() {
    Outcome o;
    const auto& profiles = mono_profiles();
    int total = 0, confirmed = 0;
    double min_slack = HUGE_VAL;
    for (const auto& profile : profiles) {
      for (double a : kAlphas) {
        const auto r = evaluate(profile, Theorem::kHammingMono, a);
        ++total;
        confirmed += r.verdict == Verdict::kConfirmed;
        min_slack = std::min(min_slack, r.slack);
      }
    }
    o.require(total == 200 * 4 * 4 && confirmed == total,
              std::to_string(confirmed) + "/" + std::to_string(total) + " confirmed");
    o.detail << confirmed << "/" << total << " confirmed, min slack=" << fmt(min_slack);
    return o;
  }

  Outcome theorem2_gating() {
    Outcome o;
    const UnifiedParams p = UnifiedParams::make(2.0, 1.0);
    const auto ghz = check_monogamy_indexed(named_state(NamedKind::kGhz, 3), 0, {1, 2}, p, 2.0, budget_);
    const auto w4 = check_monogamy_indexed(named_state(NamedKind::kW, 4), 0, {1, 2, 3}, p, 2.0, budget_);
    o.require(ghz.condition_met == true && ghz.verdict == Verdict::kConfirmed, "GHZ3 gating");
    o.require(w4.condition_met == false && w4.verdict == Verdict::kNotApplicable, "W4 gating");
    o.detail << "GHZ3 condition=" << (ghz.condition_met.value_or(false) ? "true" : "false") << " "
             << to_string(ghz.verdict) << "; W4 condition="
             << (w4.condition_met.value_or(true) ? "true" : "false") << " " << to_string(w4.verdict);
    return o;
  }

  Outcome theorem3_ensemble() {
    Outcome o;
    const auto& profiles = poly_profiles();
    int total = 0, confirmed = 0;
    double min_slack = HUGE_VAL;
    for (const auto& profile : profiles) {
      for (double b : kBetas) {
        const auto r = evaluate(profile, Theorem::kHammingPoly, b);
        ++total;
        confirmed += r.verdict == Verdict::kConfirmed;
        min_slack = std::min(min_slack, r.slack);
      }
    }
    o.require(total == 100 * 3 * 4 && confirmed == total,
              std::to_string(confirmed) + "/" + std::to_string(total) + " confirmed");
    const auto ghz = check_polygamy_hamming(named_state(NamedKind::kGhz, 3), 0, {1, 2},
                                            UnifiedParams::make(1.0, 1.0), 0.5, budget_);
    o.require(std::abs(ghz.lhs - 0.83255) <= 1e-3, "GHZ3 EoA lhs " + fmt(ghz.lhs));
    o.require(std::abs(ghz.rhs - 1.24883) <= 1e-3, "GHZ3 EoA rhs " + fmt(ghz.rhs));
    o.require(ghz.verdict == Verdict::kConfirmed, "GHZ3 EoA verdict");
    o.detail << confirmed << "/" << total << " confirmed, min slack=" << fmt(min_slack)
             << "; GHZ3 EoA lhs=" << fmt(ghz.lhs) << " rhs=" << fmt(ghz.rhs);
    return o;
  }

  Outcome tightness() {
    Outcome o;
    int chains = 0, held = 0;
    auto run = [&](const auto& profiles, const std::vector<double>& exps, Theorem plain, Theorem ham, Theorem idx) {
      for (const auto& profile : profiles) {
        for (double e : exps) {
          const auto rp = evaluate(profile, plain, e);
          const auto rh = evaluate(profile, ham, e);
          const auto ri = evaluate(profile, idx, e);
          ++chains;
          held += tightness_chain(rh, rp, &ri).holds;
        }
      }
    };
    run(mono_profiles(), kAlphas, Theorem::kBaseMono, Theorem::kHammingMono, Theorem::kIndexedMono);
    run(poly_profiles(), kBetas, Theorem::kBasePoly, Theorem::kHammingPoly, Theorem::kIndexedPoly);
    o.require(chains == 200 * 16 + 100 * 12 && held == chains,
              std::to_string(held) + "/" + std::to_string(chains) + " chains hold");
    o.detail << held << "/" << chains << " chains hold";
    return o;
  }

  Outcome padding() {
    Outcome o;
    double worst = 0.0;
    int same_verdict = 0, total = 0;
    for (int i = 0; i < 20; ++i) {
      const QuantumState state = haar_random_pure(4, derive_seed(opt_.seed, 1000 + static_cast<std::uint64_t>(i)));
      const PaddedSystem padded = pad_parties(state, {1, 2, 3});
      o.require(padded.parties.size() == 4 && n_qubits(padded.state) == 5, "pad to 4 parties");
      for (Theorem t : {Theorem::kHammingMono, Theorem::kHammingPoly}) {
        const bool mono = t == Theorem::kHammingMono;
        const UnifiedParams p = mono ? UnifiedParams::make(2.0, 1.0) : UnifiedParams::make(1.5, 1.0);
        const double e = mono ? 2.0 : 0.5;
        const auto plain = check(state, 0, {1, 2, 3}, p, t, e, budget_);
        const auto pad = check(padded.state, 0, padded.parties, p, t, e, budget_);
        ++total;
        same_verdict += plain.verdict == pad.verdict;
        worst = std::max(worst, std::abs(plain.slack - pad.slack));
      }
    }
    o.require(same_verdict == total, "verdicts changed under padding");
    o.require(worst <= 1e-9, "slack drift " + fmt(worst));
    o.detail << same_verdict << "/" << total << " verdicts equal, max slack drift=" << fmt(worst);
    return o;
  }

  Outcome determinism() {
    Outcome o;
    SweepConfig config;
    config.states = {{.kind = StateSpec::Kind::kNamed, .named = NamedKind::kGhz, .n_qubits = 3},
                     {.kind = StateSpec::Kind::kNamed, .named = NamedKind::kW, .n_qubits = 3},
                     {.kind = StateSpec::Kind::kRandomPure, .n_qubits = 3, .count = 4, .seed = opt_.seed},
                     {.kind = StateSpec::Kind::kRandomMixed, .n_qubits = 3, .count = 2, .rank = 2, .seed = opt_.seed}};
    config.theorems = {Theorem::kHammingMono, Theorem::kIndexedMono};
    config.params = {{2.0, 1.0}, {3.0, 0.5}};
    config.alphas = {1.0, 2.0};
    config.budget = budget_;
    config.budget.restarts = 8;
    config.jobs = opt_.jobs;
    const std::string first = render(run_sweep(config), OutputFormat::kCsv, false);
    config.jobs = 1;
    const std::string second = render(run_sweep(config), OutputFormat::kCsv, false);
    o.require(first == second, "CSV output differs between runs");
    o.require(first.find("confirmed") != std::string::npos, "sweep produced rows");
    o.detail << first.size() << " bytes, identical=" << (first == second ? "yes" : "no");
    return o;
  }

 private:
  const std::vector<std::shared_ptr<const PairwiseProfile>>& mono_profiles() {
    if (mono_.empty()) mono_ = ensemble(200, 4, kMonoParams, InequalityMode::kMonogamy, 6);
    return mono_;
  }

  const std::vector<std::shared_ptr<const PairwiseProfile>>& poly_profiles() {
    if (poly_.empty()) poly_ = ensemble(100, 3, kPolyParams, InequalityMode::kPolygamy, 8);
    return poly_;
  }

  std::vector<std::shared_ptr<const PairwiseProfile>> ensemble(
      int count, int n, const std::vector<std::pair<double, double>>& params, InequalityMode mode,
      std::uint64_t stream) {
    std::vector<std::shared_ptr<const PairwiseProfile>> out(static_cast<std::size_t>(count) * params.size());
    const std::uint64_t base = derive_seed(opt_.seed, stream);
    parallel_for(static_cast<int>(out.size()), opt_.jobs, [&](int u) {
      const auto i = static_cast<std::size_t>(u) / params.size();
      const auto k = static_cast<std::size_t>(u) % params.size();
      const PureState psi = haar_random_pure(n, derive_seed(base, i));
      const auto [q, s] = params[k];
      out[static_cast<std::size_t>(u)] = std::make_shared<const PairwiseProfile>(
          measure_profile(psi, 0, others(n, 0), UnifiedParams::make(q, s), mode, budget_));
    });
    return out;
  }

  AcceptanceOptions opt_;
  OptBudget budget_;
  std::vector<std::shared_ptr<const PairwiseProfile>> mono_;
  std::vector<std::shared_ptr<const PairwiseProfile>> poly_;
};

using CriterionFn = Outcome (Suite::*)();

struct Criterion {
  const char* name;
  CriterionFn run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"entropy closed forms", &Suite::entropy_closed_forms},
      {"limit continuity", &Suite::limit_continuity},
      {"scalar power lemma fuzz", &Suite::lemma_fuzz},
      {"roof oracle cross-check", &Suite::roof_oracle},
      {"W-state saturation (Hamming monogamy)", &Suite::saturation},
      {"Hamming monogamy on 200 random 4-qubit states", &Suite::theorem1_ensemble},
      {"indexed monogamy condition gating", &Suite::theorem2_gating},
      {"Hamming polygamy on 100 random 3-qubit states", &Suite::theorem3_ensemble},
      {"tightness chains", &Suite::tightness},
      {"padding invariance", &Suite::padding},
      {"sweep determinism", &Suite::determinism},
  };
  return list;
}

}  // namespace

std::vector<std::string> acceptance_criteria() {
  std::vector<std::string> names;
  for (const auto& c : criteria()) names.emplace_back(c.name);
  return names;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& log) {
  Suite suite(options);
  std::vector<CriterionResult> results;
  const auto& list = criteria();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (options.only && !options.only->contains(id)) continue;
    CriterionResult r{.id = id, .name = list[i].name};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = (suite.*list[i].run)();
      r.passed = o.passed;
      r.detail = o.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << id << ". " << r.name << " ("
        << std::fixed << std::setprecision(1) << r.seconds << "s) " << std::defaultfloat << r.detail << '\n'
        << std::flush;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace unient
