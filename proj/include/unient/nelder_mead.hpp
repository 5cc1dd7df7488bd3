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

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace unient {

struct NelderMeadOptions {
  int max_iterations = 2000;
  // Stop when the simplex's objective spread falls to this value.
  double tolerance = 1e-9;
  double initial_step = 0.3;
  // Fresh simplices built around the incumbent after a convergence, as long
  // as the previous one still improved the objective by more than tolerance.
  int max_rebuilds = 4;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Minimizes f: span<const double> -> double with the adaptive-coefficient
// Nelder-Mead simplex method (Gao and Han coefficients for dim >= 2). The
// returned value is never worse than f(x0).
template <class Objective>
NelderMeadResult nelder_mead(Objective&& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {}) {
  const std::size_t n = x0.size();
  NelderMeadResult result;
  if (n == 0) {
    result.value = f(std::span<const double>(x0));
    result.evaluations = 1;
    result.x = std::move(x0);
    result.converged = true;
    return result;
  }

  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = n >= 2 ? 1.0 + 2.0 / dn : 2.0;
  const double contract = n >= 2 ? 0.75 - 0.5 / dn : 0.5;
  const double shrink = n >= 2 ? 1.0 - 1.0 / dn : 0.5;

  std::vector<double> simplex((n + 1) * n);
  std::vector<double> values(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n), sum(n);
  auto vertex = [&](std::size_t i) { return std::span<double>(simplex.data() + i * n, n); };
  auto eval = [&](std::span<const double> x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? HUGE_VAL : v;
  };
  auto recompute_sum = [&] {
    std::fill(sum.begin(), sum.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t d = 0; d < n; ++d) sum[d] += simplex[i * n + d];
  };

  std::vector<double> best_x = x0;
  double best_value = eval(best_x);

  auto build = [&](const std::vector<double>& base) {
    for (std::size_t i = 0; i <= n; ++i) {
      auto v = vertex(i);
      std::copy(base.begin(), base.end(), v.begin());
      if (i > 0) v[i - 1] += options.initial_step;
      values[i] = i == 0 ? best_value : eval(v);
    }
    recompute_sum();
  };

  build(best_x);
  int rebuilds = 0;
  double value_at_build = best_value;

  while (true) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (values[i] < values[lo]) lo = i;
      if (values[i] > values[hi]) hi = i;
    }
    std::size_t next_hi = lo;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi && values[i] > values[next_hi]) next_hi = i;

    if (values[lo] < best_value) {
      best_value = values[lo];
      auto v = vertex(lo);
      best_x.assign(v.begin(), v.end());
    }

    if (values[hi] - values[lo] <= options.tolerance) {
      const bool improved = value_at_build - best_value > options.tolerance;
      if (improved && rebuilds < options.max_rebuilds && result.iterations < options.max_iterations) {
        ++rebuilds;
        value_at_build = best_value;
        build(best_x);
        continue;
      }
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) break;
    ++result.iterations;

    auto worst = vertex(hi);
    for (std::size_t d = 0; d < n; ++d) centroid[d] = (sum[d] - worst[d]) / dn;
    for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + reflect * (centroid[d] - worst[d]);
    const double f_reflect = eval(trial);

    auto replace_worst = [&](const std::vector<double>& x, double fx) {
      for (std::size_t d = 0; d < n; ++d) {
        sum[d] += x[d] - worst[d];
        worst[d] = x[d];
      }
      values[hi] = fx;
    };

    if (f_reflect < values[lo]) {
      for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + expand * (trial[d] - centroid[d]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        replace_worst(trial2, f_expand);
      } else {
        replace_worst(trial, f_reflect);
      }
      continue;
    }
    if (f_reflect < values[next_hi]) {
      replace_worst(trial, f_reflect);
      continue;
    }
    const bool outside = f_reflect < values[hi];
    for (std::size_t d = 0; d < n; ++d) {
      const double towards = outside ? trial[d] : worst[d];
      trial2[d] = centroid[d] + contract * (towards - centroid[d]);
    }
    const double f_contract = eval(trial2);
    if (outside ? f_contract <= f_reflect : f_contract < values[hi]) {
      replace_worst(trial2, f_contract);
      continue;
    }
    auto best = vertex(lo);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      auto v = vertex(i);
      for (std::size_t d = 0; d < n; ++d) v[d] = best[d] + shrink * (v[d] - best[d]);
      values[i] = eval(v);
    }
    recompute_sum();
  }

  result.x = std::move(best_x);
  result.value = best_value;
  return result;
}

}  // namespace unient
