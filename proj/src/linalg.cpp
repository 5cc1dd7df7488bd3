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

#include "unient/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unient/errors.hpp"

namespace unient {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidState: return "invalid-state";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kUnknownState: return "unknown-state";
    case ErrorCode::kSingularParameters: return "singular-parameters";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kRegion: return "region";
    case ErrorCode::kMeasurement: return "measurement";
    case ErrorCode::kMismatch: return "mismatch";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

EigenSystem jacobi_eigh(const CMatrix& hermitian, int max_sweeps) {
  const Eigen::Index n = hermitian.rows();
  // Symmetrize from the upper triangle so round-off below it is ignored.
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = hermitian(i, i).real();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = hermitian(i, j);
      a(j, i) = std::conj(hermitian(i, j));
    }
  }
  CMatrix v = CMatrix::Identity(n, n);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol::kJacobiOffDiagonal) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300) continue;
        // Phase u makes the (p,q) block real; then a real rotation (c, s)
        // annihilates it. J = diag(1, conj(u)) * [[c, s], [-s, c]].
        const Complex u = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex jqp = -s * std::conj(u);
        const Complex jqq = c * std::conj(u);

        // A <- A J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + jqp * akq;
          a(k, q) = s * akp + jqq * akq;
        }
        // A <- J^H A
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // V <- V J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + jqp * vkq;
          v(k, q) = s * vkp + jqq * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() > a(y, y).real();
  });
  EigenSystem out;
  out.values.reserve(order.size());
  out.vectors.resize(n, n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    out.vectors.col(static_cast<Eigen::Index>(k)) = v.col(order[k]);
  }
  return out;
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, std::abs(m(i, j)));
  return best;
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace unient
