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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace unient {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Validity tolerances shared by every state constructor.
namespace tol {
inline constexpr double kNorm = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = -1e-9;
inline constexpr double kSpectrumSum = 1e-8;
// Eigenvalues at or below this are treated as exact zeros (rank, 0 ln 0).
inline constexpr double kZeroEigenvalue = 1e-15;
// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffDiagonal = 1e-12;
}  // namespace tol

struct EigenSystem {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column k pairs with values[k]
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix. The input is
// not checked for Hermiticity; only its upper triangle and diagonal are read.
EigenSystem jacobi_eigh(const CMatrix& hermitian, int max_sweeps = 64);

// Eigenvalues of a 2x2 Hermitian [[a, b], [conj(b), d]], descending.
inline std::pair<double, double> eigenvalues_2x2(double a, double d, Complex b) {
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(b));
  return {mean + radius, mean - radius};
}

double max_abs(const CMatrix& m);
double hermiticity_defect(const CMatrix& m);

// Kronecker product a (x) b with `a` as the more significant factor.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

}  // namespace unient
