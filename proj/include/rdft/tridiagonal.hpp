/*
 * Copyright 2026 The rdft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Real symmetric tridiagonal eigensolver.
//
// The primary route is implicit-shift QL with eigenvector accumulation. If the
// result fails the residual / orthogonality checks the block is re-solved by
// Sturm-sequence bisection followed by inverse iteration.

#ifndef RDFT_TRIDIAGONAL_HPP
#define RDFT_TRIDIAGONAL_HPP

#include <vector>

#include <Eigen/Dense>

namespace rdft {

/// Symmetric tridiagonal block of J together with the canonical Z/NZ index
/// of each row.
struct JacobiBlock {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples rows i and i+1
  std::vector<int> index_map;

  int size() const noexcept { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;
  /// Max absolute row sum (infinity norm); the scale for residual checks.
  double norm() const;
};

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
struct TridiagonalEigen {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};

enum class EigenRoute { kImplicitQl, kBisection };

struct EigenTolerances {
  double residual = 1e-10;       // ||B v - lambda v|| <= residual * ||B||
  double orthogonality = 1e-10;  // max |V^T V - I|
  double separation = 1e-10;     // min gap > separation * spectral range
};

/// Eigendecomposition with validation and fallback. Eigenvectors are sign
/// normalized: the first entry larger than 1e-10 max|v| is positive.
TridiagonalEigen eigendecompose_block(const JacobiBlock& block, const EigenTolerances& tol = {});

/// Run a single route without validation (exposed for cross-checking).
TridiagonalEigen solve_tridiagonal(const JacobiBlock& block, EigenRoute route);

/// Number of eigenvalues strictly below x (Sturm count).
int sturm_count(const JacobiBlock& block, double x);

}  // namespace rdft

#endif  // RDFT_TRIDIAGONAL_HPP
