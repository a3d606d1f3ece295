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

// Extremal-support basis of C_a.
//
//   psi_a(x) = exp(i pi (r-1) x / N) prod_{k=1}^{s} sin(pi (a + k - x) / N),
//
// on [-a,a], with r = 4a+2-N and s = N-2a-1. The modulated copies
// xi^{-kx} psi_a, 0 <= k < r, form a basis of C_a.

#ifndef RDFT_EXTREMAL_HPP
#define RDFT_EXTREMAL_HPP

#include <optional>
#include <vector>

#include "rdft/dft.hpp"

namespace rdft {

/// Inclusive range of signed indices [first, last].
struct SignedRange {
  int first;
  int last;

  int length() const noexcept { return last - first + 1; }
  /// Canonical indices of first..last.
  std::vector<int> indices(GridSize n) const;
};

/// psi_a via the sine product. Requires r = 4a+2-N >= 1.
GridFunction psi(GridSize n, int a);

/// psi_a via (-2i)^{-s} xi^{-Ns/4 + ax} (xi^{a+1-x}; xi)_s.
GridFunction psi_q_pochhammer(GridSize n, int a);

/// Same product with an arbitrary prefactor base p in p^s; exposed so the
/// alternative normalization (-2i)^s can be compared against psi_a.
GridFunction psi_q_pochhammer_scaled(GridSize n, int a, Complex prefactor_base);

/// xi^{-kx} psi_a(x), 0 <= k < r.
GridFunction basis_element(GridSize n, int a, int k);

struct ExtremalBasis {
  GridSize n;
  int a;
  int r;
  GridFunction psi;
  std::vector<GridFunction> basis;
};

ExtremalBasis extremal_basis(GridSize n, int a);

/// Inverse DFT of xi^{-kx} psi_a in closed form:
///   u(y) = C (-z)^t xi^{t(t-1)/2} binom(s, t)_xi,  t = y + a - k,
/// with z = xi^{a+1} and C = (-2i)^{-s} xi^{-Ns/4}.
GridFunction psi_inverse_transform_closed_form(GridSize n, int a, int k);

/// Support of the inverse transform of xi^{-kx} psi_a: [-a+k, a+1-r+k].
SignedRange inverse_transform_support(GridSize n, int a, int k);
/// Support of the forward transform of xi^{-kx} psi_a: [r-1-a-k, a-k].
SignedRange forward_transform_support(GridSize n, int a, int k);

/// Kernel dimension of the DFT rows `rows` restricted to columns `cols`
/// (canonical indices), from a long double SVD.
int dft_submatrix_kernel_dimension(GridSize n, const std::vector<int>& rows,
                                   const std::vector<int>& cols);

/// dim C_a as the kernel dimension of [exp(-2 pi i j k / N)], j outside and
/// k inside [-a,a].
int dim_ca_rank_oracle(GridSize n, int a);

/// max(0, 4a+2-N).
int dim_ca_formula(GridSize n, int a);

/// True iff the functions supported in supp f whose transform is supported in
/// supp f^ form a one-dimensional space.
bool is_extremal_support(const GridFunction& f);

struct UncertaintyReport {
  int support_size;
  int transform_support_size;
  bool donoho_stark;          // |S| |S^| >= N
  std::optional<bool> tao;    // |S| + |S^| >= N + 1, only for prime N
};

UncertaintyReport uncertainty_check(const GridFunction& f);

bool is_prime(int n);

}  // namespace rdft

#endif  // RDFT_EXTREMAL_HPP
