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

// Periodic tridiagonal operators commuting with F_N.
//
//   J0 = delta + delta^{-1} + 2 cos(2 pi x / N)
//   J1 = a_{x+1} delta + a_x delta^{-1},          a_k = cos(pi (2k - 1) / N)
//   J  = J1 - cos(pi (2a + 1) / N) J0
//      = A(x) delta + B(x) + A(x - 1) delta^{-1}
//
// with A(x) = cos(pi(2x+1)/N) - cos(pi(2a+1)/N) and
// B(x) = -2 cos(pi(2a+1)/N) cos(2 pi x / N). A(a) = A(-a-1) = 0, which is
// what splits J into a block on [-a,a] and a block on its complement.
//
// Shifts are accumulated, so for N = 2 (where delta = delta^{-1}) the single
// off-diagonal entry receives both contributions.

#ifndef RDFT_COMMUTANT_HPP
#define RDFT_COMMUTANT_HPP

#include "rdft/dft.hpp"

namespace rdft {

/// cos(pi t / N), reduced so that cos(pi t/N) and cos(-pi t/N) are bitwise
/// equal and the zeros at t = N/2 mod N are exact.
double cos_pi_ratio(long t, GridSize n);

struct CommutantSpec {
  GridSize n;
  int a;

  CommutantSpec(GridSize n_, int a_);

  /// c = cos(pi (2a + 1) / N).
  double coupling() const { return cos_pi_ratio(2L * a + 1, n); }
  /// a >= (N - 2) / 4, required by the spectral pipeline.
  bool spectral_range() const { return 4 * a + 2 >= n.value(); }
};

/// Off-diagonal coefficient A(x) of J (entry (x, x+1)).
double coefficient_a(const CommutantSpec& spec, long x);
/// Diagonal coefficient B(x) of J.
double coefficient_b(const CommutantSpec& spec, long x);

CyclicOperator build_j0(GridSize n);
CyclicOperator build_j1(GridSize n);
CyclicOperator build_j(const CommutantSpec& spec);

/// J assembled directly from A and B: A(x) delta + B(x) + A(x-1) delta^{-1}.
CyclicOperator build_j_from_coefficients(const CommutantSpec& spec);

/// J0^(lambda) = sum_{k=0}^{3} lambda^{-k} F^{-k} delta F^k, lambda^4 = 1.
/// Satisfies F^{-1} J0^(lambda) F = lambda J0^(lambda).
CyclicOperator build_twisted_j0(GridSize n, Complex lambda);

/// ||A B - B A||_F / (||A||_F ||B||_F); zero if either operator vanishes.
double commutator_norm(const CyclicOperator& lhs, const CyclicOperator& rhs);

}  // namespace rdft

#endif  // RDFT_COMMUTANT_HPP
