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

// Interpolation from f and f^ on [-a,a].
//
// On each doubled eigenspace span{phi_j, phi~_j} the transform acts as
// [[alpha_j, beta_j], [beta_j, -alpha_j]]. Knowing <f, phi_j> and
// <f^, phi_j> determines the phi~_j coefficient, which gives
//
//   f(x) = sum_y v_y(x) f(y) + w_y(x) f^(y),   x outside [-a,a].

#ifndef RDFT_INTERP_HPP
#define RDFT_INTERP_HPP

#include <vector>

#include "rdft/spectral.hpp"

namespace rdft {

enum class PairParity { kEven, kOdd };

struct EigenspaceAction {
  int j;
  double lambda;
  Complex alpha;
  Complex beta;
  PairParity parity;
  bool real_pair;            // alpha, beta real (else both imaginary)
  double residual;           // max over F phi, F phi~ of the 2x2 model error
  double cross_component;    // size of the component that should vanish
};

/// Action of F_N on the j-th doubled pair. Throws when |beta| < 1e-10 sqrt N
/// or when the 2x2 model does not describe F on the pair.
EigenspaceAction eigenspace_action(const SpectralData& sd, const CyclicOperator& f, int j);
std::vector<EigenspaceAction> eigenspace_actions(const SpectralData& sd, const CyclicOperator& f);

struct InterpolationKernel {
  GridSize n;
  int a;
  std::vector<int> inside;    // canonical index of y = -a..a (row order)
  std::vector<int> outside;   // canonical index of x = a+1..N-a-1 (column order)
  ComplexMatrix v;            // v(row y, column x) = v_y(x)
  ComplexMatrix w;
  double condition;           // max_j sqrt N / |beta_j|, 1 when s = 0
};

InterpolationKernel magic_functions(const std::vector<EigenspaceAction>& actions,
                                    const SpectralData& sd);
/// Spectral data, actions and kernel for (N, a) in one call.
InterpolationKernel interpolation_kernel(GridSize n, int a);

/// Exterior values in column order from f and f^ sampled on [-a,a] (signed
/// order -a..a).
ComplexVector reconstruct_exterior(const InterpolationKernel& kernel, const ComplexVector& f_inside,
                                   const ComplexVector& f_hat_inside);

/// The whole function: samples on [-a,a] plus reconstructed exterior.
GridFunction reconstruct(const InterpolationKernel& kernel, const ComplexVector& f_inside,
                         const ComplexVector& f_hat_inside);

/// f sampled on [-a,a] in signed order.
ComplexVector sample_inside(const GridFunction& f, int a);

/// Exterior values of f^ (column order) from the same data, by
///   f^(x) = sum_j phi~_j(x) / beta_j sum_y (N f(-y) - alpha_j f^(y)) phi_j(y).
ComplexVector dual_reconstruct_transform(const SpectralData& sd,
                                         const std::vector<EigenspaceAction>& actions,
                                         const ComplexVector& f_inside,
                                         const ComplexVector& f_hat_inside);

struct FourierEigenvector {
  FourierEigenvalue which;
  Complex eigenvalue;
  double residual;  // ||F f - eigenvalue f|| / ||f||
  GridFunction f;
};

/// The r functions rho_k followed by (alpha_j +- sigma_j) phi_j + beta_j phi~_j,
/// sigma_j = +-sqrt(alpha_j^2 + beta_j^2), for every doubled pair.
std::vector<FourierEigenvector> full_eigenbasis(const SpectralData& sd,
                                                const std::vector<EigenspaceAction>& actions);

}  // namespace rdft

#endif  // RDFT_INTERP_HPP
