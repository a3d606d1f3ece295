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

// Closed-form F_N eigenfunctions in C_m, m = floor((N+2)/4), where
// dim C_m = d = 4m+2-N is 1, 2, 3 or 4. Every function is a trigonometric
// factor times the sine product prod_k sin(pi (m + k - x) / N).

#ifndef RDFT_LOWDIM_HPP
#define RDFT_LOWDIM_HPP

#include <string>
#include <vector>

#include "rdft/spectral.hpp"

namespace rdft {

struct ClosedFormEigenfunction {
  GridSize n;
  int m;
  int d;
  std::string tag;              // e.g. "case3-even-plus"
  FourierEigenvalue expected;   // eigenvalue the construction is meant to carry
  FourierEigenvalue measured;   // nearest eigenvalue to the Rayleigh quotient
  Complex eigenvalue;           // value of `measured`
  double residual;              // ||F f - eigenvalue f|| / ||f||
  GridFunction values;
};

int lowdim_base(GridSize n);       // m
int lowdim_dimension(GridSize n);  // d = 4m + 2 - N

/// N = 4m+1: psi_m, eigenvalue sqrt N.
std::vector<ClosedFormEigenfunction> case1(GridSize n);
/// N = 4m: even (sqrt N) and odd (-i sqrt N).
std::vector<ClosedFormEigenfunction> case2(GridSize n);
/// N = 4m-1: odd (-i sqrt N), even with +sin(2 pi m/N), even with -sin(2 pi m/N).
std::vector<ClosedFormEigenfunction> case3(GridSize n);
/// N = 4m-2: even (sqrt N, -sqrt N) and odd (i sqrt N, -i sqrt N).
std::vector<ClosedFormEigenfunction> case4(GridSize n);

/// Dispatch on N mod 4. Requires N >= 3 so that the sine products are defined.
std::vector<ClosedFormEigenfunction> closed_form_eigenfunctions(GridSize n);

/// c = -2 cos(2 pi m/N) + sign * 2 sin(2 pi m/N) for the even case-3 functions.
double case3_constant(GridSize n, int sign);

/// prod_{k=m+1}^{2m} [cos(2 pi x/N) - cos(2 pi k/N)] on [-m,m], N = 4m+1.
GridFunction kong_case1(GridSize n);
/// sin(2 pi x/N) prod_{k=m+1}^{2m-1} [cos(2 pi x/N) - cos(2 pi k/N)], N = 4m.
GridFunction kong_case2(GridSize n);

/// |<f, g>| / (||f|| ||g||).
double ray_agreement(const GridFunction& f, const GridFunction& g);
/// Best ray agreement between f and any rho_k of the spectral data.
double best_spectral_ray_match(const GridFunction& f, const SpectralData& sd);

/// The sqrt N eigenfunction of C_m produced by the applicable case.
ClosedFormEigenfunction base_case_eigenfunction(GridSize n);
/// |f(m)| and |f(-m)| both exceed 1e-10 max|f| for the base-case function.
bool base_case_nonvanishing(GridSize n);

struct InductionStep {
  Complex lambda;
  GridFunction f_lambda;     // J0^(lambda) applied to the base-case function
  Complex eigenvalue;        // lambda^{-1} sqrt N
  double residual;           // ||F f_lambda - eigenvalue f_lambda|| / ||f_lambda||
  bool in_next_space;        // f_lambda and its transform supported in [-(m+1), m+1]
  double endpoint_ratio;     // |f_lambda(m+1)| / max|f_lambda|
};

/// One induction step from C_m to C_{m+1}. Requires m + 1 <= (N-1)/2.
InductionStep induction_step(GridSize n, Complex lambda);

}  // namespace rdft

#endif  // RDFT_LOWDIM_HPP
