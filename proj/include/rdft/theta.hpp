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

// Theta series on Z/NZ.
//
//   theta(x, tau)  = sum_n exp(i pi tau (x + nN)^2 / N)
//   vartheta(z, tau) = sum_n exp(i pi tau n^2 + 2 pi i n z)
//
// tau-derivatives are taken term by term. Series are summed outward from the
// dominant term until the remaining terms fall below 1e-18 of the sum.

#ifndef RDFT_THETA_HPP
#define RDFT_THETA_HPP

#include <string>
#include <vector>

#include "rdft/interp.hpp"

namespace rdft {

/// d^order/dtau^order theta(x, tau). Im tau must be positive.
Complex theta(double x, Complex tau, GridSize n, int order = 0);
/// d^order/dtau^order vartheta(z, tau).
Complex jacobi_theta(Complex z, Complex tau, int order = 0);
/// theta_3(tau) = vartheta(0, tau) and theta_2(tau) = sum exp(i pi tau (n + 1/2)^2).
Complex theta3(Complex tau, int order = 0);
Complex theta2(Complex tau, int order = 0);

struct DftThetaReport {
  double lemma_error;    // max_x |F theta(., tau)(x) - vartheta(-x/N, tau/N)|
  double jacobi_error;   // max_x |F theta(., tau)(x) - sqrt(N / (-i tau)) theta(x, -1/tau)|
};

DftThetaReport dft_theta_check(GridSize n, Complex tau);

enum class WronskianStatus { kOk, kMismatch, kDegenerate, kVacuous };
const char* wronskian_status_label(WronskianStatus status);

struct WronskianReport {
  GridSize n;
  int a;
  std::vector<Complex> taus;
  WronskianStatus status;
  std::string message;
  /// |det W| / prod of column norms, per tau (row-scaled matrix).
  std::vector<double> denominator_ratio;
  /// Wronskian ratios at the first tau, shaped like the interpolation kernel.
  ComplexMatrix v;
  ComplexMatrix w;
  double tau_spread = 0.0;     // max relative change of any ratio across taus
  double kernel_error = 0.0;   // max relative distance to the eigen-data kernel
};

/// Cramer ratios of the tau-Wronskian of theta(y, tau), y in [-a,a], and
/// vartheta(-y/N, tau/N), y in [-a,a]. Requires N <= 6 and at least two taus.
WronskianReport wronskian_kernel_check(GridSize n, int a, const std::vector<Complex>& taus);

struct N2IdentityReport {
  Complex tau;
  double identity1;           // 2(th2' + th3')(2t) th3(t/2) - 1/2 (th2 + th3)(2t) th3'(t/2)
  double identity2_corrected; // 2 th3'(2t)(th2(2t) - th3(t/2)) - th3(2t)(2 th2'(2t) - 1/2 th3'(t/2))
  double identity2_as_stated; // 2 th3'(2t)(th2(t/2) - th3(t/2)) - 1/2 th3(2t)(th2'(t/2) - th3'(t/2))
  double landen1;             // th3(t/2) - th3(2t) - th2(2t)
  double landen2_as_stated;   // th3(2t) - th2(t/2) + th3(t/2)
  Complex wronskian_v;        // W(th2(2t), th3(t/2)) / W(th3(2t), th3(t/2))
  Complex wronskian_w;        // W(th3(2t), th2(2t)) / W(th3(2t), th3(t/2))
};

struct N2IdentitiesSummary {
  std::vector<N2IdentityReport> points;
  double max_asserted;   // identity1, identity2_corrected, landen1
};

N2IdentitiesSummary n2_identities_check(const std::vector<Complex>& taus);

}  // namespace rdft

#endif  // RDFT_THETA_HPP
