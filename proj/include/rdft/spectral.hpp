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

// Joint eigenstructure of J and F_N.
//
// J splits into a Jacobi block on [-a,a] and one on the complementary arc.
// For a >= (N-2)/4 every eigenvalue of the outer block reappears in the inner
// block; those become doubled modes (phi_j inside, phi~_j outside). The r =
// 4a+2-N unmatched inner eigenvectors rho_k span C_a and are F_N-eigenvectors.

#ifndef RDFT_SPECTRAL_HPP
#define RDFT_SPECTRAL_HPP

#include <array>
#include <string>
#include <vector>

#include "rdft/commutant.hpp"
#include "rdft/tridiagonal.hpp"

namespace rdft {

/// Principal submatrix of J on [-a,a] (signed order) or on the complement
/// arc a+1..N-a-1. Throws if J couples the two pieces.
JacobiBlock restrict_j(const CyclicOperator& j, const DiscreteInterval& interval, bool complement);

/// The four possible F_N eigenvalues, in table order.
enum class FourierEigenvalue { kPlusRoot = 0, kMinusIRoot = 1, kMinusRoot = 2, kPlusIRoot = 3 };

Complex fourier_eigenvalue_value(FourierEigenvalue which, GridSize n);
const char* fourier_eigenvalue_label(FourierEigenvalue which);

struct SimpleMode {
  double mu;
  GridFunction rho;
};

struct DoubledMode {
  double lambda;
  GridFunction phi;
  GridFunction phi_tilde;
};

struct PairingStats {
  double range = 0.0;            // spread of the combined spectrum
  double match_tolerance = 0.0;
  double max_match_distance = 0.0;
  /// Smallest distance from an outer eigenvalue to a non-partner inner one.
  double min_rival_distance = 0.0;
};

struct SpectralData {
  GridSize n;
  int a;
  int r;
  int s;
  std::vector<SimpleMode> simple;
  std::vector<DoubledMode> doubled;
  PairingStats stats;
};

/// Matches the outer spectrum into the inner one. Requires a >= (N-2)/4.
SpectralData pair_spectra(const JacobiBlock& inside, const JacobiBlock& outside, GridSize n, int a);

SpectralData spectral_data_from_operator(const CyclicOperator& j, int a);
SpectralData compute_spectral_data(GridSize n, int a);

struct FourierAction {
  FourierEigenvalue which;
  Complex value;
  double residual;  // ||F rho - value rho|| / ||rho||
};

/// F_N eigenvalue of every rho_k. Throws if some rho_k is not an eigenvector.
std::vector<FourierAction> fourier_eigenvalues_on_ca(const SpectralData& sd, const CyclicOperator& f);

/// Counts of (sqrt N, -i sqrt N, -sqrt N, i sqrt N).
using Multiplicities = std::array<int, 4>;

/// Multiplicities computed through the spectral pipeline; requires a >= m
/// with m = floor((N+2)/4).
Multiplicities multiplicity_table(GridSize n, int a);
Multiplicities multiplicity_closed_form(GridSize n, int a);

/// Smallest a for which the multiplicity table applies.
int multiplicity_base(GridSize n);

std::string multiplicity_csv_header();
std::string multiplicity_csv_row(GridSize n, int a, const Multiplicities& counts);

}  // namespace rdft

#endif  // RDFT_SPECTRAL_HPP
