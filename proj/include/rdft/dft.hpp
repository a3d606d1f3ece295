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

// Non-normalized discrete Fourier transform
//
//   F_N f(k) = sum_j exp(-2 pi i j k / N) f(j),
//
// so F_N^2 f(x) = N f(-x), F_N^4 = N^2 and the eigenvalues are +-sqrt(N),
// +-i sqrt(N). Everything is dense O(N^2).

#ifndef RDFT_DFT_HPP
#define RDFT_DFT_HPP

#include "rdft/zmod.hpp"

namespace rdft {

/// Dense N x N operator on grid functions.
class CyclicOperator {
 public:
  CyclicOperator(GridSize n, ComplexMatrix entries);

  static CyclicOperator identity(GridSize n);
  static CyclicOperator zero(GridSize n);

  GridSize grid() const noexcept { return n_; }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  GridFunction apply(const GridFunction& f) const;
  double frobenius_norm() const { return entries_.norm(); }

  CyclicOperator operator*(const CyclicOperator& rhs) const;
  CyclicOperator operator+(const CyclicOperator& rhs) const;
  CyclicOperator operator-(const CyclicOperator& rhs) const;
  CyclicOperator scaled(Complex factor) const;

 private:
  GridSize n_;
  ComplexMatrix entries_;
};

/// exp(2 pi i t / N) with t reduced mod N first, so integer powers of the
/// primitive root are exact on the lattice of residues.
Complex root_of_unity(GridSize n, long t);

/// Entry (k, j) = exp(-2 pi i j k / N).
CyclicOperator dft_matrix(GridSize n);
/// F_N^{-1} = conj(F_N) / N.
CyclicOperator inverse_dft_matrix(GridSize n);
/// F_N^p for any integer p, using F^4 = N^2.
CyclicOperator dft_power(GridSize n, int p);

GridFunction dft(const GridFunction& f);
GridFunction idft(const GridFunction& f);

/// P_a f (complement = false) or P_a^perp f (complement = true).
GridFunction project_interval(const GridFunction& f, const DiscreteInterval& interval,
                              bool complement);

/// delta^p: (delta^p f)(x) = f(x + p).
CyclicOperator shift_operator(GridSize n, int p);
/// Multiplication by exp(2 pi i p x / N).
CyclicOperator modulation_operator(GridSize n, int p);

}  // namespace rdft

#endif  // RDFT_DFT_HPP
