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

#include "rdft/commutant.hpp"

#include <cmath>
#include <numbers>

#include "rdft/error.hpp"

namespace rdft {

double cos_pi_ratio(long t, GridSize n) {
  const long period = 2L * n.value();
  long r = t % period;
  if (r < 0) r += period;
  if (r > n.value()) r = period - r;  // cos is even: fold onto [0, N]
  if (2 * r == n.value()) return 0.0;
  if (2 * r > n.value()) return -std::cos(std::numbers::pi * double(n.value() - r) / n.value());
  return std::cos(std::numbers::pi * double(r) / n.value());
}

CommutantSpec::CommutantSpec(GridSize n_, int a_) : n(n_), a(a_) {
  DiscreteInterval check(n_, a_);
  (void)check;
}

double coefficient_a(const CommutantSpec& spec, long x) {
  return cos_pi_ratio(2 * x + 1, spec.n) - spec.coupling();
}

double coefficient_b(const CommutantSpec& spec, long x) {
  return -2.0 * spec.coupling() * cos_pi_ratio(2 * x, spec.n);
}

namespace {

// Symmetric periodic tridiagonal matrix with entry (x, x+1) = upper(x).
template <typename Upper, typename Diagonal>
CyclicOperator periodic_tridiagonal(GridSize n, Upper upper, Diagonal diagonal) {
  const int size = n.value();
  ComplexMatrix m = ComplexMatrix::Zero(size, size);
  for (int x = 0; x < size; ++x) {
    const int next = n.canonical(x + 1);
    m(x, x) += diagonal(x);
    m(x, next) += upper(x);
    m(next, x) += upper(x);
  }
  return CyclicOperator(n, std::move(m));
}

}  // namespace

CyclicOperator build_j0(GridSize n) {
  return periodic_tridiagonal(
      n, [](int) { return 1.0; }, [n](int x) { return 2.0 * cos_pi_ratio(2L * x, n); });
}

CyclicOperator build_j1(GridSize n) {
  // a_{x+1} = cos(pi (2x + 1) / N)
  return periodic_tridiagonal(
      n, [n](int x) { return cos_pi_ratio(2L * x + 1, n); }, [](int) { return 0.0; });
}

CyclicOperator build_j(const CommutantSpec& spec) {
  return build_j1(spec.n) - build_j0(spec.n).scaled(spec.coupling());
}

CyclicOperator build_j_from_coefficients(const CommutantSpec& spec) {
  return periodic_tridiagonal(
      spec.n, [&spec](int x) { return coefficient_a(spec, x); },
      [&spec](int x) { return coefficient_b(spec, x); });
}

CyclicOperator build_twisted_j0(GridSize n, Complex lambda) {
  const Complex fourth = lambda * lambda * lambda * lambda;
  if (std::abs(fourth - 1.0) > 1e-12) {
    fail(ErrorCode::kInvalidArgument, "twisted J0 requires lambda^4 = 1");
  }
  const CyclicOperator shift = shift_operator(n, 1);
  CyclicOperator sum = CyclicOperator::zero(n);
  Complex weight = 1.0;
  for (int k = 0; k < 4; ++k) {
    sum = sum + (dft_power(n, -k) * shift * dft_power(n, k)).scaled(weight);
    weight /= lambda;
  }
  return sum;
}

double commutator_norm(const CyclicOperator& lhs, const CyclicOperator& rhs) {
  require(lhs.grid() == rhs.grid(), "commutator of operators on different grids");
  const double scale = lhs.frobenius_norm() * rhs.frobenius_norm();
  if (scale == 0.0) return 0.0;
  const ComplexMatrix c = lhs.entries() * rhs.entries() - rhs.entries() * lhs.entries();
  return c.norm() / scale;
}

}  // namespace rdft
