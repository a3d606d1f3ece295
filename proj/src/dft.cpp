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

#include "rdft/dft.hpp"

#include <cmath>
#include <numbers>

#include "rdft/error.hpp"

namespace rdft {

CyclicOperator::CyclicOperator(GridSize n, ComplexMatrix entries)
    : n_(n), entries_(std::move(entries)) {
  require(entries_.rows() == n.value() && entries_.cols() == n.value(),
          "operator shape does not match N");
}

CyclicOperator CyclicOperator::identity(GridSize n) {
  return CyclicOperator(n, ComplexMatrix::Identity(n, n));
}

CyclicOperator CyclicOperator::zero(GridSize n) {
  return CyclicOperator(n, ComplexMatrix::Zero(n, n));
}

GridFunction CyclicOperator::apply(const GridFunction& f) const {
  require(f.grid() == n_, "operator and function live on different grids");
  return GridFunction(n_, entries_ * f.values());
}

CyclicOperator CyclicOperator::operator*(const CyclicOperator& rhs) const {
  require(rhs.n_ == n_, "operator product across different grids");
  return CyclicOperator(n_, entries_ * rhs.entries_);
}

CyclicOperator CyclicOperator::operator+(const CyclicOperator& rhs) const {
  require(rhs.n_ == n_, "operator sum across different grids");
  return CyclicOperator(n_, entries_ + rhs.entries_);
}

CyclicOperator CyclicOperator::operator-(const CyclicOperator& rhs) const {
  require(rhs.n_ == n_, "operator difference across different grids");
  return CyclicOperator(n_, entries_ - rhs.entries_);
}

CyclicOperator CyclicOperator::scaled(Complex factor) const {
  return CyclicOperator(n_, entries_ * factor);
}

Complex root_of_unity(GridSize n, long t) {
  const int r = n.canonical(t);
  if (r == 0) return 1.0;
  if (2 * r == n.value()) return -1.0;
  if (4 * r == n.value()) return Complex(0.0, 1.0);
  if (4 * r == 3 * n.value()) return Complex(0.0, -1.0);
  const double angle = 2.0 * std::numbers::pi * r / n.value();
  return std::polar(1.0, angle);
}

CyclicOperator dft_matrix(GridSize n) {
  const int size = n.value();
  ComplexMatrix m(size, size);
  for (int k = 0; k < size; ++k) {
    for (int j = 0; j < size; ++j) m(k, j) = root_of_unity(n, -static_cast<long>(j) * k);
  }
  return CyclicOperator(n, std::move(m));
}

CyclicOperator inverse_dft_matrix(GridSize n) {
  const int size = n.value();
  ComplexMatrix m(size, size);
  for (int k = 0; k < size; ++k) {
    for (int j = 0; j < size; ++j) m(k, j) = root_of_unity(n, static_cast<long>(j) * k) / double(size);
  }
  return CyclicOperator(n, std::move(m));
}

CyclicOperator dft_power(GridSize n, int p) {
  const int q = ((p % 4) + 4) % 4;
  // F^p = F^q * N^{2 (p - q) / 4}
  const double scale = std::pow(double(n.value()), (p - q) / 2);
  CyclicOperator result = CyclicOperator::identity(n);
  const CyclicOperator f = dft_matrix(n);
  for (int i = 0; i < q; ++i) result = result * f;
  return result.scaled(scale);
}

GridFunction dft(const GridFunction& f) { return dft_matrix(f.grid()).apply(f); }

GridFunction idft(const GridFunction& f) { return inverse_dft_matrix(f.grid()).apply(f); }

GridFunction project_interval(const GridFunction& f, const DiscreteInterval& interval,
                              bool complement) {
  require(f.grid() == interval.grid(), "projection onto an interval of a different grid");
  GridFunction out = f;
  for (int k = 0; k < f.size(); ++k) {
    if (interval.contains(k) == complement) out[k] = 0.0;
  }
  return out;
}

CyclicOperator shift_operator(GridSize n, int p) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < n.value(); ++x) m(x, n.canonical(long(x) + p)) += 1.0;
  return CyclicOperator(n, std::move(m));
}

CyclicOperator modulation_operator(GridSize n, int p) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < n.value(); ++x) m(x, x) = root_of_unity(n, long(p) * x);
  return CyclicOperator(n, std::move(m));
}

}  // namespace rdft
