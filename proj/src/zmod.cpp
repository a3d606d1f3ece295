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

#include "rdft/zmod.hpp"

#include <string>

#include "rdft/error.hpp"

namespace rdft {

GridSize::GridSize(int n) : n_(n) {
  require(n >= 2, "grid size must satisfy N >= 2, got " + std::to_string(n));
}

int GridSize::canonical(long x) const noexcept {
  long r = x % n_;
  if (r < 0) r += n_;
  return static_cast<int>(r);
}

int GridSize::signed_index(int k) const noexcept {
  const int c = canonical(k);
  return c < (n_ + 1) / 2 ? c : c - n_;
}

DiscreteInterval::DiscreteInterval(GridSize n, int a) : n_(n), a_(a) {
  require(a >= 0 && 2 * a + 1 <= n.value(),
          "interval half-width must satisfy 0 <= a <= (N-1)/2, got N=" +
              std::to_string(n.value()) + " a=" + std::to_string(a));
}

bool DiscreteInterval::contains(long x) const noexcept {
  const int s = n_.canonical(x);
  return s <= a_ || s >= n_.value() - a_;
}

std::vector<int> DiscreteInterval::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (int x = -a_; x <= a_; ++x) out.push_back(n_.canonical(x));
  return out;
}

std::vector<int> DiscreteInterval::complement_indices() const {
  std::vector<int> out;
  out.reserve(complement_size());
  for (int k = a_ + 1; k <= n_.value() - a_ - 1; ++k) out.push_back(k);
  return out;
}

GridFunction::GridFunction(GridSize n) : n_(n), values_(ComplexVector::Zero(n.value())) {}

GridFunction::GridFunction(GridSize n, ComplexVector values) : n_(n), values_(std::move(values)) {
  require(values_.size() == n.value(), "grid function length " + std::to_string(values_.size()) +
                                           " does not match N=" + std::to_string(n.value()));
}

GridFunction GridFunction::on_interval(const DiscreteInterval& interval,
                                       const std::function<Complex(int)>& rule) {
  GridFunction f(interval.grid());
  const int a = interval.half_width();
  for (int x = -a; x <= a; ++x) f.values_[interval.grid().canonical(x)] = rule(x);
  return f;
}

GridFunction GridFunction::delta(GridSize n, long x) {
  GridFunction f(n);
  f.values_[n.canonical(x)] = 1.0;
  return f;
}

GridFunction GridFunction::constant(GridSize n, Complex value) {
  return GridFunction(n, ComplexVector::Constant(n.value(), value));
}

double GridFunction::max_abs() const {
  return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
}

std::vector<int> support(const GridFunction& f, double tol) {
  const double peak = f.max_abs();
  if (peak == 0.0) fail(ErrorCode::kDomain, "zero function has no support");
  std::vector<int> out;
  for (int k = 0; k < f.size(); ++k) {
    if (std::abs(f[k]) > tol * peak) out.push_back(k);
  }
  return out;
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  require(f.grid() == g.grid(), "inner product of functions on different grids (N=" +
                                    std::to_string(f.size()) + " vs N=" +
                                    std::to_string(g.size()) + ")");
  // Eigen's dot() conjugates its first argument.
  return g.values().dot(f.values());
}

}  // namespace rdft
