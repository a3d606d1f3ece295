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

// Index arithmetic on Z/NZ, the discrete interval [-a,a] and complex-valued
// functions on the cyclic group.
//
// Storage is always canonical (index k holds f(k), 0 <= k < N). Signed
// indices are only accepted at API boundaries and mapped through x mod N.

#ifndef RDFT_ZMOD_HPP
#define RDFT_ZMOD_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace rdft {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Relative threshold below which an entry is treated as outside the support.
inline constexpr double kSupportTolerance = 1e-10;

/// Modulus of the cyclic group, N >= 2.
class GridSize {
 public:
  explicit GridSize(int n);

  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }

  /// x mod N in {0, ..., N-1}.
  int canonical(long x) const noexcept;
  /// Representative of k in {-floor(N/2), ..., ceil(N/2)-1}.
  int signed_index(int k) const noexcept;

  friend bool operator==(GridSize, GridSize) = default;

 private:
  int n_;
};

/// The discrete interval [-a,a] inside Z/NZ, 0 <= a <= (N-1)/2.
class DiscreteInterval {
 public:
  DiscreteInterval(GridSize n, int a);

  GridSize grid() const noexcept { return n_; }
  int half_width() const noexcept { return a_; }

  bool contains(long x) const noexcept;
  int size() const noexcept { return 2 * a_ + 1; }
  int complement_size() const noexcept { return n_.value() - size(); }

  /// Canonical indices of -a, ..., a in signed order.
  std::vector<int> indices() const;
  /// Canonical indices a+1, ..., N-a-1 (the complementary arc).
  std::vector<int> complement_indices() const;

 private:
  GridSize n_;
  int a_;
};

/// Complex function on Z/NZ.
class GridFunction {
 public:
  explicit GridFunction(GridSize n);
  GridFunction(GridSize n, ComplexVector values);

  /// Builds f from a rule evaluated at signed x in [-a,a]; zero elsewhere.
  static GridFunction on_interval(const DiscreteInterval& interval,
                                  const std::function<Complex(int)>& rule);
  static GridFunction delta(GridSize n, long x);
  static GridFunction constant(GridSize n, Complex value);

  GridSize grid() const noexcept { return n_; }
  int size() const noexcept { return n_.value(); }

  Complex operator[](int k) const { return values_[k]; }
  Complex& operator[](int k) { return values_[k]; }
  /// Value at an arbitrary (signed) integer point.
  Complex at(long x) const { return values_[n_.canonical(x)]; }

  const ComplexVector& values() const noexcept { return values_; }
  ComplexVector& values() noexcept { return values_; }

  double max_abs() const;
  double norm() const { return values_.norm(); }
  bool is_zero() const { return max_abs() == 0.0; }

 private:
  GridSize n_;
  ComplexVector values_;
};

/// Canonical indices with |f(k)| > tol * max |f|. Throws on the zero function.
std::vector<int> support(const GridFunction& f, double tol = kSupportTolerance);

/// sum_k f(k) conj(g(k)).
Complex inner_product(const GridFunction& f, const GridFunction& g);

}  // namespace rdft

#endif  // RDFT_ZMOD_HPP
