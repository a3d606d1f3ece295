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

#include "rdft/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rdft/error.hpp"
#include "rdft/qseries.hpp"

namespace rdft {

namespace {

// The rank decisions need ~15 more digits than the smallest singular values
// of these DFT submatrices leave in double precision.
using WideReal = long double;
using WideComplex = std::complex<WideReal>;
using WideMatrix = Eigen::Matrix<WideComplex, Eigen::Dynamic, Eigen::Dynamic>;
static_assert(std::numeric_limits<WideReal>::digits >= 64,
              "rank oracle needs an extended-precision long double");
constexpr WideReal kRankThreshold = 1e-17L;

// exp(i pi t / N) with t reduced mod 2N.
Complex half_root(GridSize n, long t) {
  const long period = 2L * n.value();
  long r = t % period;
  if (r < 0) r += period;
  if (r % 2 == 0) return root_of_unity(n, r / 2);
  return std::polar(1.0, std::numbers::pi * double(r) / n.value());
}

// (-i)^s = xi^{-Ns/4}, exact.
Complex minus_i_power(int s) {
  switch (((s % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double sin_pi_ratio(long t, GridSize n) {
  // t in 1..N-1 here; fold so that sin(pi t/N) and sin(pi (N-t)/N) agree.
  const long folded = std::min(t, n.value() - t);
  return std::sin(std::numbers::pi * double(folded) / n.value());
}

struct Sizes {
  int r;
  int s;
};

Sizes check_basis_range(GridSize n, int a) {
  DiscreteInterval interval(n, a);
  (void)interval;
  const int r = 4 * a + 2 - n.value();
  if (r < 1) fail(ErrorCode::kInvalidArgument, "psi_a requires 4a+2-N >= 1");
  return {r, n.value() - 2 * a - 1};
}

}  // namespace

std::vector<int> SignedRange::indices(GridSize n) const {
  std::vector<int> out;
  for (int y = first; y <= last; ++y) out.push_back(n.canonical(y));
  return out;
}

GridFunction psi(GridSize n, int a) {
  const Sizes sz = check_basis_range(n, a);
  return GridFunction::on_interval(DiscreteInterval(n, a), [&](int x) {
    double product = 1.0;
    for (int k = 1; k <= sz.s; ++k) product *= sin_pi_ratio(a + k - x, n);
    return half_root(n, long(sz.r - 1) * x) * product;
  });
}

GridFunction psi_q_pochhammer_scaled(GridSize n, int a, Complex prefactor_base) {
  const Sizes sz = check_basis_range(n, a);
  const Complex prefactor = std::pow(prefactor_base, sz.s) * minus_i_power(sz.s);
  return GridFunction::on_interval(DiscreteInterval(n, a), [&](int x) {
    Complex product = 1.0;
    for (int j = 0; j < sz.s; ++j) product *= 1.0 - root_of_unity(n, a + 1 - x + j);
    return prefactor * root_of_unity(n, long(a) * x) * product;
  });
}

GridFunction psi_q_pochhammer(GridSize n, int a) {
  return psi_q_pochhammer_scaled(n, a, 1.0 / Complex(0.0, -2.0));
}

GridFunction basis_element(GridSize n, int a, int k) {
  const Sizes sz = check_basis_range(n, a);
  require(k >= 0 && k < sz.r, "basis index must satisfy 0 <= k < 4a+2-N");
  GridFunction f = psi(n, a);
  for (int x = 0; x < n.value(); ++x) f[x] *= root_of_unity(n, -long(k) * x);
  return f;
}

ExtremalBasis extremal_basis(GridSize n, int a) {
  const Sizes sz = check_basis_range(n, a);
  ExtremalBasis out{n, a, sz.r, psi(n, a), {}};
  for (int k = 0; k < sz.r; ++k) out.basis.push_back(basis_element(n, a, k));
  return out;
}

SignedRange inverse_transform_support(GridSize n, int a, int k) {
  const Sizes sz = check_basis_range(n, a);
  return {-a + k, a + 1 - sz.r + k};
}

SignedRange forward_transform_support(GridSize n, int a, int k) {
  const Sizes sz = check_basis_range(n, a);
  return {sz.r - 1 - a - k, a - k};
}

GridFunction psi_inverse_transform_closed_form(GridSize n, int a, int k) {
  const Sizes sz = check_basis_range(n, a);
  require(k >= 0 && k < sz.r, "basis index must satisfy 0 <= k < 4a+2-N");
  // C = (-2i)^{-s} xi^{-Ns/4}
  const Complex scale =
      std::pow(1.0 / Complex(0.0, -2.0), sz.s) * minus_i_power(sz.s);
  GridFunction u(n);
  const SignedRange range = inverse_transform_support(n, a, k);
  for (int y = range.first; y <= range.last; ++y) {
    const int t = y + a - k;
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    const long exponent = long(a + 1) * t + long(t) * (t - 1) / 2;
    u[n.canonical(y)] =
        scale * sign * root_of_unity(n, exponent) * gaussian_binomial_at_root(n, sz.s, t);
  }
  return u;
}

int dft_submatrix_kernel_dimension(GridSize n, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
  const int width = static_cast<int>(cols.size());
  if (rows.empty() || width == 0) return width;
  WideMatrix m(rows.size(), width);
  const WideReal two_pi = 2 * std::numbers::pi_v<WideReal>;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int c = 0; c < width; ++c) {
      const long residue = (long(rows[i]) * cols[c]) % n.value();
      const WideReal angle = -two_pi * WideReal(residue) / n.value();
      m(i, c) = WideComplex(std::cos(angle), std::sin(angle));
    }
  }
  const Eigen::JacobiSVD<WideMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  const WideReal cutoff = kRankThreshold * sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  return width - rank;
}

int dim_ca_rank_oracle(GridSize n, int a) {
  const DiscreteInterval interval(n, a);
  return dft_submatrix_kernel_dimension(n, interval.complement_indices(), interval.indices());
}

int dim_ca_formula(GridSize n, int a) {
  DiscreteInterval interval(n, a);
  (void)interval;
  return std::max(0, 4 * a + 2 - n.value());
}

bool is_extremal_support(const GridFunction& f) {
  const std::vector<int> s = support(f);
  const std::vector<int> s_hat = support(dft(f));
  std::vector<bool> in_hat(f.size(), false);
  for (int k : s_hat) in_hat[k] = true;
  std::vector<int> rows;
  for (int k = 0; k < f.size(); ++k) {
    if (!in_hat[k]) rows.push_back(k);
  }
  return dft_submatrix_kernel_dimension(f.grid(), rows, s) == 1;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

UncertaintyReport uncertainty_check(const GridFunction& f) {
  UncertaintyReport report{};
  report.support_size = static_cast<int>(support(f).size());
  report.transform_support_size = static_cast<int>(support(dft(f)).size());
  const int n = f.grid().value();
  report.donoho_stark = report.support_size * report.transform_support_size >= n;
  if (is_prime(n)) report.tao = report.support_size + report.transform_support_size >= n + 1;
  return report;
}

}  // namespace rdft
