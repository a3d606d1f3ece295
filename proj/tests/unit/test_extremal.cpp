// Copyright 2026 The rdft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "rdft/error.hpp"
#include "rdft/extremal.hpp"
#include "rdft/qseries.hpp"

using namespace rdft;

namespace {

// Sine product with its phase, long double.
ComplexVector psi_oracle(int n, int a) {
  const int r = 4 * a + 2 - n;
  ComplexVector out = ComplexVector::Zero(n);
  for (int x = -a; x <= a; ++x) {
    long double product = 1.0L;
    for (int k = 1; k <= n - 2 * a - 1; ++k) product *= std::sin(oracle::kPi * (a + k - x) / n);
    const long double phase = oracle::kPi * (r - 1) * x / n;
    out[oracle::canonical(x, n)] = Complex(double(product * std::cos(phase)), double(product * std::sin(phase)));
  }
  return out;
}

ComplexVector modulate(const ComplexVector& f, int k) {
  const int n = static_cast<int>(f.size());
  ComplexVector out(n);
  for (int x = 0; x < n; ++x) out[x] = f[x] * Complex(oracle::forward_root(static_cast<long>(k) * x, n));
  return out;
}

double relative(const ComplexVector& a, const ComplexVector& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("empty products") {
    CHECK(q_pochhammer(Complex(0.3, 0.2), Complex(0.1, 0.9), 0) == Complex(1.0));
    CHECK(gaussian_binomial(Complex(0.5, 0.5), 0, 0) == Complex(1.0));
    CHECK(gaussian_binomial_at_root(GridSize(7), 0, 0) == Complex(1.0));
    CHECK(gaussian_binomial(Complex(0.5, 0.5), 3, 4) == Complex(0.0));
  }

  TEST_CASE("Gaussian binomials match the q-Pascal recursion") {
    std::mt19937_64 rng(oracle::kSeed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 20; ++trial) {
      const Complex q = std::polar(0.9, angle(rng));
      for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
          const Complex expected = oracle::gaussian_binomial(q, n, k);
          REQUIRE(std::abs(gaussian_binomial(q, n, k) - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
        }
      }
    }
    for (int n_grid = 2; n_grid <= 16; ++n_grid) {
      const Complex xi(oracle::forward_root(-1, n_grid));
      for (int n = 0; n < n_grid; ++n) {
        for (int k = 0; k <= n; ++k) {
          const Complex expected = oracle::gaussian_binomial(xi, n, k);
          REQUIRE(std::abs(gaussian_binomial_at_root(GridSize(n_grid), n, k) - expected) <=
                  1e-10 * std::max(1.0, std::abs(expected)));
        }
      }
    }
    CHECK_THROWS_AS(gaussian_binomial_at_root(GridSize(5), 5, 2), Error);
  }

  TEST_CASE("transform of the q-binomial sequence is a q-Pochhammer symbol") {
    std::mt19937_64 rng(oracle::kSeed + 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int n_grid = 2; n_grid <= 16; ++n_grid) {
      const GridSize grid(n_grid);
      const Complex xi(oracle::forward_root(-1, n_grid));
      for (int n = 0; n < n_grid; ++n) {
        const Complex z = std::polar(1.0, angle(rng));
        ComplexVector g = ComplexVector::Zero(n_grid);
        for (int y = 0; y <= n; ++y) {
          g[y] = std::pow(-z, y) * std::pow(xi, y * (y - 1) / 2) * gaussian_binomial_at_root(grid, n, y);
        }
        const ComplexVector hat = oracle::dft(g);
        for (int x = 0; x < n_grid; ++x) {
          const Complex expected = q_pochhammer(z * Complex(oracle::forward_root(x, n_grid)), xi, n);
          REQUIRE(std::abs(hat[x] - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
        }
      }
    }
  }
}

TEST_SUITE("extremal") {
  TEST_CASE("psi for N = 5, a = 1") {
    const GridFunction p = psi(GridSize(5), 1);
    CHECK(std::abs(p.at(-1) - std::sin(3 * M_PI / 5) * std::sin(4 * M_PI / 5)) <= 1e-15);
    CHECK(std::abs(p.at(0) - std::sin(2 * M_PI / 5) * std::sin(3 * M_PI / 5)) <= 1e-15);
    CHECK(std::abs(p.at(1) - std::sin(M_PI / 5) * std::sin(2 * M_PI / 5)) <= 1e-15);
    CHECK(std::abs(p.at(-1) - 0.5590169943749475) <= 1e-12);
    CHECK(std::abs(p.at(0) - 0.9045084971874737) <= 1e-12);
    CHECK(std::abs(p.at(2)) == 0.0);
  }

  TEST_CASE("psi requires a nonzero C_a") {
    CHECK_THROWS_AS(psi(GridSize(8), 1), Error);
    CHECK_THROWS_AS(psi(GridSize(6), 1), Error);
    CHECK_NOTHROW(psi(GridSize(6), 2));
  }

  TEST_CASE("psi: sine product, q-Pochhammer form and oracle agree") {
    for (int n = 2; n <= 64; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        if (4 * a + 2 - n < 1) continue;
        const GridSize grid(n);
        const GridFunction p = psi(grid, a);
        const ComplexVector expected = psi_oracle(n, a);
        REQUIRE(relative(p.values(), expected) <= 1e-13);
        REQUIRE(relative(psi_q_pochhammer(grid, a).values(), p.values()) <= 1e-12);
        const std::vector<int> s = support(p);
        REQUIRE(static_cast<int>(s.size()) == 2 * a + 1);
      }
    }
  }

  TEST_CASE("the printed prefactor differs by (-4)^s") {
    for (int n : {5, 9, 12}) {
      const int a = (n + 2) / 4 + 1;
      if (2 * a + 1 > n) continue;
      const GridSize grid(n);
      const int s = n - 2 * a - 1;
      const GridFunction printed = psi_q_pochhammer_scaled(grid, a, Complex(0.0, -2.0));
      const GridFunction corrected = psi(grid, a);
      const Complex ratio = printed.at(0) / corrected.at(0);
      CHECK(std::abs(ratio - std::pow(-4.0, s)) <= 1e-9 * std::pow(4.0, s));
    }
  }

  TEST_CASE("transform supports and closed-form inverse transform") {
    for (int n = 2; n <= 32; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const int r = 4 * a + 2 - n;
        if (r < 1) continue;
        const GridSize grid(n);
        const ComplexVector base = psi(grid, a).values();
        for (int k = 0; k < r; ++k) {
          const ComplexVector f = modulate(base, k);
          REQUIRE(relative(basis_element(grid, a, k).values(), f) <= 1e-13);
          const ComplexVector inverse = oracle::idft(f);
          const ComplexVector forward = oracle::dft(f);
          const SignedRange inv = inverse_transform_support(grid, a, k);
          const SignedRange fwd = forward_transform_support(grid, a, k);
          REQUIRE(inv.first == -a + k);
          REQUIRE(inv.last == a + 1 - r + k);
          REQUIRE(fwd.first == r - 1 - a - k);
          REQUIRE(fwd.last == a - k);
          REQUIRE(oracle::support_is_range(inverse, inv.first, inv.last));
          REQUIRE(oracle::support_is_range(forward, fwd.first, fwd.last));
          REQUIRE(relative(psi_inverse_transform_closed_form(grid, a, k).values(), inverse) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("closed form for N = 9, a = 2, every k") {
    const GridSize grid(9);
    for (int k = 0; k < 1; ++k) {
      const ComplexVector inverse = idft(basis_element(grid, 2, k)).values();
      CHECK(relative(psi_inverse_transform_closed_form(grid, 2, k).values(), inverse) <= 1e-10);
    }
    const GridSize ten(10);
    for (int k = 0; k < 4; ++k) {
      const ComplexVector inverse = oracle::idft(basis_element(ten, 3, k).values());
      CHECK(relative(psi_inverse_transform_closed_form(ten, 3, k).values(), inverse) <= 1e-10);
    }
  }

  TEST_CASE("dimension of C_a") {
    CHECK(dim_ca_rank_oracle(GridSize(5), 1) == 1);
    CHECK(dim_ca_rank_oracle(GridSize(8), 1) == 0);
    CHECK(dim_ca_rank_oracle(GridSize(13), 6) == 13);
    for (int n = 2; n <= 24; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const int expected = std::max(0, 4 * a + 2 - n);
        REQUIRE(dim_ca_formula(GridSize(n), a) == expected);
        REQUIRE(dim_ca_rank_oracle(GridSize(n), a) == expected);
        REQUIRE(oracle::kernel_dimension(oracle::dft_submatrix(n, oracle::outside(n, a), oracle::inside(n, a)), 1e-9) ==
                expected);
      }
    }
  }

  TEST_CASE("rank oracle still sees a genuinely rank-deficient matrix") {
    // Repeating a column forces a kernel vector.
    const GridSize grid(40);
    const std::vector<int> rows{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(dft_submatrix_kernel_dimension(grid, rows, {0, 5, 5, 7}) == 1);
    CHECK(dft_submatrix_kernel_dimension(grid, rows, {0, 5, 6, 7}) == 0);
    CHECK(dft_submatrix_kernel_dimension(grid, {}, {0, 1, 2}) == 3);
  }

  TEST_CASE("modulated psi span C_a") {
    for (int n = 3; n <= 24; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const int r = 4 * a + 2 - n;
        if (r < 1) continue;
        const ExtremalBasis basis = extremal_basis(GridSize(n), a);
        REQUIRE(basis.r == r);
        REQUIRE(static_cast<int>(basis.basis.size()) == r);
        ComplexMatrix span(n, r);
        for (int k = 0; k < r; ++k) span.col(k) = basis.basis[k].values();
        const ComplexMatrix q = span.householderQr().householderQ() * ComplexMatrix::Identity(n, r);
        const ComplexMatrix reference = oracle::ca_basis(n, a);
        REQUIRE(reference.cols() == r);
        const ComplexMatrix p1 = q * q.adjoint();
        const ComplexMatrix p2 = reference * reference.adjoint();
        REQUIRE((p1 - p2).norm() <= 1e-9);
        Eigen::JacobiSVD<ComplexMatrix> svd(span);
        REQUIRE(svd.singularValues().minCoeff() > 1e-8 * svd.singularValues().maxCoeff());
      }
    }
  }

  TEST_CASE("extremal support") {
    for (int n = 5; n <= 13; ++n) {
      const int m = (n + 2) / 4;
      const int r = 4 * m + 2 - n;
      if (r < 1 || 2 * m + 1 > n) continue;
      for (int j = 0; j < n; ++j) {
        const GridFunction f(GridSize(n), modulate(psi(GridSize(n), m).values(), j));
        REQUIRE(is_extremal_support(f));
      }
    }
    CHECK(is_extremal_support(GridFunction::delta(GridSize(7), 0)));
    GridFunction two = GridFunction::delta(GridSize(5), 0);
    two[1] = 1.0;
    // oracle: supp = {0, 1}, transform has full support, so the space is 2-dimensional
    const ComplexVector hat = oracle::dft(two.values());
    CHECK(oracle::support(hat).size() == 5u);
    CHECK_FALSE(is_extremal_support(two));
  }

  TEST_CASE("uncertainty principles") {
    const UncertaintyReport sharp = uncertainty_check(psi(GridSize(5), 1));
    CHECK(sharp.support_size == 3);
    CHECK(sharp.transform_support_size == 3);
    CHECK(sharp.donoho_stark);
    REQUIRE(sharp.tao.has_value());
    CHECK(*sharp.tao);
    CHECK(sharp.support_size + sharp.transform_support_size == 6);

    const UncertaintyReport delta = uncertainty_check(GridFunction::delta(GridSize(12), 3));
    CHECK(delta.support_size * delta.transform_support_size == 12);
    CHECK_FALSE(delta.tao.has_value());

    std::mt19937_64 rng(oracle::kSeed + 9);
    for (int n = 2; n <= 30; ++n) {
      const UncertaintyReport any = uncertainty_check(GridFunction(GridSize(n), oracle::random_vector(n, rng)));
      CHECK(any.donoho_stark);
    }
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
  }
}
