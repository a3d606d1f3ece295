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
#include "rdft/dft.hpp"
#include "rdft/error.hpp"
#include "rdft/extremal.hpp"

using namespace rdft;

TEST_SUITE("zmod") {
  TEST_CASE("grid size rejects N below 2") {
    CHECK_THROWS_AS(GridSize(1), Error);
    CHECK_THROWS_AS(GridSize(0), Error);
    CHECK_NOTHROW(GridSize(2));
  }

  TEST_CASE("interval membership with wraparound") {
    const GridSize n(9);
    const DiscreteInterval interval(n, 3);
    CHECK(interval.contains(-3));
    CHECK_FALSE(interval.contains(4));
    CHECK(DiscreteInterval(GridSize(5), 2).contains(3));
    CHECK(interval.contains(9 + 2));
    CHECK_FALSE(interval.contains(-4));
  }

  TEST_CASE("interval rejects half-width beyond (N-1)/2") {
    CHECK_THROWS_AS(DiscreteInterval(GridSize(6), 3), Error);
    CHECK_THROWS_AS(DiscreteInterval(GridSize(6), -1), Error);
    CHECK_NOTHROW(DiscreteInterval(GridSize(7), 3));
  }

  TEST_CASE("interval and complement partition the grid") {
    for (int n = 2; n <= 40; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const DiscreteInterval interval{GridSize(n), a};
        std::vector<int> all = interval.indices();
        const std::vector<int> rest = interval.complement_indices();
        CHECK(static_cast<int>(all.size()) == 2 * a + 1);
        CHECK(static_cast<int>(rest.size()) == n - 2 * a - 1);
        all.insert(all.end(), rest.begin(), rest.end());
        std::sort(all.begin(), all.end());
        for (int k = 0; k < n; ++k) REQUIRE(all[k] == k);
      }
    }
  }

  TEST_CASE("signed and canonical indices round-trip") {
    for (int n = 2; n <= 33; ++n) {
      const GridSize grid(n);
      for (int x = -(n / 2); x <= (n + 1) / 2 - 1; ++x) CHECK(grid.signed_index(grid.canonical(x)) == x);
    }
  }

  TEST_CASE("support of simple functions") {
    const GridSize n(7);
    CHECK(support(GridFunction::delta(n, 0)) == std::vector<int>{0});
    CHECK(support(GridFunction::constant(n, 1.0)).size() == 7u);
    CHECK_THROWS_WITH(support(GridFunction(n)), doctest::Contains("zero function has no support"));
    CHECK(support(psi(GridSize(5), 1)) == std::vector<int>{0, 1, 4});
  }

  TEST_CASE("inner product") {
    const GridSize n(4);
    CHECK(std::abs(inner_product(GridFunction::delta(n, 0), GridFunction::delta(n, 0)) - 1.0) == 0.0);
    CHECK(std::abs(inner_product(GridFunction::constant(n, 1.0), GridFunction::constant(n, 1.0)) - 4.0) == 0.0);
    CHECK(std::abs(inner_product(GridFunction::delta(n, 1), GridFunction::delta(n, 2))) == 0.0);
    CHECK_THROWS_AS(inner_product(GridFunction(n), GridFunction(GridSize(5))), Error);
    // conjugate-linear in the second slot
    GridFunction f = GridFunction::delta(n, 0);
    GridFunction g = GridFunction::delta(n, 0);
    g[0] = Complex(0.0, 1.0);
    CHECK(std::abs(inner_product(f, g) - Complex(0.0, -1.0)) == 0.0);
  }
}

TEST_SUITE("dft") {
  TEST_CASE("DFT matrix agrees with direct-sum oracle") {
    for (int n : {2, 3, 4, 5, 8, 13, 32, 64}) {
      const double err = (dft_matrix(GridSize(n)).entries() - oracle::dft_matrix(n)).cwiseAbs().maxCoeff();
      CHECK(err <= 1e-14);
    }
    const ComplexMatrix two = dft_matrix(GridSize(2)).entries();
    CHECK(two(0, 0) == Complex(1.0));
    CHECK(two(1, 1) == Complex(-1.0));
  }

  TEST_CASE("delta and constant transform into each other") {
    const GridSize n(4);
    const GridFunction hat = dft(GridFunction::delta(n, 0));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(hat[k] - 1.0) <= 1e-15);
    const GridFunction back = dft(GridFunction::constant(n, 1.0));
    CHECK(std::abs(back[0] - 4.0) <= 1e-14);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(back[k]) <= 1e-14);
    const GridFunction one = idft(GridFunction(n, ComplexVector::Unit(4, 0) * 4.0));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(one[k] - 1.0) <= 1e-15);
  }

  TEST_CASE("random round trips and Plancherel") {
    std::mt19937_64 rng(oracle::kSeed);
    for (int n = 2; n <= 64; ++n) {
      const GridSize grid(n);
      const GridFunction f(grid, oracle::random_vector(n, rng));
      const GridFunction g(grid, oracle::random_vector(n, rng));
      const GridFunction hat = dft(f);
      CHECK((hat.values() - oracle::dft(f.values())).norm() <= 1e-12 * hat.norm());
      CHECK((idft(hat).values() - f.values()).norm() <= 1e-12 * f.norm());
      const Complex lhs = inner_product(hat, dft(g));
      const Complex rhs = double(n) * inner_product(f, g);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs) + 1e-10 * n * f.norm() * g.norm());
    }
  }

  TEST_CASE("F^2 reflects and F^4 is N^2 times identity") {
    std::mt19937_64 rng(oracle::kSeed + 1);
    for (int n = 2; n <= 64; n += 3) {
      const GridSize grid(n);
      const ComplexMatrix f4 = dft_power(grid, 4).entries();
      const ComplexMatrix target = ComplexMatrix::Identity(n, n) * double(n) * double(n);
      CHECK((f4 - target).norm() <= 1e-10 * target.norm());
      const GridFunction f(grid, oracle::random_vector(n, rng));
      const GridFunction twice = dft(dft(f));
      for (int x = 0; x < n; ++x) CHECK(std::abs(twice[x] - double(n) * f.at(-x)) <= 1e-10 * n * f.max_abs());
    }
  }

  TEST_CASE("psi round trip through the transform") {
    const GridFunction p = psi(GridSize(5), 1);
    CHECK((idft(dft(p)).values() - p.values()).norm() <= 1e-14);
  }

  TEST_CASE("interval projections") {
    std::mt19937_64 rng(oracle::kSeed + 2);
    const GridSize n(10);
    const DiscreteInterval interval(n, 3);
    const GridFunction f(n, oracle::random_vector(10, rng));
    const GridFunction inside = project_interval(f, interval, false);
    const GridFunction outside = project_interval(f, interval, true);
    CHECK((inside.values() + outside.values() - f.values()).norm() == 0.0);
    CHECK((project_interval(inside, interval, false).values() - inside.values()).norm() == 0.0);
    const GridFunction ones = project_interval(GridFunction::constant(GridSize(6), 1.0),
                                               DiscreteInterval(GridSize(6), 1), false);
    CHECK(support(ones) == std::vector<int>{0, 1, 5});
  }

  TEST_CASE("shift and modulation conjugation") {
    for (int n : {3, 8, 11}) {
      const GridSize grid(n);
      const CyclicOperator f = dft_matrix(grid);
      const CyclicOperator f_inv = inverse_dft_matrix(grid);
      for (int p : {1, -1}) {
        // F^{-1} shift_p F = modulation by exp(-2 pi i p x / N)
        const ComplexMatrix lhs = (f_inv * shift_operator(grid, p) * f).entries();
        ComplexMatrix rhs = ComplexMatrix::Zero(n, n);
        for (int x = 0; x < n; ++x) rhs(x, x) = Complex(oracle::forward_root(static_cast<long>(p) * x, n));
        CHECK((lhs - rhs).norm() <= 1e-12 * n);
        CHECK((modulation_operator(grid, -p).entries() - rhs).norm() <= 1e-12 * n);
      }
    }
  }

  TEST_CASE("roots of unity are exact at quarter points") {
    const GridSize n(8);
    CHECK(root_of_unity(n, 2) == Complex(0.0, 1.0));
    CHECK(root_of_unity(n, 4) == Complex(-1.0, 0.0));
    CHECK(root_of_unity(n, 6) == Complex(0.0, -1.0));
    CHECK(root_of_unity(n, 8) == Complex(1.0, 0.0));
  }
}
