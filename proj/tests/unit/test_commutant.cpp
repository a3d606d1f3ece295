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
#include "rdft/commutant.hpp"
#include "rdft/error.hpp"

using namespace rdft;

namespace {

double relative_commutator(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  // J1 vanishes for N = 2, so guard the scale.
  const double scale = lhs.norm() * rhs.norm();
  const double commutator = (lhs * rhs - rhs * lhs).norm();
  return scale == 0.0 ? commutator : commutator / scale;
}

}  // namespace

TEST_SUITE("commutant") {
  TEST_CASE("J0 layout for N = 4") {
    const ComplexMatrix j0 = build_j0(GridSize(4)).entries();
    CHECK(j0(0, 0) == Complex(2.0));
    CHECK(j0(1, 1) == Complex(0.0));
    CHECK(j0(2, 2) == Complex(-2.0));
    CHECK(j0(3, 3) == Complex(0.0));
    CHECK(j0(0, 1) == Complex(1.0));
    CHECK(j0(0, 3) == Complex(1.0));
    CHECK(j0(3, 0) == Complex(1.0));
    CHECK(j0(0, 2) == Complex(0.0));
    CHECK((j0 - j0.transpose()).norm() == 0.0);
  }

  TEST_CASE("J1 layout") {
    for (int n : {4, 7, 12}) {
      const ComplexMatrix j1 = build_j1(GridSize(n)).entries();
      for (int k = 0; k < n; ++k) CHECK(j1(k, k) == Complex(0.0));
      for (int k = 1; k < n; ++k) {
        const double expected = std::cos(oracle::kPi * (2.0L * k - 1) / n);
        CHECK(std::abs(j1(k - 1, k) - expected) <= 1e-15);
      }
      CHECK(std::abs(j1(0, n - 1) - double(std::cos(oracle::kPi * (2.0L * n - 1) / n))) <= 1e-15);
      CHECK((j1 - j1.transpose()).norm() == 0.0);
    }
    CHECK(std::abs(build_j1(GridSize(4))(0, 1) - std::sqrt(2.0) / 2) <= 1e-16);
  }

  TEST_CASE("J0 and J1 commute with F") {
    for (int n = 2; n <= 40; ++n) {
      const ComplexMatrix f = oracle::dft_matrix(n);
      CHECK(relative_commutator(build_j0(GridSize(n)).entries(), f) <= 1e-10);
      CHECK(relative_commutator(build_j1(GridSize(n)).entries(), f) <= 1e-10);
    }
  }

  TEST_CASE("J commutes with F for every a") {
    for (int n = 2; n <= 64; ++n) {
      const ComplexMatrix f = oracle::dft_matrix(n);
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const CyclicOperator j = build_j(CommutantSpec(GridSize(n), a));
        REQUIRE(relative_commutator(j.entries(), f) <= 1e-12);
      }
    }
  }

  TEST_CASE("matrix and coefficient forms agree with the written-out oracle") {
    for (int n = 2; n <= 48; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const CommutantSpec spec(GridSize(n), a);
        const ComplexMatrix j = build_j(spec).entries();
        const ComplexMatrix from_coefficients = build_j_from_coefficients(spec).entries();
        const Eigen::MatrixXd reference = oracle::j_matrix(n, a);
        REQUIRE((j - from_coefficients).cwiseAbs().maxCoeff() <= 1e-14);
        REQUIRE((j.real() - reference).cwiseAbs().maxCoeff() <= 1e-14);
        REQUIRE(j.imag().cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }

  TEST_CASE("A vanishes exactly at a and -a-1") {
    const CommutantSpec example(GridSize(8), 2);
    CHECK(coefficient_a(example, 2) == 0.0);
    CHECK(coefficient_a(example, -3) == 0.0);
    CHECK(std::abs(coefficient_a(example, 0) - (std::cos(M_PI / 8) - std::cos(5 * M_PI / 8))) <= 1e-15);
    CHECK(std::abs(coefficient_b(example, 1) - (-2 * std::cos(5 * M_PI / 8) * std::cos(2 * M_PI / 8))) <= 1e-15);
    for (int n = 2; n <= 64; ++n) {
      for (int a = 0; 2 * a + 1 <= n; ++a) {
        const CommutantSpec spec(GridSize(n), a);
        REQUIRE(coefficient_a(spec, a) == 0.0);
        REQUIRE(coefficient_a(spec, -a - 1) == 0.0);
        const ComplexMatrix j = build_j(spec).entries();
        REQUIRE(j(a, GridSize(n).canonical(a + 1)) == Complex(0.0));
      }
    }
  }

  TEST_CASE("J preserves functions on the interval and on its complement") {
    std::mt19937_64 rng(oracle::kSeed);
    for (int n = 3; n <= 30; ++n) {
      for (int a = 0; 2 * a + 1 < n; ++a) {
        const GridSize grid(n);
        const DiscreteInterval interval(grid, a);
        const CyclicOperator j = build_j(CommutantSpec(grid, a));
        const GridFunction f(grid, oracle::random_vector(n, rng));
        const GridFunction inside = project_interval(f, interval, false);
        const GridFunction outside = project_interval(f, interval, true);
        const GridFunction leak_in = project_interval(j.apply(inside), interval, true);
        const GridFunction leak_out = project_interval(j.apply(outside), interval, false);
        REQUIRE(leak_in.max_abs() <= 1e-14 * f.max_abs());
        REQUIRE(leak_out.max_abs() <= 1e-14 * f.max_abs());
      }
    }
  }

  TEST_CASE("J1 expansion through shifts and modulations") {
    // J1 = e^{i pi/N}/2 (M delta + M^{-1} delta^{-1}) + e^{-i pi/N}/2 (M^{-1} delta + M delta^{-1})
    // with M the multiplication by exp(2 pi i x / N).
    for (int n = 2; n <= 24; ++n) {
      const GridSize grid(n);
      const CyclicOperator m = modulation_operator(grid, 1);
      const CyclicOperator m_inv = modulation_operator(grid, -1);
      const CyclicOperator up = shift_operator(grid, 1);
      const CyclicOperator down = shift_operator(grid, -1);
      const Complex half_root = 0.5 * std::polar(1.0, M_PI / n);
      const CyclicOperator expansion = (m * up + m_inv * down).scaled(half_root) +
                                       (m_inv * up + m * down).scaled(std::conj(half_root));
      CHECK((expansion.entries() - build_j1(grid).entries()).norm() <= 1e-13 * n);
    }
  }

  TEST_CASE("twisted J0") {
    for (int n : {5, 8, 11}) {
      const GridSize grid(n);
      const CyclicOperator f = dft_matrix(grid);
      const CyclicOperator f_inv = inverse_dft_matrix(grid);
      CHECK((build_twisted_j0(grid, 1.0).entries() - build_j0(grid).entries()).norm() <= 1e-12 * n);
      for (Complex lambda : {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)}) {
        const CyclicOperator twisted = build_twisted_j0(grid, lambda);
        const ComplexMatrix lhs = (f_inv * twisted * f).entries();
        CHECK((lhs - lambda * twisted.entries()).norm() <= 1e-10 * twisted.frobenius_norm());
      }
    }
    CHECK(build_twisted_j0(GridSize(8), -1.0).entries().cwiseAbs().maxCoeff() > 0.1);
    CHECK_THROWS_AS(build_twisted_j0(GridSize(8), 2.0), Error);
    CHECK_THROWS_AS(build_twisted_j0(GridSize(8), Complex(0.6, 0.8)), Error);
  }

  TEST_CASE("commutator norm") {
    const GridSize n(4);
    CHECK(commutator_norm(build_j0(n), build_j0(n)) == 0.0);
    CHECK(commutator_norm(shift_operator(n, 1), dft_matrix(n)) >= 0.1);
    CHECK(commutator_norm(CyclicOperator::zero(n), dft_matrix(n)) == 0.0);
    CHECK_THROWS_AS(commutator_norm(build_j0(n), build_j0(GridSize(5))), Error);
  }

  TEST_CASE("cosine helper is exact at the zeros") {
    for (int n = 2; n <= 64; n += 2) CHECK(cos_pi_ratio(n / 2, GridSize(n)) == 0.0);
    for (int n = 2; n <= 30; ++n) {
      for (long t = -3 * n; t <= 3 * n; ++t) {
        CHECK(std::abs(cos_pi_ratio(t, GridSize(n)) - double(std::cos(oracle::kPi * t / n))) <= 1e-15);
        CHECK(cos_pi_ratio(t, GridSize(n)) == cos_pi_ratio(-t, GridSize(n)));
      }
    }
  }
}
