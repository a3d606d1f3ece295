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

#include "rdft/lowdim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "rdft/error.hpp"
#include "rdft/extremal.hpp"

namespace rdft {

namespace {

constexpr double kPi = std::numbers::pi;

void require_case(GridSize n, int d) {
  if (n.value() < 3) fail(ErrorCode::kInvalidArgument, "closed forms need N >= 3");
  if (lowdim_dimension(n) != d) {
    fail(ErrorCode::kInvalidArgument,
         "N = " + std::to_string(n.value()) + " is not in the residue class of case " +
             std::to_string(5 - d));
  }
}

// prod_{k=1}^{count} sin(pi (m + k - x) / N)
double sine_product(GridSize n, int m, int count, int x) {
  double product = 1.0;
  for (int k = 1; k <= count; ++k) product *= std::sin(kPi * (m + k - x) / n.value());
  return product;
}

ClosedFormEigenfunction make(GridSize n, std::string tag, FourierEigenvalue expected,
                             const std::function<Complex(int)>& rule) {
  const int m = lowdim_base(n);
  GridFunction f = GridFunction::on_interval(DiscreteInterval(n, m), rule);
  const GridFunction image = dft(f);
  const Complex rayleigh = inner_product(image, f) / (f.norm() * f.norm());
  FourierEigenvalue measured = FourierEigenvalue::kPlusRoot;
  double best = std::abs(fourier_eigenvalue_value(measured, n) - rayleigh);
  for (int c = 1; c < 4; ++c) {
    const auto which = static_cast<FourierEigenvalue>(c);
    const double distance = std::abs(fourier_eigenvalue_value(which, n) - rayleigh);
    if (distance < best) {
      best = distance;
      measured = which;
    }
  }
  const Complex value = fourier_eigenvalue_value(measured, n);
  const double residual = (image.values() - value * f.values()).norm() / f.norm();
  return {n, m, lowdim_dimension(n), std::move(tag), expected, measured, value, residual, std::move(f)};
}

}  // namespace

int lowdim_base(GridSize n) { return (n.value() + 2) / 4; }

int lowdim_dimension(GridSize n) { return 4 * lowdim_base(n) + 2 - n.value(); }

std::vector<ClosedFormEigenfunction> case1(GridSize n) {
  require_case(n, 1);
  const int m = lowdim_base(n);
  return {make(n, "case1", FourierEigenvalue::kPlusRoot,
               [=](int x) { return Complex(sine_product(n, m, 2 * m, x)); })};
}

std::vector<ClosedFormEigenfunction> case2(GridSize n) {
  require_case(n, 2);
  const int m = lowdim_base(n);
  const double w = kPi / n.value();
  return {
      make(n, "case2-even", FourierEigenvalue::kPlusRoot,
           [=](int x) { return Complex(std::cos(w * x) * sine_product(n, m, 2 * m - 1, x)); }),
      make(n, "case2-odd", FourierEigenvalue::kMinusIRoot,
           [=](int x) { return Complex(std::sin(w * x) * sine_product(n, m, 2 * m - 1, x)); }),
  };
}

double case3_constant(GridSize n, int sign) {
  const int m = lowdim_base(n);
  const double angle = 2.0 * kPi * m / n.value();
  return -2.0 * std::cos(angle) + sign * 2.0 * std::sin(angle);
}

std::vector<ClosedFormEigenfunction> case3(GridSize n) {
  require_case(n, 3);
  const int m = lowdim_base(n);
  const double w = 2.0 * kPi / n.value();
  auto even = [=](int sign) {
    return [=](int x) {
      const double factor = std::cos(w * x) - std::cos(w * m) + sign * std::sin(w * m);
      return Complex(factor * sine_product(n, m, 2 * m - 2, x));
    };
  };
  return {
      make(n, "case3-odd", FourierEigenvalue::kMinusIRoot,
           [=](int x) { return Complex(std::sin(w * x) * sine_product(n, m, 2 * m - 2, x)); }),
      make(n, "case3-even-plus", FourierEigenvalue::kPlusRoot, even(+1)),
      make(n, "case3-even-minus", FourierEigenvalue::kMinusRoot, even(-1)),
  };
}

std::vector<ClosedFormEigenfunction> case4(GridSize n) {
  require_case(n, 4);
  const int m = lowdim_base(n);
  const double w = kPi / n.value();
  // psi_hat(m) = N * (F^{-1} psi)(-m). The closed form avoids the cancellation
  // a direct transform suffers at the support endpoint.
  const Complex psi_hat_m = double(n.value()) * psi_inverse_transform_closed_form(n, m, 0).at(-m);
  const double base_at_m = sine_product(n, m, 2 * m - 3, m);
  const double root = std::sqrt(double(n.value()));
  const Complex i(0.0, 1.0);

  auto even = [&](double nu) {
    const Complex c = psi_hat_m / (2.0 * nu * base_at_m * std::cos(w * m)) -
                      std::cos(3 * w * m) / std::cos(w * m);
    return [=](int x) {
      return (std::cos(3 * w * x) + c * std::cos(w * x)) * sine_product(n, m, 2 * m - 3, x);
    };
  };
  auto odd = [&](Complex nu) {
    const Complex c = psi_hat_m / (2.0 * i * nu * base_at_m * std::sin(w * m)) -
                      std::sin(3 * w * m) / std::sin(w * m);
    return [=](int x) {
      return (std::sin(3 * w * x) + c * std::sin(w * x)) * sine_product(n, m, 2 * m - 3, x);
    };
  };
  return {
      make(n, "case4-even-plus", FourierEigenvalue::kPlusRoot, even(root)),
      make(n, "case4-even-minus", FourierEigenvalue::kMinusRoot, even(-root)),
      make(n, "case4-odd-plus", FourierEigenvalue::kPlusIRoot, odd(i * root)),
      make(n, "case4-odd-minus", FourierEigenvalue::kMinusIRoot, odd(-i * root)),
  };
}

std::vector<ClosedFormEigenfunction> closed_form_eigenfunctions(GridSize n) {
  switch (lowdim_dimension(n)) {
    case 1: return case1(n);
    case 2: return case2(n);
    case 3: return case3(n);
    default: return case4(n);
  }
}

GridFunction kong_case1(GridSize n) {
  require_case(n, 1);
  const int m = lowdim_base(n);
  const double w = 2.0 * kPi / n.value();
  return GridFunction::on_interval(DiscreteInterval(n, m), [=](int x) {
    double product = 1.0;
    for (int k = m + 1; k <= 2 * m; ++k) product *= std::cos(w * x) - std::cos(w * k);
    return Complex(product);
  });
}

GridFunction kong_case2(GridSize n) {
  require_case(n, 2);
  const int m = lowdim_base(n);
  const double w = 2.0 * kPi / n.value();
  return GridFunction::on_interval(DiscreteInterval(n, m), [=](int x) {
    double product = std::sin(w * x);
    for (int k = m + 1; k <= 2 * m - 1; ++k) product *= std::cos(w * x) - std::cos(w * k);
    return Complex(product);
  });
}

double ray_agreement(const GridFunction& f, const GridFunction& g) {
  return std::abs(inner_product(f, g)) / (f.norm() * g.norm());
}

double best_spectral_ray_match(const GridFunction& f, const SpectralData& sd) {
  double best = 0.0;
  for (const SimpleMode& mode : sd.simple) best = std::max(best, ray_agreement(f, mode.rho));
  return best;
}

ClosedFormEigenfunction base_case_eigenfunction(GridSize n) {
  for (ClosedFormEigenfunction& f : closed_form_eigenfunctions(n)) {
    if (f.measured == FourierEigenvalue::kPlusRoot) return std::move(f);
  }
  fail(ErrorCode::kNumerical, "no closed-form sqrt N eigenfunction found");
}

bool base_case_nonvanishing(GridSize n) {
  const ClosedFormEigenfunction f = base_case_eigenfunction(n);
  const double floor = 1e-10 * f.values.max_abs();
  return std::abs(f.values.at(f.m)) > floor && std::abs(f.values.at(-f.m)) > floor;
}

InductionStep induction_step(GridSize n, Complex lambda) {
  const ClosedFormEigenfunction base = base_case_eigenfunction(n);
  const int next = base.m + 1;
  if (2 * next + 1 > n.value()) {
    fail(ErrorCode::kInvalidArgument, "induction step needs m + 1 <= (N-1)/2");
  }
  InductionStep step{lambda, build_twisted_j0(n, lambda).apply(base.values), {}, 0.0, false, 0.0};
  step.eigenvalue = std::sqrt(double(n.value())) / lambda;
  const double peak = step.f_lambda.max_abs();
  if (peak == 0.0) fail(ErrorCode::kNumerical, "twisted J0 annihilated the base eigenfunction");

  const GridFunction image = dft(step.f_lambda);
  step.residual =
      (image.values() - step.eigenvalue * step.f_lambda.values()).norm() / step.f_lambda.norm();
  const DiscreteInterval interval(n, next);
  auto inside = [&](const GridFunction& g) {
    for (int k : support(g)) {
      if (!interval.contains(k)) return false;
    }
    return true;
  };
  step.in_next_space = inside(step.f_lambda) && inside(image);
  step.endpoint_ratio = std::abs(step.f_lambda.at(next)) / peak;
  return step;
}

}  // namespace rdft
