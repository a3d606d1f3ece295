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

#include "rdft/interp.hpp"

#include <algorithm>
#include <cmath>

#include "rdft/error.hpp"

namespace rdft {

namespace {

constexpr double kModelTolerance = 1e-9;
constexpr double kBetaFloor = 1e-10;

PairParity parity_of(const GridFunction& f) {
  double even = 0.0;
  double odd = 0.0;
  for (int x = 0; x < f.size(); ++x) {
    even += std::norm(f.at(-x) - f.at(x));
    odd += std::norm(f.at(-x) + f.at(x));
  }
  return even <= odd ? PairParity::kEven : PairParity::kOdd;
}

FourierEigenvector classify(GridFunction f, Complex eigenvalue_guess) {
  const GridSize n = f.grid();
  FourierEigenvalue which = FourierEigenvalue::kPlusRoot;
  for (int c = 1; c < 4; ++c) {
    const auto candidate = static_cast<FourierEigenvalue>(c);
    if (std::abs(fourier_eigenvalue_value(candidate, n) - eigenvalue_guess) <
        std::abs(fourier_eigenvalue_value(which, n) - eigenvalue_guess)) {
      which = candidate;
    }
  }
  const Complex value = fourier_eigenvalue_value(which, n);
  const double residual = (dft(f).values() - value * f.values()).norm() / f.norm();
  return {which, value, residual, std::move(f)};
}

}  // namespace

EigenspaceAction eigenspace_action(const SpectralData& sd, const CyclicOperator& f, int j) {
  require(j >= 0 && j < static_cast<int>(sd.doubled.size()), "doubled pair index out of range");
  require(f.grid() == sd.n, "transform and spectral data on different grids");
  const DoubledMode& mode = sd.doubled[j];
  const double root = std::sqrt(double(sd.n.value()));

  const GridFunction image = f.apply(mode.phi);
  const GridFunction image_tilde = f.apply(mode.phi_tilde);
  EigenspaceAction action{};
  action.j = j;
  action.lambda = mode.lambda;
  action.alpha = inner_product(image, mode.phi) / std::norm(mode.phi.norm());
  action.beta = inner_product(image, mode.phi_tilde) / std::norm(mode.phi_tilde.norm());
  if (std::abs(action.beta) < kBetaFloor * root) {
    fail(ErrorCode::kNumerical, "beta too small; ill-conditioned pair");
  }

  const ComplexVector model = action.alpha * mode.phi.values() + action.beta * mode.phi_tilde.values();
  const ComplexVector model_tilde =
      action.beta * mode.phi.values() - action.alpha * mode.phi_tilde.values();
  action.residual = std::max((image.values() - model).norm(), (image_tilde.values() - model_tilde).norm());
  if (action.residual > kModelTolerance * root) {
    fail(ErrorCode::kNumerical, "transform does not act as [[alpha, beta], [beta, -alpha]] on pair");
  }

  action.parity = parity_of(mode.phi);
  const double real_part = std::max(std::abs(action.alpha.real()), std::abs(action.beta.real()));
  const double imag_part = std::max(std::abs(action.alpha.imag()), std::abs(action.beta.imag()));
  action.real_pair = real_part >= imag_part;
  action.cross_component = action.real_pair ? imag_part : real_part;
  if (action.cross_component > kModelTolerance * root) {
    fail(ErrorCode::kNumerical, "alpha and beta are neither both real nor both imaginary");
  }
  return action;
}

std::vector<EigenspaceAction> eigenspace_actions(const SpectralData& sd, const CyclicOperator& f) {
  std::vector<EigenspaceAction> out;
  for (int j = 0; j < static_cast<int>(sd.doubled.size()); ++j) out.push_back(eigenspace_action(sd, f, j));
  return out;
}

InterpolationKernel magic_functions(const std::vector<EigenspaceAction>& actions,
                                    const SpectralData& sd) {
  require(actions.size() == sd.doubled.size(), "one action per doubled pair is required");
  const DiscreteInterval interval(sd.n, sd.a);
  InterpolationKernel kernel{sd.n, sd.a, interval.indices(), interval.complement_indices(), {}, {}, 1.0};
  const int rows = static_cast<int>(kernel.inside.size());
  const int cols = static_cast<int>(kernel.outside.size());
  kernel.v = ComplexMatrix::Zero(rows, cols);
  kernel.w = ComplexMatrix::Zero(rows, cols);
  const double root = std::sqrt(double(sd.n.value()));

  for (const EigenspaceAction& action : actions) {
    const DoubledMode& mode = sd.doubled[action.j];
    kernel.condition = std::max(kernel.condition, root / std::abs(action.beta));
    const Complex v_weight = -action.alpha / action.beta;
    const Complex w_weight = 1.0 / action.beta;
    for (int r = 0; r < rows; ++r) {
      const Complex phi_y = mode.phi[kernel.inside[r]];
      for (int c = 0; c < cols; ++c) {
        const Complex product = phi_y * mode.phi_tilde[kernel.outside[c]];
        kernel.v(r, c) += v_weight * product;
        kernel.w(r, c) += w_weight * product;
      }
    }
  }
  return kernel;
}

InterpolationKernel interpolation_kernel(GridSize n, int a) {
  const SpectralData sd = compute_spectral_data(n, a);
  return magic_functions(eigenspace_actions(sd, dft_matrix(n)), sd);
}

ComplexVector reconstruct_exterior(const InterpolationKernel& kernel, const ComplexVector& f_inside,
                                   const ComplexVector& f_hat_inside) {
  require(f_inside.size() == kernel.v.rows() && f_hat_inside.size() == kernel.v.rows(),
          "reconstruction input must have 2a+1 samples");
  return kernel.v.transpose() * f_inside + kernel.w.transpose() * f_hat_inside;
}

GridFunction reconstruct(const InterpolationKernel& kernel, const ComplexVector& f_inside,
                         const ComplexVector& f_hat_inside) {
  const ComplexVector exterior = reconstruct_exterior(kernel, f_inside, f_hat_inside);
  GridFunction f(kernel.n);
  for (int r = 0; r < f_inside.size(); ++r) f[kernel.inside[r]] = f_inside[r];
  for (int c = 0; c < exterior.size(); ++c) f[kernel.outside[c]] = exterior[c];
  return f;
}

ComplexVector sample_inside(const GridFunction& f, int a) {
  const DiscreteInterval interval(f.grid(), a);
  const std::vector<int> idx = interval.indices();
  ComplexVector out(idx.size());
  for (int r = 0; r < static_cast<int>(idx.size()); ++r) out[r] = f[idx[r]];
  return out;
}

ComplexVector dual_reconstruct_transform(const SpectralData& sd,
                                         const std::vector<EigenspaceAction>& actions,
                                         const ComplexVector& f_inside,
                                         const ComplexVector& f_hat_inside) {
  const DiscreteInterval interval(sd.n, sd.a);
  require(f_inside.size() == interval.size() && f_hat_inside.size() == interval.size(),
          "reconstruction input must have 2a+1 samples");
  const std::vector<int> inside = interval.indices();
  const std::vector<int> outside = interval.complement_indices();
  const double n = sd.n.value();
  const int width = interval.size();
  ComplexVector out = ComplexVector::Zero(outside.size());
  for (const EigenspaceAction& action : actions) {
    const DoubledMode& mode = sd.doubled[action.j];
    Complex coefficient = 0.0;
    for (int r = 0; r < width; ++r) {
      // row r is y = r - a, so f(-y) sits in row width - 1 - r
      coefficient += (n * f_inside[width - 1 - r] - action.alpha * f_hat_inside[r]) * mode.phi[inside[r]];
    }
    coefficient /= action.beta;
    for (int c = 0; c < static_cast<int>(outside.size()); ++c) {
      out[c] += coefficient * mode.phi_tilde[outside[c]];
    }
  }
  return out;
}

std::vector<FourierEigenvector> full_eigenbasis(const SpectralData& sd,
                                                const std::vector<EigenspaceAction>& actions) {
  std::vector<FourierEigenvector> out;
  for (const SimpleMode& mode : sd.simple) {
    const Complex guess = inner_product(dft(mode.rho), mode.rho) / std::norm(mode.rho.norm());
    out.push_back(classify(mode.rho, guess));
  }
  for (const EigenspaceAction& action : actions) {
    const DoubledMode& mode = sd.doubled[action.j];
    const Complex sigma = std::sqrt(action.alpha * action.alpha + action.beta * action.beta);
    for (const Complex root : {sigma, -sigma}) {
      GridFunction f(sd.n, (action.alpha + root) * mode.phi.values() + action.beta * mode.phi_tilde.values());
      out.push_back(classify(std::move(f), root));
    }
  }
  return out;
}

}  // namespace rdft
