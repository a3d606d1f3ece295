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

#include "rdft/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rdft/error.hpp"

namespace rdft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTail = 1e-18;
constexpr long kMaxTerms = 1000000;
constexpr double kDegenerateRatio = 1e-12;
constexpr double kRatioTolerance = 1e-8;

void require_upper_half_plane(Complex tau) {
  if (!(tau.imag() > 0.0)) fail(ErrorCode::kDomain, "theta series needs Im(tau) > 0");
}

// Sums term(n) over all integers, walking outward from `center` until two
// consecutive terms are decreasing and below kTail relative to the running
// sum. One small term is not enough: derivative terms vanish at n = 0, which
// can sit right next to the peak.
template <typename Term>
Complex lattice_sum(long center, Term term) {
  Complex sum = term(center);
  for (const long direction : {1L, -1L}) {
    double previous = std::numeric_limits<double>::infinity();
    int small_run = 0;
    for (long step = 1;; ++step) {
      if (step > kMaxTerms) fail(ErrorCode::kNumerical, "theta series did not converge");
      const Complex t = term(center + direction * step);
      sum += t;
      const double magnitude = std::abs(t);
      const bool small =
          magnitude <= previous &&
          (magnitude <= kTail * std::abs(sum) || magnitude < std::numeric_limits<double>::min());
      small_run = small ? small_run + 1 : 0;
      if (small_run == 2) break;
      previous = magnitude;
    }
  }
  return sum;
}

Complex derivative_factor(Complex base, int order) {
  Complex factor = 1.0;
  for (int k = 0; k < order; ++k) factor *= base;
  return factor;
}

double relative(Complex residual, double scale) {
  return std::abs(residual) / std::max(scale, std::numeric_limits<double>::min());
}

}  // namespace

Complex theta(double x, Complex tau, GridSize n, int order) {
  require_upper_half_plane(tau);
  require(order >= 0, "derivative order must be non-negative");
  const double period = n.value();
  const long center = std::lround(-x / period);
  const Complex i(0.0, 1.0);
  return lattice_sum(center, [&](long k) {
    const double u = x + double(k) * period;
    const Complex base = i * kPi * u * u / period;
    return derivative_factor(base, order) * std::exp(base * tau);
  });
}

Complex jacobi_theta(Complex z, Complex tau, int order) {
  require_upper_half_plane(tau);
  require(order >= 0, "derivative order must be non-negative");
  const long center = std::lround(-z.imag() / tau.imag());
  const Complex i(0.0, 1.0);
  return lattice_sum(center, [&](long k) {
    const double nn = double(k) * double(k);
    const Complex base = i * kPi * nn;
    return derivative_factor(base, order) * std::exp(base * tau + 2.0 * kPi * i * double(k) * z);
  });
}

Complex theta3(Complex tau, int order) { return jacobi_theta(0.0, tau, order); }

Complex theta2(Complex tau, int order) {
  require_upper_half_plane(tau);
  const Complex i(0.0, 1.0);
  return lattice_sum(0, [&](long k) {
    const double u = double(k) + 0.5;
    const Complex base = i * kPi * u * u;
    return derivative_factor(base, order) * std::exp(base * tau);
  });
}

DftThetaReport dft_theta_check(GridSize n, Complex tau) {
  require_upper_half_plane(tau);
  const int size = n.value();
  GridFunction samples(n);
  for (int x = 0; x < size; ++x) samples[x] = theta(x, tau, n);
  const GridFunction transform = dft(samples);
  const Complex prefactor = std::sqrt(double(size) / (Complex(0.0, -1.0) * tau));
  DftThetaReport report{0.0, 0.0};
  for (int x = 0; x < size; ++x) {
    const Complex lemma = jacobi_theta(-double(x) / size, tau / double(size));
    const Complex jacobi = prefactor * theta(x, -1.0 / tau, n);
    report.lemma_error = std::max(report.lemma_error, std::abs(transform[x] - lemma));
    report.jacobi_error = std::max(report.jacobi_error, std::abs(transform[x] - jacobi));
  }
  return report;
}

const char* wronskian_status_label(WronskianStatus status) {
  switch (status) {
    case WronskianStatus::kOk: return "ok";
    case WronskianStatus::kMismatch: return "mismatch";
    case WronskianStatus::kDegenerate: return "degenerate Wronskian";
    case WronskianStatus::kVacuous: return "vacuous";
  }
  return "";
}

WronskianReport wronskian_kernel_check(GridSize n, int a, const std::vector<Complex>& taus) {
  require(n.value() <= 6, "Wronskian check is limited to N <= 6");
  require(taus.size() >= 2, "Wronskian check needs at least two tau values");
  for (Complex tau : taus) require_upper_half_plane(tau);
  const CommutantSpec spec(n, a);
  require(spec.spectral_range(), "Wronskian check needs a >= (N-2)/4");

  WronskianReport report{n, a, taus, WronskianStatus::kOk, "", {}, {}, {}, 0.0, 0.0};
  const DiscreteInterval interval(n, a);
  const std::vector<int> outside = interval.complement_indices();
  const int width = interval.size();
  const int s = static_cast<int>(outside.size());
  if (s == 0) {
    report.status = WronskianStatus::kVacuous;
    report.message = "no exterior points";
    return report;
  }
  const int order = 2 * width;  // number of functions = 4a + 2
  const double size = n.value();

  const InterpolationKernel kernel = interpolation_kernel(n, a);
  std::vector<ComplexMatrix> v_at(taus.size()), w_at(taus.size());

  for (std::size_t t = 0; t < taus.size(); ++t) {
    const Complex tau = taus[t];
    // Columns: theta(y, tau), then vartheta(-y/N, tau/N), y = -a..a.
    ComplexMatrix m(order, order);
    for (int k = 0; k < order; ++k) {
      const double chain = std::pow(size, -k);
      for (int c = 0; c < width; ++c) {
        const int y = c - a;
        m(k, c) = theta(y, tau, n, k);
        m(k, width + c) = jacobi_theta(-double(y) / size, tau / size, k) * chain;
      }
    }
    ComplexMatrix replacement(order, s);
    for (int k = 0; k < order; ++k) {
      for (int c = 0; c < s; ++c) replacement(k, c) = theta(outside[c], tau, n, k);
    }
    for (int k = 0; k < order; ++k) {
      const double scale = std::max(m.row(k).cwiseAbs().maxCoeff(), replacement.row(k).cwiseAbs().maxCoeff());
      if (scale > 0.0) {
        m.row(k) /= scale;
        replacement.row(k) /= scale;
      }
    }

    const Complex denominator = Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
    double hadamard = 1.0;
    for (int c = 0; c < order; ++c) hadamard *= m.col(c).norm();
    const double ratio = std::abs(denominator) / std::max(hadamard, std::numeric_limits<double>::min());
    report.denominator_ratio.push_back(ratio);
    if (ratio < kDegenerateRatio) {
      report.status = WronskianStatus::kDegenerate;
      report.message = "degenerate Wronskian";
      continue;
    }

    v_at[t] = ComplexMatrix::Zero(width, s);
    w_at[t] = ComplexMatrix::Zero(width, s);
    for (int c = 0; c < s; ++c) {
      for (int r = 0; r < width; ++r) {
        for (int slot : {r, width + r}) {
          ComplexMatrix numerator = m;
          numerator.col(slot) = replacement.col(c);
          const Complex value = Eigen::PartialPivLU<ComplexMatrix>(numerator).determinant() / denominator;
          (slot == r ? v_at[t] : w_at[t])(r, c) = value;
        }
      }
    }
  }
  if (report.status == WronskianStatus::kDegenerate) return report;

  report.v = v_at.front();
  report.w = w_at.front();
  auto spread = [](const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    double worst = 0.0;
    for (int i = 0; i < lhs.rows(); ++i) {
      for (int j = 0; j < lhs.cols(); ++j) {
        worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)) / std::max(1.0, std::abs(rhs(i, j))));
      }
    }
    return worst;
  };
  for (std::size_t t = 1; t < taus.size(); ++t) {
    report.tau_spread = std::max({report.tau_spread, spread(v_at[t], report.v), spread(w_at[t], report.w)});
  }
  for (std::size_t t = 0; t < taus.size(); ++t) {
    report.kernel_error = std::max({report.kernel_error, spread(v_at[t], kernel.v), spread(w_at[t], kernel.w)});
  }
  if (report.tau_spread > kRatioTolerance || report.kernel_error > kRatioTolerance) {
    report.status = WronskianStatus::kMismatch;
    report.message = "Wronskian ratios disagree with the interpolation kernel";
  } else {
    report.message = "Wronskian ratios are tau independent and match the kernel";
  }
  return report;
}

N2IdentitiesSummary n2_identities_check(const std::vector<Complex>& taus) {
  N2IdentitiesSummary summary{{}, 0.0};
  for (Complex tau : taus) {
    require_upper_half_plane(tau);
    const Complex t2 = 2.0 * tau;
    const Complex h = 0.5 * tau;
    const Complex th2_2 = theta2(t2), th3_2 = theta3(t2), th2_h = theta2(h), th3_h = theta3(h);
    const Complex d_th2_2 = theta2(t2, 1), d_th3_2 = theta3(t2, 1);
    const Complex d_th2_h = theta2(h, 1), d_th3_h = theta3(h, 1);

    N2IdentityReport point{};
    point.tau = tau;

    const Complex a1 = 2.0 * (d_th2_2 + d_th3_2) * th3_h;
    const Complex b1 = 0.5 * (th2_2 + th3_2) * d_th3_h;
    point.identity1 = relative(a1 - b1, std::abs(a1) + std::abs(b1));

    const Complex a2 = 2.0 * d_th3_2 * (th2_2 - th3_h);
    const Complex b2 = th3_2 * (2.0 * d_th2_2 - 0.5 * d_th3_h);
    point.identity2_corrected = relative(a2 - b2, std::abs(2.0 * d_th3_2) * (std::abs(th2_2) + std::abs(th3_h)) +
                                                       std::abs(th3_2) * (std::abs(2.0 * d_th2_2) + std::abs(0.5 * d_th3_h)));

    const Complex a3 = 2.0 * d_th3_2 * (th2_h - th3_h);
    const Complex b3 = 0.5 * th3_2 * (d_th2_h - d_th3_h);
    point.identity2_as_stated = relative(a3 - b3, std::abs(2.0 * d_th3_2) * (std::abs(th2_h) + std::abs(th3_h)) +
                                                      std::abs(0.5 * th3_2) * (std::abs(d_th2_h) + std::abs(d_th3_h)));

    point.landen1 = relative(th3_h - th3_2 - th2_2, std::abs(th3_h));
    point.landen2_as_stated = relative(th3_2 - th2_h + th3_h, std::abs(th3_2));

    // d/dtau of g(2 tau) is 2 g'(2 tau); of g(tau/2) it is g'(tau/2) / 2.
    auto wronskian = [](Complex f, Complex df, Complex g, Complex dg) { return f * dg - df * g; };
    const Complex denominator = wronskian(th3_2, 2.0 * d_th3_2, th3_h, 0.5 * d_th3_h);
    point.wronskian_v = wronskian(th2_2, 2.0 * d_th2_2, th3_h, 0.5 * d_th3_h) / denominator;
    point.wronskian_w = wronskian(th3_2, 2.0 * d_th3_2, th2_2, 2.0 * d_th2_2) / denominator;

    summary.max_asserted =
        std::max({summary.max_asserted, point.identity1, point.identity2_corrected, point.landen1});
    summary.points.push_back(point);
  }
  return summary;
}

}  // namespace rdft
