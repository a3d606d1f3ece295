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

#include "rdft/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rdft/error.hpp"

namespace rdft {

namespace {

constexpr double kCutTolerance = 1e-14;
constexpr double kMatchRelative = 1e-8;
constexpr double kFourierResidual = 1e-9;

GridFunction embed(GridSize n, const std::vector<int>& index_map, const Eigen::VectorXd& v) {
  GridFunction f(n);
  for (int i = 0; i < v.size(); ++i) f[index_map[i]] = v[i];
  return f;
}

}  // namespace

JacobiBlock restrict_j(const CyclicOperator& j, const DiscreteInterval& interval, bool complement) {
  require(j.grid() == interval.grid(), "restriction to an interval of a different grid");
  JacobiBlock block;
  block.index_map = complement ? interval.complement_indices() : interval.indices();
  const int size = static_cast<int>(block.index_map.size());
  const int n = j.grid().value();

  std::vector<bool> in_block(n, false);
  for (int k : block.index_map) in_block[k] = true;
  for (int k : block.index_map) {
    for (int col = 0; col < n; ++col) {
      if (!in_block[col] && std::abs(j(k, col)) > kCutTolerance) {
        fail(ErrorCode::kDomain, "J does not decouple; check a");
      }
    }
  }

  block.diag.resize(size);
  block.offdiag.resize(std::max(0, size - 1));
  for (int i = 0; i < size; ++i) {
    const int row = block.index_map[i];
    block.diag[i] = j(row, row).real();
    if (i + 1 < size) block.offdiag[i] = j(row, block.index_map[i + 1]).real();
    for (int k = i + 2; k < size; ++k) {
      if (std::abs(j(row, block.index_map[k])) > kCutTolerance) {
        fail(ErrorCode::kDomain, "restriction of J is not tridiagonal in block order");
      }
    }
  }
  return block;
}

Complex fourier_eigenvalue_value(FourierEigenvalue which, GridSize n) {
  const double root = std::sqrt(double(n.value()));
  switch (which) {
    case FourierEigenvalue::kPlusRoot: return {root, 0.0};
    case FourierEigenvalue::kMinusIRoot: return {0.0, -root};
    case FourierEigenvalue::kMinusRoot: return {-root, 0.0};
    case FourierEigenvalue::kPlusIRoot: return {0.0, root};
  }
  return {};
}

const char* fourier_eigenvalue_label(FourierEigenvalue which) {
  switch (which) {
    case FourierEigenvalue::kPlusRoot: return "sqrtN";
    case FourierEigenvalue::kMinusIRoot: return "-i*sqrtN";
    case FourierEigenvalue::kMinusRoot: return "-sqrtN";
    case FourierEigenvalue::kPlusIRoot: return "i*sqrtN";
  }
  return "";
}

SpectralData pair_spectra(const JacobiBlock& inside, const JacobiBlock& outside, GridSize n, int a) {
  const CommutantSpec spec(n, a);
  if (!spec.spectral_range()) {
    fail(ErrorCode::kDomain, "spectral pairing requires a >= (N-2)/4");
  }
  require(inside.size() == 2 * a + 1 && outside.size() == n.value() - 2 * a - 1,
          "block sizes do not match (N, a)");

  const TridiagonalEigen in = eigendecompose_block(inside);
  const TridiagonalEigen out = eigendecompose_block(outside);

  SpectralData sd{n, a, 4 * a + 2 - n.value(), n.value() - 2 * a - 1, {}, {}, {}};
  double lo = in.values.front();
  double hi = in.values.back();
  if (!out.values.empty()) {
    lo = std::min(lo, out.values.front());
    hi = std::max(hi, out.values.back());
  }
  sd.stats.range = hi - lo;
  sd.stats.match_tolerance = kMatchRelative * std::max(sd.stats.range, 1.0);
  sd.stats.min_rival_distance = std::numeric_limits<double>::infinity();

  std::vector<int> partner(in.values.size(), -1);
  for (int o = 0; o < static_cast<int>(out.values.size()); ++o) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(in.values.size()); ++i) {
      const double distance = std::abs(in.values[i] - out.values[o]);
      if (distance <= sd.stats.match_tolerance) {
        if (found >= 0 || partner[i] >= 0) {
          fail(ErrorCode::kNumerical, "spectral collision; increase precision");
        }
        found = i;
      }
    }
    if (found < 0) {
      fail(ErrorCode::kNumerical, "outer eigenvalue has no inner partner");
    }
    partner[found] = o;
    sd.stats.max_match_distance =
        std::max(sd.stats.max_match_distance, std::abs(in.values[found] - out.values[o]));
    for (int i = 0; i < static_cast<int>(in.values.size()); ++i) {
      if (i != found) {
        sd.stats.min_rival_distance =
            std::min(sd.stats.min_rival_distance, std::abs(in.values[i] - out.values[o]));
      }
    }
  }

  for (int i = 0; i < static_cast<int>(in.values.size()); ++i) {
    const GridFunction inner = embed(n, inside.index_map, in.vectors.col(i));
    if (partner[i] < 0) {
      sd.simple.push_back({in.values[i], inner});
    } else {
      const int o = partner[i];
      sd.doubled.push_back(
          {in.values[i], inner, embed(n, outside.index_map, out.vectors.col(o))});
    }
  }
  if (static_cast<int>(sd.simple.size()) != sd.r) {
    fail(ErrorCode::kNumerical, "number of unmatched eigenvalues differs from 4a+2-N");
  }
  return sd;
}

SpectralData spectral_data_from_operator(const CyclicOperator& j, int a) {
  const DiscreteInterval interval(j.grid(), a);
  return pair_spectra(restrict_j(j, interval, false), restrict_j(j, interval, true), j.grid(), a);
}

SpectralData compute_spectral_data(GridSize n, int a) {
  return spectral_data_from_operator(build_j(CommutantSpec(n, a)), a);
}

std::vector<FourierAction> fourier_eigenvalues_on_ca(const SpectralData& sd, const CyclicOperator& f) {
  require(f.grid() == sd.n, "transform and spectral data on different grids");
  const double root = std::sqrt(double(sd.n.value()));
  std::vector<FourierAction> out;
  out.reserve(sd.simple.size());
  for (const SimpleMode& mode : sd.simple) {
    const GridFunction image = f.apply(mode.rho);
    const double norm2 = mode.rho.norm() * mode.rho.norm();
    const Complex rayleigh = inner_product(image, mode.rho) / norm2;

    FourierAction best{FourierEigenvalue::kPlusRoot, {}, std::numeric_limits<double>::infinity()};
    for (int c = 0; c < 4; ++c) {
      const auto which = static_cast<FourierEigenvalue>(c);
      const Complex value = fourier_eigenvalue_value(which, sd.n);
      if (std::abs(value - rayleigh) < std::abs(best.value - rayleigh) || c == 0) {
        best.which = which;
        best.value = value;
      }
    }
    best.residual = (image.values() - best.value * mode.rho.values()).norm() / mode.rho.norm();
    if (best.residual > kFourierResidual * root) {
      fail(ErrorCode::kNumerical, "rho_k not an F-eigenvector");
    }
    out.push_back(best);
  }
  return out;
}

int multiplicity_base(GridSize n) { return (n.value() + 2) / 4; }

Multiplicities multiplicity_table(GridSize n, int a) {
  if (a < multiplicity_base(n)) {
    fail(ErrorCode::kDomain, "multiplicity table requires a >= floor((N+2)/4)");
  }
  const SpectralData sd = compute_spectral_data(n, a);
  Multiplicities counts{0, 0, 0, 0};
  for (const FourierAction& action : fourier_eigenvalues_on_ca(sd, dft_matrix(n))) {
    ++counts[static_cast<int>(action.which)];
  }
  return counts;
}

Multiplicities multiplicity_closed_form(GridSize n, int a) {
  const int m = multiplicity_base(n);
  DiscreteInterval check(n, a);
  (void)check;
  if (a < m) fail(ErrorCode::kDomain, "multiplicity table requires a >= floor((N+2)/4)");
  const int hi = a - m + 1;
  const int lo = a - m;
  switch (4 * m + 2 - n.value()) {
    case 4: return {hi, hi, hi, hi};  // N = 4m - 2
    case 3: return {hi, hi, hi, lo};  // N = 4m - 1
    case 2: return {hi, hi, lo, lo};  // N = 4m
    default: return {hi, lo, lo, lo};  // N = 4m + 1
  }
}

std::string multiplicity_csv_header() { return "N,a,m_plus,m_minus_i,m_minus,m_plus_i"; }

std::string multiplicity_csv_row(GridSize n, int a, const Multiplicities& counts) {
  std::ostringstream row;
  row << n.value() << ',' << a;
  for (int c : counts) row << ',' << c;
  return row.str();
}

}  // namespace rdft
