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

#include "rdft/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rdft/error.hpp"

namespace rdft {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxQlIterations = 60;

// Implicit-shift QL on (d, e) with e[i] coupling i and i+1; e has length n
// with e[n-1] unused. Eigenvectors accumulate into z (initially identity).
void implicit_ql(std::vector<double>& d, std::vector<double>& e, Eigen::MatrixXd& z) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (iterations++ == kMaxQlIterations) {
        fail(ErrorCode::kNumerical, "tridiagonal QL iteration did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i;
      bool deflated = false;
      for (i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int k = 0; k < z.rows(); ++k) {
          const double t = z(k, i + 1);
          z(k, i + 1) = s * z(k, i) + c * t;
          z(k, i) = c * z(k, i) - s * t;
        }
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

double pivot_floor(const JacobiBlock& block) {
  double largest = 1.0;
  for (double v : block.offdiag) largest = std::max(largest, v * v);
  return std::numeric_limits<double>::min() * largest;
}

// Tridiagonal LU with partial pivoting (the LAPACK gttrf layout).
struct TridiagonalLu {
  std::vector<double> dl, d, du, du2;
  std::vector<int> pivot;

  TridiagonalLu(const JacobiBlock& block, double shift, double tiny) {
    const int n = block.size();
    d.resize(n);
    for (int i = 0; i < n; ++i) d[i] = block.diag[i] - shift;
    dl = block.offdiag;
    du = block.offdiag;
    du2.assign(std::max(0, n - 2), 0.0);
    pivot.resize(std::max(0, n - 1));
    std::iota(pivot.begin(), pivot.end(), 0);
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        pivot[i] = i + 1;
      }
    }
    for (double& v : d) {
      if (v == 0.0) v = tiny;
    }
  }

  void solve(Eigen::VectorXd& b) const {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (pivot[i] == i) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

TridiagonalEigen bisection_inverse_iteration(const JacobiBlock& block) {
  const int n = block.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(block.offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(block.offdiag[i]);
    lo = std::min(lo, block.diag[i] - radius);
    hi = std::max(hi, block.diag[i] + radius);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});

  TridiagonalEigen out;
  out.values.resize(n);
  for (int k = 0; k < n; ++k) {
    double left = lo;
    double right = hi;
    while (right - left > 2.0 * kEps * scale) {
      const double mid = 0.5 * (left + right);
      if (mid == left || mid == right) break;
      if (sturm_count(block, mid) > k) right = mid;
      else left = mid;
    }
    out.values[k] = 0.5 * (left + right);
  }

  const double range = hi - lo;
  const double tiny = kEps * std::max(block.norm(), std::numeric_limits<double>::min());
  out.vectors = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const TridiagonalLu lu(block, out.values[k], tiny);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.7 * i + 0.3 * k);
    for (int iteration = 0; iteration < 4; ++iteration) {
      lu.solve(v);
      for (int j = 0; j < k; ++j) {
        if (std::abs(out.values[j] - out.values[k]) < 1e-3 * std::max(range, 1.0)) {
          v -= out.vectors.col(j).dot(v) * out.vectors.col(j);
        }
      }
      v.normalize();
    }
    out.vectors.col(k) = v;
  }
  return out;
}

void sign_normalize(Eigen::MatrixXd& vectors) {
  for (int k = 0; k < vectors.cols(); ++k) {
    auto col = vectors.col(k);
    const double peak = col.cwiseAbs().maxCoeff();
    for (int i = 0; i < col.size(); ++i) {
      if (std::abs(col[i]) > 1e-10 * peak) {
        if (col[i] < 0.0) col = -col;
        break;
      }
    }
  }
}

struct Validation {
  double residual = 0.0;
  double orthogonality = 0.0;
};

Validation validate(const JacobiBlock& block, const TridiagonalEigen& eig) {
  const Eigen::MatrixXd dense = block.dense();
  Validation v;
  for (int k = 0; k < block.size(); ++k) {
    const Eigen::VectorXd r = dense * eig.vectors.col(k) - eig.values[k] * eig.vectors.col(k);
    v.residual = std::max(v.residual, r.norm());
  }
  const Eigen::MatrixXd gram =
      eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(block.size(), block.size());
  v.orthogonality = gram.size() == 0 ? 0.0 : gram.cwiseAbs().maxCoeff();
  return v;
}

}  // namespace

Eigen::MatrixXd JacobiBlock::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = diag[i];
    if (i + 1 < n) {
      m(i, i + 1) = offdiag[i];
      m(i + 1, i) = offdiag[i];
    }
  }
  return m;
}

double JacobiBlock::norm() const {
  double best = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    best = std::max(best, row);
  }
  return best;
}

int sturm_count(const JacobiBlock& block, double x) {
  const double floor = pivot_floor(block);
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < block.size(); ++i) {
    q = block.diag[i] - x - (i > 0 ? block.offdiag[i - 1] * block.offdiag[i - 1] / q : 0.0);
    if (std::abs(q) < floor) q = -floor;
    if (q < 0.0) ++count;
  }
  return count;
}

TridiagonalEigen solve_tridiagonal(const JacobiBlock& block, EigenRoute route) {
  const int n = block.size();
  require(static_cast<int>(block.offdiag.size()) == std::max(0, n - 1),
          "tridiagonal block: off-diagonal length must be size - 1");
  TridiagonalEigen out;
  if (n == 0) return out;
  if (route == EigenRoute::kBisection) {
    out = bisection_inverse_iteration(block);
  } else {
    std::vector<double> d = block.diag;
    std::vector<double> e(n, 0.0);
    std::copy(block.offdiag.begin(), block.offdiag.end(), e.begin());
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
    implicit_ql(d, e, z);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&d](int i, int j) { return d[i] < d[j]; });
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
      out.values[k] = d[order[k]];
      out.vectors.col(k) = z.col(order[k]);
    }
  }
  sign_normalize(out.vectors);
  return out;
}

TridiagonalEigen eigendecompose_block(const JacobiBlock& block, const EigenTolerances& tol) {
  const double scale = std::max(block.norm(), std::numeric_limits<double>::min());
  auto acceptable = [&](const TridiagonalEigen& eig) {
    const Validation v = validate(block, eig);
    return v.residual <= tol.residual * scale && v.orthogonality <= tol.orthogonality;
  };

  TridiagonalEigen eig;
  bool ok = false;
  try {
    eig = solve_tridiagonal(block, EigenRoute::kImplicitQl);
    ok = acceptable(eig);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) {
    eig = solve_tridiagonal(block, EigenRoute::kBisection);
    if (!acceptable(eig)) {
      fail(ErrorCode::kNumerical, "tridiagonal eigensolver failed residual/orthogonality checks");
    }
  }

  if (block.size() > 1) {
    const double range = eig.values.back() - eig.values.front();
    for (int k = 1; k < block.size(); ++k) {
      if (eig.values[k] - eig.values[k - 1] <= tol.separation * range) {
        fail(ErrorCode::kNumerical, "tridiagonal block has numerically repeated eigenvalues");
      }
    }
  }
  return eig;
}

}  // namespace rdft
