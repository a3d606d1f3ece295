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

#include "rdft/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "rdft/error.hpp"

namespace rdft {

namespace {

class CaseRecorder {
 public:
  CaseRecorder(GridSize n, int a, double tol_scale) : n_(n), a_(a), tol_scale_(tol_scale) {}

  // Runs `measure`, which returns the measured value; passes when value <= tolerance.
  void check(const std::string& name, const std::string& claim, double tolerance,
             const std::function<double()>& measure, bool asserted = true) {
    CheckResult result{name, claim, n_.value(), a_, 0.0, tolerance * tol_scale_, false, asserted, ""};
    try {
      result.value = measure();
      result.passed = result.value <= result.tolerance;
    } catch (const std::exception& e) {
      result.value = std::numeric_limits<double>::infinity();
      result.detail = e.what();
    }
    results_.push_back(std::move(result));
  }

  void note(const std::string& detail) { results_.back().detail = detail; }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  GridSize n_;
  int a_;
  double tol_scale_;
  std::vector<CheckResult> results_;
};

GridFunction random_function(GridSize n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  GridFunction f(n);
  for (int k = 0; k < n.value(); ++k) f[k] = Complex(normal(rng), normal(rng));
  return f;
}

CyclicOperator corrupted(const CyclicOperator& j) {
  ComplexMatrix m = j.entries();
  m(0, 1) += 1e-3;
  m(1, 0) += 1e-3;
  return CyclicOperator(j.grid(), std::move(m));
}

double max_entry(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void spectral_checks(CaseRecorder& rec, GridSize n, int a, const CyclicOperator& j,
                     const VerifyOptions& options) {
  const CyclicOperator f = dft_matrix(n);
  const double root = std::sqrt(double(n.value()));
  std::optional<SpectralData> sd;
  rec.check("pairing", "outer eigenvalues reappear in the inner block; exactly 4a+2-N do not", 1e-8, [&] {
    sd = spectral_data_from_operator(j, a);
    return sd->stats.max_match_distance / std::max(sd->stats.range, 1.0);
  });
  if (!sd) return;

  rec.check("dense_spectrum", "spectrum of J is the union of the two block spectra", 1e-10, [&] {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(j.entries().real());
    std::vector<double> blocks;
    for (const SimpleMode& m : sd->simple) blocks.push_back(m.mu);
    for (const DoubledMode& m : sd->doubled) {
      blocks.push_back(m.lambda);
      blocks.push_back(m.lambda);
    }
    std::sort(blocks.begin(), blocks.end());
    double worst = 0.0;
    for (int k = 0; k < n.value(); ++k) worst = std::max(worst, std::abs(dense.eigenvalues()[k] - blocks[k]));
    return worst / std::max(sd->stats.range, 1.0);
  });

  std::vector<FourierAction> fourier;
  rec.check("fourier_on_ca", "every rho_k is an eigenvector of F_N", 1e-9, [&] {
    fourier = fourier_eigenvalues_on_ca(*sd, f);
    double worst = 0.0;
    for (const FourierAction& action : fourier) worst = std::max(worst, action.residual / root);
    return worst;
  });

  if (a >= multiplicity_base(n) && fourier.size() == sd->simple.size()) {
    rec.check("multiplicities", "multiplicities of F_N on C_a follow the closed-form table", 0.0, [&] {
      Multiplicities counts{0, 0, 0, 0};
      for (const FourierAction& action : fourier) ++counts[static_cast<int>(action.which)];
      const Multiplicities expected = multiplicity_closed_form(n, a);
      double mismatch = 0.0;
      for (int c = 0; c < 4; ++c) mismatch += std::abs(counts[c] - expected[c]);
      return mismatch;
    });
  }

  std::vector<EigenspaceAction> actions;
  rec.check("alpha_beta_norm", "|alpha_j|^2 + |beta_j|^2 = N on every doubled pair", 1e-9, [&] {
    actions = eigenspace_actions(*sd, f);
    double worst = 0.0;
    for (const EigenspaceAction& act : actions) {
      worst = std::max(worst, std::abs(std::norm(act.alpha) + std::norm(act.beta) - n.value()) / n.value());
    }
    return worst;
  });
  if (actions.size() != sd->doubled.size()) return;

  const InterpolationKernel kernel = magic_functions(actions, *sd);
  const double reconstruction_tol = std::max(1e-8, 1e-15 * kernel.condition * n.value());
  std::mt19937_64 rng(options.seed ^ (std::uint64_t(n.value()) << 32) ^ std::uint64_t(a));
  const GridFunction sample = random_function(n, rng);
  const GridFunction sample_hat = dft(sample);
  const ComplexVector f_in = sample_inside(sample, a);
  const ComplexVector f_hat_in = sample_inside(sample_hat, a);

  rec.check("reconstruction", "f is determined by f and its transform on [-a,a]", reconstruction_tol, [&] {
    const GridFunction rebuilt = reconstruct(kernel, f_in, f_hat_in);
    return (rebuilt.values() - sample.values()).cwiseAbs().maxCoeff() / sample.max_abs();
  });
  rec.note("kernel condition estimate " + std::to_string(kernel.condition));

  rec.check("dual_reconstruction", "the transform outside [-a,a] follows from the same data",
            reconstruction_tol, [&] {
              const ComplexVector outside = dual_reconstruct_transform(*sd, actions, f_in, f_hat_in);
              const std::vector<int> idx = DiscreteInterval(n, a).complement_indices();
              double worst = 0.0;
              for (int c = 0; c < outside.size(); ++c) worst = std::max(worst, std::abs(outside[c] - sample_hat[idx[c]]));
              return worst / sample_hat.max_abs();
            });

  rec.check("full_eigenbasis", "rho_k and the paired combinations form an F_N eigenbasis", 1e-8, [&] {
    const std::vector<FourierEigenvector> basis = full_eigenbasis(*sd, actions);
    if (static_cast<int>(basis.size()) != n.value()) fail(ErrorCode::kNumerical, "eigenbasis has wrong size");
    double worst = 0.0;
    ComplexMatrix columns(n.value(), n.value());
    for (int k = 0; k < n.value(); ++k) {
      worst = std::max(worst, basis[k].residual / root);
      columns.col(k) = basis[k].f.values() / basis[k].f.norm();
    }
    const double smallest = Eigen::JacobiSVD<ComplexMatrix>(columns).singularValues().minCoeff();
    if (smallest < 1e-6) fail(ErrorCode::kNumerical, "eigenbasis does not span");
    return worst;
  });

  if (n.value() <= 6) {
    const std::vector<Complex> taus{{0.0, 1.0}, {1.0, 1.0}, {0.0, 2.0}};
    const bool asserted = false;
    rec.check("wronskian", "Wronskian ratios of theta functions reproduce v_y and w_y", 1e-8, [&] {
      const WronskianReport w = wronskian_kernel_check(n, a, taus);
      if (w.status == WronskianStatus::kVacuous) return 0.0;
      if (w.status == WronskianStatus::kDegenerate) fail(ErrorCode::kNumerical, w.message);
      return std::max(w.tau_spread, w.kernel_error);
    }, asserted);
  }
}

void extremal_checks(CaseRecorder& rec, GridSize n, int a) {
  const int r = 4 * a + 2 - n.value();
  rec.check("psi_product_forms", "sine product and q-Pochhammer forms of psi_a agree", 1e-12, [&] {
    const GridFunction lhs = psi(n, a);
    return (lhs.values() - psi_q_pochhammer(n, a).values()).cwiseAbs().maxCoeff() / lhs.max_abs();
  });
  rec.check("transform_closed_form", "inverse transform of xi^{-kx} psi_a has the q-binomial closed form", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < r; ++k) {
      const GridFunction numeric = idft(basis_element(n, a, k));
      const GridFunction closed = psi_inverse_transform_closed_form(n, a, k);
      worst = std::max(worst, (numeric.values() - closed.values()).cwiseAbs().maxCoeff() / numeric.max_abs());
    }
    return worst;
  });
  rec.check("transform_supports", "transform supports are the stated intervals", 0.0, [&] {
    double bad = 0.0;
    for (int k = 0; k < r; ++k) {
      const GridFunction element = basis_element(n, a, k);
      std::vector<int> inv = support(idft(element));
      std::vector<int> fwd = support(dft(element));
      std::vector<int> inv_expected = inverse_transform_support(n, a, k).indices(n);
      std::vector<int> fwd_expected = forward_transform_support(n, a, k).indices(n);
      std::sort(inv_expected.begin(), inv_expected.end());
      std::sort(fwd_expected.begin(), fwd_expected.end());
      if (inv != inv_expected || fwd != fwd_expected) bad += 1.0;
      if (support(element) != [&] { auto s = DiscreteInterval(n, a).indices(); std::sort(s.begin(), s.end()); return s; }()) bad += 1.0;
    }
    return bad;
  });
  rec.check("extremal_support", "every basis element xi^{-kx} psi_a has extremal support", 0.0, [&] {
    double bad = 0.0;
    for (int k = 0; k < r; ++k) {
      if (!is_extremal_support(basis_element(n, a, k))) bad += 1.0;
    }
    return bad;
  });
  rec.check("uncertainty", "Donoho-Stark holds; Tao's bound holds for prime N", 0.0, [&] {
    const UncertaintyReport u = uncertainty_check(psi(n, a));
    return (u.donoho_stark && u.tao.value_or(true)) ? 0.0 : 1.0;
  });
}

void lowdim_checks(CaseRecorder& rec, GridSize n, const SpectralData& sd) {
  const double root = std::sqrt(double(n.value()));
  std::vector<ClosedFormEigenfunction> forms;
  rec.check("closed_forms", "closed-form functions are F_N eigenfunctions in C_m", 1e-9, [&] {
    forms = closed_form_eigenfunctions(n);
    double worst = 0.0;
    for (const ClosedFormEigenfunction& f : forms) {
      if (f.measured != f.expected) fail(ErrorCode::kNumerical, f.tag + " carries an unexpected eigenvalue");
      worst = std::max(worst, f.residual / root);
    }
    return worst;
  });
  rec.check("closed_form_rays", "closed forms agree with the spectral eigenvectors up to scale", 1e-9, [&] {
    double worst = 0.0;
    for (const ClosedFormEigenfunction& f : forms) worst = std::max(worst, 1.0 - best_spectral_ray_match(f.values, sd));
    return worst;
  });
  const int d = lowdim_dimension(n);
  if (d == 1 || d == 2) {
    rec.check("kong_form", "the product-of-cosines form spans the same ray", 1e-9, [&] {
      if (d == 1) return 1.0 - ray_agreement(kong_case1(n), forms.at(0).values);
      return 1.0 - ray_agreement(kong_case2(n), forms.at(1).values);
    });
  }
  rec.check("base_case", "the sqrt N base function does not vanish at +-m", 0.0,
            [&] { return base_case_nonvanishing(n) ? 0.0 : 1.0; });
  const int m = lowdim_base(n);
  if (2 * (m + 1) + 1 <= n.value()) {
    rec.check("induction_step", "twisted J0 maps the base function into C_{m+1} with eigenvalue sqrt(N)/lambda",
              1e-9, [&] {
                double worst = 0.0;
                for (Complex lambda : {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)}) {
                  const InductionStep step = induction_step(n, lambda);
                  if (!step.in_next_space) fail(ErrorCode::kNumerical, "f_lambda leaves C_{m+1}");
                  if (step.endpoint_ratio <= 1e-10) fail(ErrorCode::kNumerical, "f_lambda vanishes at m+1");
                  worst = std::max(worst, step.residual / root);
                }
                return worst;
              });
  }
}

void theta_checks(CaseRecorder& rec, GridSize n) {
  if (n.value() <= 8) {
    rec.check("dft_theta", "the DFT of theta(., tau) is vartheta(-x/N, tau/N)", 1e-11, [&] {
      double worst = 0.0;
      for (Complex tau : {Complex(0, 1), Complex(0, 2), Complex(1, 1)}) {
        const DftThetaReport r = dft_theta_check(n, tau);
        worst = std::max({worst, r.lemma_error, r.jacobi_error});
      }
      return worst;
    });
  }
  if (n.value() == 2) {
    rec.check("n2_identities", "theta-constant identities from the N = 2 interpolation formula", 1e-9, [&] {
      return n2_identities_check({Complex(0, 1), Complex(0, 2), Complex(1, 1)}).max_asserted;
    });
  }
}

}  // namespace

std::vector<CheckResult> verify_case(GridSize n, int a, const VerifyOptions& options) {
  CaseRecorder rec(n, a, options.tol_scale);
  const CommutantSpec spec(n, a);
  CyclicOperator j = build_j(spec);
  if (options.inject_fault && n.value() >= 3) j = corrupted(j);

  rec.check("commutation", "J commutes with F_N", 1e-12, [&] { return commutator_norm(j, dft_matrix(n)); });
  rec.check("coefficient_form", "J = A(x) delta + B(x) + A(x-1) delta^{-1} entrywise", 1e-14, [&] {
    return max_entry(j.entries() - build_j_from_coefficients(spec).entries());
  });
  rec.check("dimension", "dim C_a = max(0, 4a+2-N)", 0.0, [&] {
    return double(std::abs(dim_ca_rank_oracle(n, a) - dim_ca_formula(n, a)));
  });
  rec.check("preserves_interval", "J maps functions on [-a,a] to functions on [-a,a]", 1e-14, [&] {
    const DiscreteInterval interval(n, a);
    const std::vector<int> inside = interval.indices();
    double leak = 0.0;
    for (int col : inside) {
      for (int row = 0; row < n.value(); ++row) {
        if (!interval.contains(row)) leak = std::max(leak, std::abs(j(row, col)));
      }
    }
    return leak;
  });

  if (spec.spectral_range()) {
    spectral_checks(rec, n, a, j, options);
    if (4 * a + 2 - n.value() >= 1) extremal_checks(rec, n, a);
    if (n.value() >= 3 && a == lowdim_base(n)) {
      std::optional<SpectralData> sd;
      try {
        sd = spectral_data_from_operator(j, a);
      } catch (const Error&) {
      }
      if (sd) lowdim_checks(rec, n, *sd);
    }
  }
  const int first_a = options.a >= 0 ? options.a : 0;
  if (a == first_a) theta_checks(rec, n);
  return rec.take();
}

VerifyReport run_verify(const VerifyOptions& options) {
  require(options.n_min >= 2 && options.n_max >= options.n_min, "verify needs 2 <= n_min <= n_max");
  require(options.tol_scale > 0.0, "tolerance scale must be positive");
  std::vector<std::pair<int, int>> cases;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    if (options.a >= 0) {
      DiscreteInterval check(GridSize(n), options.a);
      (void)check;
      cases.emplace_back(n, options.a);
    } else {
      for (int a = 0; 2 * a + 1 <= n; ++a) cases.emplace_back(n, a);
    }
  }

  std::vector<std::vector<CheckResult>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      results[i] = verify_case(GridSize(cases[i].first), cases[i].second, options);
    }
  };
  int threads = options.threads > 0 ? options.threads : int(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max<int>(1, int(cases.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerifyReport report{options, {}, 0};
  for (auto& chunk : results) {
    for (CheckResult& r : chunk) {
      if (r.asserted && !r.passed) ++report.failures;
      report.checks.push_back(std::move(r));
    }
  }
  return report;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json out;
  out["n_min"] = report.options.n_min;
  out["n_max"] = report.options.n_max;
  out["a"] = report.options.a >= 0 ? Json(report.options.a) : Json("all");
  out["seed"] = report.options.seed;
  out["tol_scale"] = report.options.tol_scale;
  out["fault_injected"] = report.options.inject_fault;
  out["passed"] = report.passed();
  out["failures"] = report.failures;
  Json failing = Json::array();
  Json checks = Json::array();
  for (const CheckResult& r : report.checks) {
    Json c;
    c["check"] = r.name;
    c["claim"] = r.claim;
    c["N"] = r.n;
    c["a"] = r.a;
    c["value"] = std::isfinite(r.value) ? Json(r.value) : Json(nullptr);
    c["tolerance"] = r.tolerance;
    c["passed"] = r.passed;
    c["asserted"] = r.asserted;
    if (!r.detail.empty()) c["detail"] = r.detail;
    if (r.asserted && !r.passed) {
      failing.push_back({{"check", r.name}, {"claim", r.claim}, {"N", r.n}, {"a", r.a}});
    }
    checks.push_back(std::move(c));
  }
  out["failing"] = std::move(failing);
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace rdft
