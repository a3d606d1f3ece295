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

#include "rdft/json_io.hpp"

#include <algorithm>

#include "rdft/error.hpp"

namespace rdft {

namespace {

Json values_to_json(const ComplexVector& values) {
  Json out = Json::array();
  for (int k = 0; k < values.size(); ++k) out.push_back(complex_to_json(values[k]));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexVector values_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "\"values\" must be an array of [re, im] pairs");
  ComplexVector out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out[k] = complex_from_json(j[k]);
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    fail(ErrorCode::kParse, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::kParse, "complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json grid_function_to_json(const GridFunction& f) {
  Json out;
  out["N"] = f.grid().value();
  out["values"] = values_to_json(f.values());
  return out;
}

GridFunction grid_function_from_json(const Json& j) {
  const int n = int_field(j, "N");
  if (n < 2) fail(ErrorCode::kParse, "\"N\" must be at least 2");
  if (!j.contains("values")) fail(ErrorCode::kParse, "missing field \"values\"");
  ComplexVector values = values_from_json(j["values"]);
  if (values.size() != n) fail(ErrorCode::kParse, "\"values\" must have N entries");
  return GridFunction(GridSize(n), std::move(values));
}

IntervalSamples interval_samples_from_json(const Json& j, int a) {
  const int n = int_field(j, "N");
  if (n < 2) fail(ErrorCode::kParse, "\"N\" must be at least 2");
  const GridSize grid(n);
  const DiscreteInterval interval(grid, a);
  if (!j.contains("values")) fail(ErrorCode::kParse, "missing field \"values\"");
  const ComplexVector values = values_from_json(j["values"]);
  if (j.contains("a")) {
    if (int_field(j, "a") != a) fail(ErrorCode::kParse, "\"a\" in input does not match --a");
    if (values.size() != interval.size()) fail(ErrorCode::kParse, "partial input needs 2a+1 values");
    return {grid, a, values};
  }
  if (values.size() != n) fail(ErrorCode::kParse, "\"values\" must have N entries");
  ComplexVector inside(interval.size());
  const std::vector<int> idx = interval.indices();
  for (int r = 0; r < interval.size(); ++r) inside[r] = values[idx[r]];
  return {grid, a, inside};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json spectrum_to_json(GridSize n, int a) {
  const SpectralData sd = compute_spectral_data(n, a);
  const CyclicOperator f = dft_matrix(n);
  const std::vector<FourierAction> fourier = fourier_eigenvalues_on_ca(sd, f);
  const std::vector<EigenspaceAction> actions = eigenspace_actions(sd, f);

  Json out;
  out["N"] = n.value();
  out["a"] = a;
  out["r"] = sd.r;
  out["s"] = sd.s;
  out["pairing"] = {{"range", sd.stats.range},
                    {"match_tolerance", sd.stats.match_tolerance},
                    {"max_match_distance", sd.stats.max_match_distance},
                    {"min_rival_distance", sd.s > 0 ? Json(sd.stats.min_rival_distance) : Json(nullptr)}};
  Json simple = Json::array();
  for (std::size_t k = 0; k < sd.simple.size(); ++k) {
    Json mode;
    mode["mu"] = sd.simple[k].mu;
    mode["fourier_eigenvalue"] = fourier_eigenvalue_label(fourier[k].which);
    mode["fourier_residual"] = fourier[k].residual;
    mode["rho"] = values_to_json(sd.simple[k].rho.values());
    simple.push_back(std::move(mode));
  }
  out["simple"] = std::move(simple);
  Json doubled = Json::array();
  for (std::size_t j = 0; j < sd.doubled.size(); ++j) {
    Json mode;
    mode["lambda"] = sd.doubled[j].lambda;
    mode["alpha"] = complex_to_json(actions[j].alpha);
    mode["beta"] = complex_to_json(actions[j].beta);
    mode["parity"] = actions[j].parity == PairParity::kEven ? "even" : "odd";
    mode["phi"] = values_to_json(sd.doubled[j].phi.values());
    mode["phi_tilde"] = values_to_json(sd.doubled[j].phi_tilde.values());
    doubled.push_back(std::move(mode));
  }
  out["doubled"] = std::move(doubled);
  if (a >= multiplicity_base(n)) {
    Multiplicities counts{0, 0, 0, 0};
    for (const FourierAction& action : fourier) ++counts[static_cast<int>(action.which)];
    out["multiplicities"] = {{"m_plus", counts[0]},
                             {"m_minus_i", counts[1]},
                             {"m_minus", counts[2]},
                             {"m_plus_i", counts[3]}};
  }
  return out;
}

Json kernel_to_json(const InterpolationKernel& kernel) {
  Json out;
  out["N"] = kernel.n.value();
  out["a"] = kernel.a;
  out["condition"] = kernel.condition;
  Json outside = Json::array();
  for (int k : kernel.outside) outside.push_back(k);
  out["exterior"] = std::move(outside);
  out["v"] = matrix_to_json(kernel.v);
  out["w"] = matrix_to_json(kernel.w);
  return out;
}

Json basis_to_json(const ExtremalBasis& basis) {
  Json out;
  out["N"] = basis.n.value();
  out["a"] = basis.a;
  out["r"] = basis.r;
  Json functions = Json::array();
  for (int k = 0; k < basis.r; ++k) {
    const GridFunction& f = basis.basis[k];
    const std::vector<int> s = support(f);
    Json entry;
    entry["k"] = k;
    Json signed_support = Json::array();
    for (int x = -basis.a; x <= basis.a; ++x) {
      if (std::find(s.begin(), s.end(), basis.n.canonical(x)) != s.end()) signed_support.push_back(x);
    }
    entry["support"] = std::move(signed_support);
    entry["extremal"] = is_extremal_support(f);
    entry["values"] = values_to_json(f.values());
    functions.push_back(std::move(entry));
  }
  out["functions"] = std::move(functions);
  return out;
}

Json lowdim_to_json(GridSize n) {
  Json out;
  out["N"] = n.value();
  out["m"] = lowdim_base(n);
  out["d"] = lowdim_dimension(n);
  const SpectralData sd = compute_spectral_data(n, lowdim_base(n));
  Json functions = Json::array();
  for (const ClosedFormEigenfunction& f : closed_form_eigenfunctions(n)) {
    Json entry;
    entry["tag"] = f.tag;
    entry["expected"] = fourier_eigenvalue_label(f.expected);
    entry["eigenvalue"] = fourier_eigenvalue_label(f.measured);
    entry["residual"] = f.residual;
    entry["spectral_ray_match"] = best_spectral_ray_match(f.values, sd);
    entry["values"] = values_to_json(f.values.values());
    functions.push_back(std::move(entry));
  }
  out["functions"] = std::move(functions);
  return out;
}

Json theta_report_to_json(GridSize n, int a, const std::vector<Complex>& taus) {
  Json out;
  out["N"] = n.value();
  out["a"] = a;
  Json lemma = Json::array();
  for (Complex tau : taus) {
    const DftThetaReport r = dft_theta_check(n, tau);
    lemma.push_back({{"tau", complex_to_json(tau)},
                     {"lemma_error", r.lemma_error},
                     {"jacobi_error", r.jacobi_error}});
  }
  out["dft_theta"] = std::move(lemma);

  if (n.value() <= 6 && taus.size() >= 2 && CommutantSpec(n, a).spectral_range()) {
    const WronskianReport w = wronskian_kernel_check(n, a, taus);
    Json wr;
    wr["status"] = wronskian_status_label(w.status);
    wr["message"] = w.message;
    Json ratios = Json::array();
    for (double d : w.denominator_ratio) ratios.push_back(d);
    wr["denominator_ratio"] = std::move(ratios);
    if (w.status == WronskianStatus::kOk || w.status == WronskianStatus::kMismatch) {
      wr["tau_spread"] = w.tau_spread;
      wr["kernel_error"] = w.kernel_error;
      wr["v"] = matrix_to_json(w.v);
      wr["w"] = matrix_to_json(w.w);
    }
    out["wronskian"] = std::move(wr);
  }

  if (n.value() == 2) {
    const N2IdentitiesSummary summary = n2_identities_check(taus);
    Json points = Json::array();
    for (const N2IdentityReport& p : summary.points) {
      points.push_back({{"tau", complex_to_json(p.tau)},
                        {"identity1", p.identity1},
                        {"identity2_corrected", p.identity2_corrected},
                        {"identity2_as_stated", p.identity2_as_stated},
                        {"landen1", p.landen1},
                        {"landen2_as_stated", p.landen2_as_stated},
                        {"wronskian_v", complex_to_json(p.wronskian_v)},
                        {"wronskian_w", complex_to_json(p.wronskian_w)}});
    }
    out["n2_identities"] = {{"max_asserted", summary.max_asserted}, {"points", std::move(points)}};
  }
  return out;
}

}  // namespace rdft
