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

#include "rdft/rdft.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "rdft/error.hpp"
#include "rdft/verify.hpp"

struct rdft_grid_function {
  rdft::GridFunction f;
};

struct rdft_spectrum {
  rdft::SpectralData data;
  rdft::Multiplicities counts;
};

struct rdft_kernel {
  rdft::InterpolationKernel kernel;
};

namespace {

thread_local std::string g_last_error;

rdft_status status_of(rdft::ErrorCode code) {
  switch (code) {
    case rdft::ErrorCode::kInvalidArgument: return RDFT_INVALID_ARGUMENT;
    case rdft::ErrorCode::kDomain: return RDFT_DOMAIN;
    case rdft::ErrorCode::kNumerical: return RDFT_NUMERICAL;
    case rdft::ErrorCode::kParse: return RDFT_PARSE;
  }
  return RDFT_INTERNAL;
}

template <typename Body>
rdft_status guarded(Body body) {
  g_last_error.clear();
  try {
    body();
    return RDFT_OK;
  } catch (const rdft::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RDFT_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RDFT_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) rdft::fail(rdft::ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rdft::ComplexVector read_interleaved(const double* data, int count) {
  rdft::ComplexVector out(count);
  for (int k = 0; k < count; ++k) out[k] = rdft::Complex(data[2 * k], data[2 * k + 1]);
  return out;
}

rdft_grid_function* wrap(rdft::GridFunction f) { return new rdft_grid_function{std::move(f)}; }

}  // namespace

extern "C" {

const char* rdft_last_error(void) { return g_last_error.c_str(); }

void rdft_free_string(char* s) { std::free(s); }

const char* rdft_version(void) { return "0.1.0"; }

rdft_status rdft_grid_function_create(int n, const double* interleaved, rdft_grid_function** out) {
  return guarded([&] {
    need(out, "out");
    const rdft::GridSize grid(n);
    rdft::GridFunction f(grid);
    if (interleaved != nullptr) f = rdft::GridFunction(grid, read_interleaved(interleaved, n));
    *out = wrap(std::move(f));
  });
}

rdft_status rdft_grid_function_from_json(const char* json, rdft_grid_function** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = wrap(rdft::grid_function_from_json(rdft::parse_json(json)));
  });
}

rdft_status rdft_grid_function_to_json(const rdft_grid_function* f, char** json) {
  return guarded([&] {
    need(f, "f");
    need(json, "json");
    *json = copy_string(rdft::dump_json(rdft::grid_function_to_json(f->f)));
  });
}

int rdft_grid_function_size(const rdft_grid_function* f) { return f == nullptr ? 0 : f->f.size(); }

rdft_status rdft_grid_function_values(const rdft_grid_function* f, double* interleaved) {
  return guarded([&] {
    need(f, "f");
    need(interleaved, "interleaved");
    for (int k = 0; k < f->f.size(); ++k) {
      interleaved[2 * k] = f->f[k].real();
      interleaved[2 * k + 1] = f->f[k].imag();
    }
  });
}

void rdft_grid_function_destroy(rdft_grid_function* f) { delete f; }

rdft_status rdft_dft(const rdft_grid_function* f, rdft_grid_function** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = wrap(rdft::dft(f->f));
  });
}

rdft_status rdft_idft(const rdft_grid_function* f, rdft_grid_function** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = wrap(rdft::idft(f->f));
  });
}

rdft_status rdft_dim_ca(int n, int a, int* dim) {
  return guarded([&] {
    need(dim, "dim");
    *dim = rdft::dim_ca_rank_oracle(rdft::GridSize(n), a);
  });
}

rdft_status rdft_spectrum_create(int n, int a, rdft_spectrum** out) {
  return guarded([&] {
    need(out, "out");
    const rdft::GridSize grid(n);
    rdft::SpectralData sd = rdft::compute_spectral_data(grid, a);
    rdft::Multiplicities counts{0, 0, 0, 0};
    for (const auto& action : rdft::fourier_eigenvalues_on_ca(sd, rdft::dft_matrix(grid))) {
      ++counts[static_cast<int>(action.which)];
    }
    *out = new rdft_spectrum{std::move(sd), counts};
  });
}

void rdft_spectrum_destroy(rdft_spectrum* s) { delete s; }

rdft_status rdft_spectrum_counts(const rdft_spectrum* s, int* simple, int* doubled) {
  return guarded([&] {
    need(s, "spectrum");
    if (simple != nullptr) *simple = static_cast<int>(s->data.simple.size());
    if (doubled != nullptr) *doubled = static_cast<int>(s->data.doubled.size());
  });
}

rdft_status rdft_spectrum_multiplicities(const rdft_spectrum* s, int counts[4]) {
  return guarded([&] {
    need(s, "spectrum");
    need(counts, "counts");
    for (int c = 0; c < 4; ++c) counts[c] = s->counts[c];
  });
}

rdft_status rdft_spectrum_to_json(int n, int a, char** json) {
  return guarded([&] {
    need(json, "json");
    *json = copy_string(rdft::dump_json(rdft::spectrum_to_json(rdft::GridSize(n), a)));
  });
}

rdft_status rdft_multiplicity_table_csv(int n, int a_min, int a_max, char** csv) {
  return guarded([&] {
    need(csv, "csv");
    const rdft::GridSize grid(n);
    rdft::require(a_min <= a_max, "a_min must not exceed a_max");
    std::ostringstream out;
    out << rdft::multiplicity_csv_header() << '\n';
    for (int a = a_min; a <= a_max; ++a) {
      out << rdft::multiplicity_csv_row(grid, a, rdft::multiplicity_table(grid, a)) << '\n';
    }
    *csv = copy_string(out.str());
  });
}

rdft_status rdft_multiplicity_closed_form(int n, int a, int counts[4]) {
  return guarded([&] {
    need(counts, "counts");
    const rdft::Multiplicities m = rdft::multiplicity_closed_form(rdft::GridSize(n), a);
    for (int c = 0; c < 4; ++c) counts[c] = m[c];
  });
}

rdft_status rdft_basis_to_json(int n, int a, char** json) {
  return guarded([&] {
    need(json, "json");
    *json = copy_string(rdft::dump_json(rdft::basis_to_json(rdft::extremal_basis(rdft::GridSize(n), a))));
  });
}

rdft_status rdft_lowdim_to_json(int n, char** json) {
  return guarded([&] {
    need(json, "json");
    *json = copy_string(rdft::dump_json(rdft::lowdim_to_json(rdft::GridSize(n))));
  });
}

rdft_status rdft_kernel_create(int n, int a, rdft_kernel** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rdft_kernel{rdft::interpolation_kernel(rdft::GridSize(n), a)};
  });
}

void rdft_kernel_destroy(rdft_kernel* k) { delete k; }

rdft_status rdft_kernel_condition(const rdft_kernel* k, double* condition) {
  return guarded([&] {
    need(k, "kernel");
    need(condition, "condition");
    *condition = k->kernel.condition;
  });
}

rdft_status rdft_kernel_to_json(const rdft_kernel* k, char** json) {
  return guarded([&] {
    need(k, "kernel");
    need(json, "json");
    *json = copy_string(rdft::dump_json(rdft::kernel_to_json(k->kernel)));
  });
}

rdft_status rdft_kernel_reconstruct(const rdft_kernel* k, const double* f_inside, const double* f_hat_inside,
                                    rdft_grid_function** out) {
  return guarded([&] {
    need(k, "kernel");
    need(f_inside, "f_inside");
    need(f_hat_inside, "f_hat_inside");
    need(out, "out");
    const int width = 2 * k->kernel.a + 1;
    *out = wrap(rdft::reconstruct(k->kernel, read_interleaved(f_inside, width),
                                  read_interleaved(f_hat_inside, width)));
  });
}

rdft_status rdft_reconstruct_json(int n, int a, const char* f_json, const char* f_hat_json, char** json) {
  return guarded([&] {
    need(f_json, "f_json");
    need(f_hat_json, "f_hat_json");
    need(json, "json");
    const rdft::IntervalSamples f = rdft::interval_samples_from_json(rdft::parse_json(f_json), a);
    const rdft::IntervalSamples f_hat = rdft::interval_samples_from_json(rdft::parse_json(f_hat_json), a);
    if (f.n.value() != n || f_hat.n.value() != n) {
      rdft::fail(rdft::ErrorCode::kParse, "input N does not match --N");
    }
    const rdft::InterpolationKernel kernel = rdft::interpolation_kernel(rdft::GridSize(n), a);
    rdft::Json out = rdft::grid_function_to_json(rdft::reconstruct(kernel, f.values, f_hat.values));
    out["a"] = a;
    out["condition"] = kernel.condition;
    *json = copy_string(rdft::dump_json(out));
  });
}

rdft_status rdft_theta(int n, double x, double tau_re, double tau_im, int order, double* re, double* im) {
  return guarded([&] {
    need(re, "re");
    need(im, "im");
    const rdft::Complex value = rdft::theta(x, rdft::Complex(tau_re, tau_im), rdft::GridSize(n), order);
    *re = value.real();
    *im = value.imag();
  });
}

rdft_status rdft_theta_check_to_json(int n, int a, const double* taus, size_t tau_count, char** json) {
  return guarded([&] {
    need(taus, "taus");
    need(json, "json");
    std::vector<rdft::Complex> points;
    for (size_t k = 0; k < tau_count; ++k) points.emplace_back(taus[2 * k], taus[2 * k + 1]);
    *json = copy_string(rdft::dump_json(rdft::theta_report_to_json(rdft::GridSize(n), a, points)));
  });
}

void rdft_verify_options_init(rdft_verify_options* options) {
  if (options == nullptr) return;
  const rdft::VerifyOptions defaults;
  options->n_min = defaults.n_min;
  options->n_max = defaults.n_max;
  options->a = defaults.a;
  options->seed = defaults.seed;
  options->tol_scale = defaults.tol_scale;
  options->inject_fault = defaults.inject_fault ? 1 : 0;
  options->threads = defaults.threads;
}

rdft_status rdft_verify(const rdft_verify_options* options, int* passed, char** json) {
  return guarded([&] {
    need(options, "options");
    need(passed, "passed");
    rdft::VerifyOptions opts;
    opts.n_min = options->n_min;
    opts.n_max = options->n_max;
    opts.a = options->a;
    opts.seed = options->seed;
    opts.tol_scale = options->tol_scale;
    opts.inject_fault = options->inject_fault != 0;
    opts.threads = options->threads;
    const rdft::VerifyReport report = rdft::run_verify(opts);
    *passed = report.passed() ? 1 : 0;
    if (json != nullptr) *json = copy_string(rdft::dump_json(rdft::verify_report_to_json(report)));
  });
}

}  // extern "C"
