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

// Exercises librdft through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rdft/rdft.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  rdft_free_string(s);
  return out;
}

std::vector<double> random_interleaved(int count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> out(2 * count);
  for (double& v : out) v = normal(rng);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("status codes and last error") {
    rdft_grid_function* f = nullptr;
    CHECK(rdft_grid_function_create(1, nullptr, &f) == RDFT_INVALID_ARGUMENT);
    CHECK(f == nullptr);
    CHECK(std::strlen(rdft_last_error()) > 0);
    CHECK(rdft_grid_function_create(4, nullptr, &f) == RDFT_OK);
    CHECK(std::strlen(rdft_last_error()) == 0);
    CHECK(rdft_grid_function_size(f) == 4);
    rdft_grid_function_destroy(f);
    CHECK(rdft_grid_function_create(4, nullptr, nullptr) == RDFT_INVALID_ARGUMENT);
    CHECK(rdft_grid_function_from_json("{", &f) == RDFT_PARSE);
    rdft_spectrum* s = nullptr;
    CHECK(rdft_spectrum_create(12, 2, &s) == RDFT_DOMAIN);
    CHECK(std::string(rdft_version()).size() > 0);
    rdft_grid_function_destroy(nullptr);
    rdft_spectrum_destroy(nullptr);
    rdft_kernel_destroy(nullptr);
  }

  TEST_CASE("errors are per thread") {
    rdft_grid_function* f = nullptr;
    REQUIRE(rdft_grid_function_create(0, nullptr, &f) != RDFT_OK);
    std::string other;
    std::thread worker([&] { other = rdft_last_error(); });
    worker.join();
    CHECK(other.empty());
    CHECK(std::strlen(rdft_last_error()) > 0);
  }

  TEST_CASE("transform round trip and JSON") {
    std::mt19937_64 rng(20260101);
    const std::vector<double> values = random_interleaved(9, rng);
    rdft_grid_function* f = nullptr;
    REQUIRE(rdft_grid_function_create(9, values.data(), &f) == RDFT_OK);
    rdft_grid_function* hat = nullptr;
    REQUIRE(rdft_dft(f, &hat) == RDFT_OK);
    // direct sum for one coefficient
    std::complex<double> direct = 0;
    for (int j = 0; j < 9; ++j) direct += std::polar(1.0, -2 * M_PI * j * 2 / 9) * std::complex<double>(values[2 * j], values[2 * j + 1]);
    std::vector<double> hat_values(18);
    REQUIRE(rdft_grid_function_values(hat, hat_values.data()) == RDFT_OK);
    CHECK(std::abs(std::complex<double>(hat_values[4], hat_values[5]) - direct) <= 1e-12);
    rdft_grid_function* back = nullptr;
    REQUIRE(rdft_idft(hat, &back) == RDFT_OK);
    std::vector<double> back_values(18);
    REQUIRE(rdft_grid_function_values(back, back_values.data()) == RDFT_OK);
    for (int k = 0; k < 18; ++k) CHECK(std::abs(back_values[k] - values[k]) <= 1e-12);

    char* json = nullptr;
    REQUIRE(rdft_grid_function_to_json(f, &json) == RDFT_OK);
    const std::string text = take(json);
    rdft_grid_function* parsed = nullptr;
    REQUIRE(rdft_grid_function_from_json(text.c_str(), &parsed) == RDFT_OK);
    std::vector<double> parsed_values(18);
    REQUIRE(rdft_grid_function_values(parsed, parsed_values.data()) == RDFT_OK);
    CHECK(parsed_values == values);
    for (rdft_grid_function* g : {f, hat, back, parsed}) rdft_grid_function_destroy(g);
  }

  TEST_CASE("spectrum and multiplicities") {
    rdft_spectrum* s = nullptr;
    REQUIRE(rdft_spectrum_create(8, 2, &s) == RDFT_OK);
    int simple = 0;
    int doubled = 0;
    REQUIRE(rdft_spectrum_counts(s, &simple, &doubled) == RDFT_OK);
    CHECK(simple == 2);
    CHECK(doubled == 3);
    int counts[4] = {};
    REQUIRE(rdft_spectrum_multiplicities(s, counts) == RDFT_OK);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 0);
    CHECK(counts[3] == 0);
    rdft_spectrum_destroy(s);
    int closed[4] = {};
    REQUIRE(rdft_multiplicity_closed_form(8, 2, closed) == RDFT_OK);
    CHECK(std::equal(closed, closed + 4, counts));
    int dim = -1;
    REQUIRE(rdft_dim_ca(13, 6, &dim) == RDFT_OK);
    CHECK(dim == 13);
    char* csv = nullptr;
    REQUIRE(rdft_multiplicity_table_csv(8, 2, 3, &csv) == RDFT_OK);
    CHECK(take(csv) == "N,a,m_plus,m_minus_i,m_minus,m_plus_i\n8,2,1,1,0,0\n8,3,2,2,1,1\n");
    char* json = nullptr;
    REQUIRE(rdft_spectrum_to_json(6, 1, &json) == RDFT_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["s"] == 3);
  }

  TEST_CASE("kernel reconstruction") {
    std::mt19937_64 rng(20260102);
    const int n = 10;
    const int a = 3;
    const std::vector<double> f = random_interleaved(n, rng);
    rdft_grid_function* fn = nullptr;
    rdft_grid_function* hat = nullptr;
    REQUIRE(rdft_grid_function_create(n, f.data(), &fn) == RDFT_OK);
    REQUIRE(rdft_dft(fn, &hat) == RDFT_OK);
    std::vector<double> hat_values(2 * n);
    REQUIRE(rdft_grid_function_values(hat, hat_values.data()) == RDFT_OK);
    std::vector<double> f_in;
    std::vector<double> hat_in;
    for (int y = -a; y <= a; ++y) {
      const int k = (y + n) % n;
      f_in.insert(f_in.end(), {f[2 * k], f[2 * k + 1]});
      hat_in.insert(hat_in.end(), {hat_values[2 * k], hat_values[2 * k + 1]});
    }
    rdft_kernel* kernel = nullptr;
    REQUIRE(rdft_kernel_create(n, a, &kernel) == RDFT_OK);
    double condition = 0.0;
    REQUIRE(rdft_kernel_condition(kernel, &condition) == RDFT_OK);
    CHECK(condition >= 1.0);
    rdft_grid_function* rebuilt = nullptr;
    REQUIRE(rdft_kernel_reconstruct(kernel, f_in.data(), hat_in.data(), &rebuilt) == RDFT_OK);
    std::vector<double> rebuilt_values(2 * n);
    REQUIRE(rdft_grid_function_values(rebuilt, rebuilt_values.data()) == RDFT_OK);
    for (int k = 0; k < 2 * n; ++k) CHECK(std::abs(rebuilt_values[k] - f[k]) <= 1e-8);
    char* json = nullptr;
    REQUIRE(rdft_kernel_to_json(kernel, &json) == RDFT_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["v"].size() == 7u);
    CHECK(doc["v"][0].size() == 3u);
    rdft_kernel_destroy(kernel);
    for (rdft_grid_function* g : {fn, hat, rebuilt}) rdft_grid_function_destroy(g);
    CHECK(rdft_kernel_create(12, 2, &kernel) == RDFT_DOMAIN);
  }

  TEST_CASE("reconstruction from JSON documents") {
    const char* f_doc = R"({"N": 2, "a": 0, "values": [[3.0, 0.0]]})";
    const char* hat_doc = R"({"N": 2, "a": 0, "values": [[5.0, 0.0]]})";
    char* json = nullptr;
    REQUIRE(rdft_reconstruct_json(2, 0, f_doc, hat_doc, &json) == RDFT_OK);
    const auto doc = nlohmann::json::parse(take(json));
    // f(1) = -f(0) + f^(0)
    CHECK(doc["values"][1][0].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rdft_reconstruct_json(3, 0, f_doc, hat_doc, &json) == RDFT_PARSE);
  }

  TEST_CASE("theta, basis, lowdim, verify") {
    double re = 0.0;
    double im = 0.0;
    REQUIRE(rdft_theta(2, 0.0, 0.0, 1.0, 0, &re, &im) == RDFT_OK);
    double direct = 0.0;
    for (int k = -30; k <= 30; ++k) direct += std::exp(-M_PI * 2.0 * k * k);
    CHECK(re == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::abs(im) <= 1e-15);
    CHECK(rdft_theta(2, 0.0, 0.0, -1.0, 0, &re, &im) == RDFT_DOMAIN);

    char* json = nullptr;
    REQUIRE(rdft_basis_to_json(5, 1, &json) == RDFT_OK);
    CHECK(nlohmann::json::parse(take(json))["functions"].size() == 1u);
    REQUIRE(rdft_lowdim_to_json(6, &json) == RDFT_OK);
    CHECK(nlohmann::json::parse(take(json))["functions"].size() == 4u);
    const double taus[] = {0.0, 1.0, 1.0, 1.0};
    REQUIRE(rdft_theta_check_to_json(2, 0, taus, 2, &json) == RDFT_OK);
    CHECK(nlohmann::json::parse(take(json))["wronskian"]["status"] == "ok");

    rdft_verify_options options;
    rdft_verify_options_init(&options);
    options.n_min = options.n_max = 9;
    int passed = 0;
    REQUIRE(rdft_verify(&options, &passed, &json) == RDFT_OK);
    CHECK(passed == 1);
    CHECK(nlohmann::json::parse(take(json))["passed"] == true);
    options.inject_fault = 1;
    REQUIRE(rdft_verify(&options, &passed, nullptr) == RDFT_OK);
    CHECK(passed == 0);
  }
}
