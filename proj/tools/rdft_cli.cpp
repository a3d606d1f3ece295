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

// rdft command-line tool. Talks to the library only through the C API.
// Exit codes: 0 pass, 1 verification or numerical failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rdft/rdft.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::optional<int> n;
  std::optional<int> a;
  int n_min = 2;
  int n_max = 32;
  std::vector<std::string> taus;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  int threads = 0;
  bool inject_fault = false;
  std::string input;
  std::string input_hat;
  std::string out;
  std::string format = "json";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LibraryError : public std::runtime_error {
 public:
  LibraryError(rdft_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  rdft_status status() const { return status_; }

 private:
  rdft_status status_;
};

void check(rdft_status status) {
  if (status != RDFT_OK) throw LibraryError(status, rdft_last_error());
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  rdft_free_string(s);
  return out;
}

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--N is required");
  if (*cfg.n < 2) throw UsageError("--N must be at least 2");
  return *cfg.n;
}

int require_a(const RunConfig& cfg, int n) {
  if (!cfg.a) throw UsageError("--a is required");
  if (*cfg.a < 0 || 2 * *cfg.a + 1 > n) throw UsageError("--a must satisfy 0 <= a <= (N-1)/2");
  return *cfg.a;
}

// a >= (N-2)/4, needed wherever J has to decouple.
void require_spectral_range(int n, int a) {
  if (4 * a + 2 < n) throw UsageError("--a must satisfy a >= (N-2)/4 for this command");
}

void require_json_format(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("--format csv is only available for multiplicity-table");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

std::vector<double> parse_taus(const std::vector<std::string>& specs) {
  std::vector<double> out;
  if (specs.empty()) return {0.0, 1.0, 0.0, 2.0, 1.0, 1.0};
  for (const std::string& spec : specs) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw UsageError("--tau expects re,im");
    try {
      std::size_t used_re = 0;
      std::size_t used_im = 0;
      const std::string re_text = spec.substr(0, comma);
      const std::string im_text = spec.substr(comma + 1);
      const double re = std::stod(re_text, &used_re);
      const double im = std::stod(im_text, &used_im);
      if (used_re != re_text.size() || used_im != im_text.size()) throw std::invalid_argument(spec);
      if (!(im > 0.0)) throw UsageError("--tau needs a positive imaginary part");
      out.push_back(re);
      out.push_back(im);
    } catch (const std::logic_error&) {
      throw UsageError("--tau expects re,im but got " + spec);
    }
  }
  return out;
}

int cap_from_environment() {
  const char* env = std::getenv("RDFT_MAX_N");
  if (env == nullptr || *env == '\0') return -1;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 2) throw UsageError("RDFT_MAX_N must be an integer >= 2");
  return static_cast<int>(cap);
}

int cmd_verify(const RunConfig& cfg) {
  require_json_format(cfg);
  rdft_verify_options options;
  rdft_verify_options_init(&options);
  if (cfg.n) {
    options.n_min = options.n_max = require_n(cfg);
  } else {
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw UsageError("need 2 <= --n-min <= --n-max");
    options.n_min = cfg.n_min;
    options.n_max = cfg.n_max;
  }
  if (cfg.a) {
    if (!cfg.n) throw UsageError("--a needs --N");
    options.a = require_a(cfg, options.n_min);
  }
  if (const int cap = cap_from_environment(); cap > 0) {
    options.n_max = std::min(options.n_max, cap);
    if (options.n_max < options.n_min) throw UsageError("RDFT_MAX_N excludes every requested N");
  }
  if (cfg.seed != 0) options.seed = cfg.seed;
  if (!(cfg.tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");
  options.tol_scale = cfg.tol_scale;
  options.threads = cfg.threads;
  options.inject_fault = cfg.inject_fault ? 1 : 0;

  int passed = 0;
  char* json = nullptr;
  check(rdft_verify(&options, &passed, &json));
  emit(cfg, take(json));
  std::cerr << (passed ? "verify: all checks passed" : "verify: FAILED (see \"failing\" in report)") << "\n";
  return passed ? kExitPass : kExitFailure;
}

int cmd_spectrum(const RunConfig& cfg) {
  require_json_format(cfg);
  const int n = require_n(cfg);
  const int a = require_a(cfg, n);
  require_spectral_range(n, a);
  char* json = nullptr;
  check(rdft_spectrum_to_json(n, a, &json));
  emit(cfg, take(json));
  return kExitPass;
}

int cmd_multiplicity_table(const RunConfig& cfg) {
  const int n = require_n(cfg);
  if (n < 5) throw UsageError("multiplicity-table needs N >= 5");
  const int m = (n + 2) / 4;
  int a_min = m;
  int a_max = (n - 1) / 2;
  if (cfg.a) {
    a_min = a_max = require_a(cfg, n);
    if (a_min < m) throw UsageError("--a must satisfy a >= (N+2)/4 for multiplicity-table");
  }
  char* csv = nullptr;
  check(rdft_multiplicity_table_csv(n, a_min, a_max, &csv));
  const std::string text = take(csv);
  if (cfg.format == "csv") {
    emit(cfg, text);
    return kExitPass;
  }
  // JSON rendering of the same rows.
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // header
  std::ostringstream out;
  out << "{\n  \"N\": " << n << ",\n  \"rows\": [";
  bool first = true;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    out << (first ? "\n" : ",\n") << "    {\"a\": " << cells.at(1) << ", \"m_plus\": " << cells.at(2)
        << ", \"m_minus_i\": " << cells.at(3) << ", \"m_minus\": " << cells.at(4)
        << ", \"m_plus_i\": " << cells.at(5) << "}";
    first = false;
  }
  out << "\n  ]\n}\n";
  emit(cfg, out.str());
  return kExitPass;
}

int cmd_basis(const RunConfig& cfg) {
  require_json_format(cfg);
  const int n = require_n(cfg);
  const int a = require_a(cfg, n);
  if (4 * a + 2 <= n) throw UsageError("basis needs 4a+2 > N (C_a is zero otherwise)");
  char* json = nullptr;
  check(rdft_basis_to_json(n, a, &json));
  emit(cfg, take(json));
  return kExitPass;
}

int cmd_lowdim(const RunConfig& cfg) {
  require_json_format(cfg);
  const int n = require_n(cfg);
  if (n < 3) throw UsageError("lowdim needs N >= 3");
  char* json = nullptr;
  check(rdft_lowdim_to_json(n, &json));
  emit(cfg, take(json));
  return kExitPass;
}

int cmd_reconstruct(const RunConfig& cfg) {
  require_json_format(cfg);
  const int n = require_n(cfg);
  const int a = require_a(cfg, n);
  require_spectral_range(n, a);
  if (cfg.input.empty() || cfg.input_hat.empty()) throw UsageError("reconstruct needs --input and --input-hat");
  const std::string f_text = read_file(cfg.input);
  const std::string f_hat_text = read_file(cfg.input_hat);
  char* json = nullptr;
  check(rdft_reconstruct_json(n, a, f_text.c_str(), f_hat_text.c_str(), &json));
  emit(cfg, take(json));
  return kExitPass;
}

int cmd_theta_check(const RunConfig& cfg) {
  require_json_format(cfg);
  const int n = require_n(cfg);
  const int a = cfg.a ? require_a(cfg, n) : (n - 1) / 2;
  const std::vector<double> taus = parse_taus(cfg.taus);
  char* json = nullptr;
  check(rdft_theta_check_to_json(n, a, taus.data(), taus.size() / 2, &json));
  emit(cfg, take(json));
  return kExitPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Write output to this path instead of stdout");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", cfg.seed, "Seed for randomized checks (0: default)");
  sub->add_option("--tol-scale", cfg.tol_scale, "Multiply every tolerance by this factor");
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--N", cfg.n, "Grid size N");
  sub->add_option("--a", cfg.a, "Interval half-width a");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier eigenbases and interpolation on Z/NZ"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rdft_version()));

  RunConfig cfg;
  std::string command;
  const auto make = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&command, name] { command = name; });
    add_common(sub, cfg);
    add_grid(sub, cfg);
    return sub;
  };

  CLI::App* verify = make("verify", "Run the invariant suites; exit 0 iff all pass");
  verify->add_option("--n-min", cfg.n_min, "Smallest N of the sweep");
  verify->add_option("--n-max", cfg.n_max, "Largest N of the sweep");
  verify->add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)");
  verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb J by 1e-3 (negative control)")->group("");

  make("spectrum", "Spectral data of J on the inside and complement blocks");
  make("multiplicity-table", "F multiplicities on C_a as CSV");
  make("basis", "Extremal basis of C_a");
  make("lowdim", "Closed-form eigenfunctions for the smallest nonzero C_a");
  CLI::App* reconstruct = make("reconstruct", "Recover f from f and its DFT on [-a,a]");
  reconstruct->add_option("--input", cfg.input, "JSON samples of f");
  reconstruct->add_option("--input-hat", cfg.input_hat, "JSON samples of the DFT of f");
  CLI::App* theta = make("theta-check", "Theta-function identities and Wronskian kernels");
  theta->add_option("--tau", cfg.taus, "Point in the upper half plane as re,im (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (command == "verify") return cmd_verify(cfg);
    if (command == "spectrum") return cmd_spectrum(cfg);
    if (command == "multiplicity-table") return cmd_multiplicity_table(cfg);
    if (command == "basis") return cmd_basis(cfg);
    if (command == "lowdim") return cmd_lowdim(cfg);
    if (command == "reconstruct") return cmd_reconstruct(cfg);
    if (command == "theta-check") return cmd_theta_check(cfg);
    throw UsageError("unknown command");
  } catch (const UsageError& e) {
    std::cerr << "rdft: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "rdft: error: " << e.what() << "\n";
    const bool usage = e.status() == RDFT_INVALID_ARGUMENT || e.status() == RDFT_DOMAIN || e.status() == RDFT_PARSE;
    return usage ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "rdft: error: " << e.what() << "\n";
    return kExitFailure;
  }
}
