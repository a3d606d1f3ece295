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

#include "rdft/qseries.hpp"

#include "rdft/dft.hpp"
#include "rdft/error.hpp"

namespace rdft {

Complex q_pochhammer(Complex z, Complex q, int n) {
  require(n >= 0, "q-Pochhammer length must be non-negative");
  Complex product = 1.0;
  Complex term = z;
  for (int k = 0; k < n; ++k) {
    product *= 1.0 - term;
    term *= q;
  }
  return product;
}

Complex gaussian_binomial(Complex q, int n, int k) {
  if (k < 0 || k > n) return 0.0;
  Complex product = 1.0;
  for (int j = 1; j <= k; ++j) {
    product *= (1.0 - std::pow(q, n - j + 1)) / (1.0 - std::pow(q, j));
  }
  return product;
}

Complex gaussian_binomial_at_root(GridSize grid, int n, int k) {
  require(n >= 0 && n < grid.value(), "Gaussian binomial at a root of unity needs 0 <= n < N");
  if (k < 0 || k > n) return 0.0;
  Complex product = 1.0;
  for (int j = 1; j <= k; ++j) {
    product *= (1.0 - root_of_unity(grid, n - j + 1)) / (1.0 - root_of_unity(grid, j));
  }
  return product;
}

}  // namespace rdft
