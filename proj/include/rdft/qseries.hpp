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

// q-Pochhammer symbols and Gaussian binomials, evaluated as finite products.

#ifndef RDFT_QSERIES_HPP
#define RDFT_QSERIES_HPP

#include "rdft/zmod.hpp"

namespace rdft {

/// (z; q)_n = (1 - z)(1 - z q) ... (1 - z q^{n-1}); (z; q)_0 = 1.
Complex q_pochhammer(Complex z, Complex q, int n);

/// binom(n, k)_q = prod_{j=1}^{k} (1 - q^{n-j+1}) / (1 - q^j); zero outside
/// 0 <= k <= n.
Complex gaussian_binomial(Complex q, int n, int k);

/// binom(n, k) at q = exp(2 pi i / N), using exact residue powers. Requires
/// 0 <= n < N so that no denominator vanishes.
Complex gaussian_binomial_at_root(GridSize grid, int n, int k);

}  // namespace rdft

#endif  // RDFT_QSERIES_HPP
