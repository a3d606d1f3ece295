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

// JSON documents. Field order is fixed and doubles are written in shortest
// round-trip form, so identical inputs give byte-identical output.

#ifndef RDFT_JSON_IO_HPP
#define RDFT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rdft/extremal.hpp"
#include "rdft/interp.hpp"
#include "rdft/lowdim.hpp"
#include "rdft/theta.hpp"

namespace rdft {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"N": n, "values": [[re, im], ...]} in canonical order.
Json grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const Json& j);

/// Samples on [-a,a] in signed order. Accepts a full grid function (entries
/// outside [-a,a] are ignored) or {"N", "a", "values"} with 2a+1 entries.
struct IntervalSamples {
  GridSize n;
  int a;
  ComplexVector values;
};
IntervalSamples interval_samples_from_json(const Json& j, int a);

Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

Json spectrum_to_json(GridSize n, int a);
Json kernel_to_json(const InterpolationKernel& kernel);
Json basis_to_json(const ExtremalBasis& basis);
Json lowdim_to_json(GridSize n);
Json theta_report_to_json(GridSize n, int a, const std::vector<Complex>& taus);

}  // namespace rdft

#endif  // RDFT_JSON_IO_HPP
