/*
 * Copyright 2026 The asymptree Authors
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

#include "asymptree/hyperbolic.hpp"

#include <stdexcept>

namespace asymptree::hyperbolic {

std::vector<double> polar_distance_batch(std::span<const PolarPoint> a, std::span<const PolarPoint> b) {
  if (a.size() != b.size()) throw std::invalid_argument("batch operands differ in length");
  std::vector<double> out(a.size());
  const auto count = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = polar_distance(a[i], b[i]);
  return out;
}

std::vector<double> serial_polar_distance_batch(std::span<const PolarPoint> a, std::span<const PolarPoint> b) {
  if (a.size() != b.size()) throw std::invalid_argument("batch operands differ in length");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(polar_distance(a[i], b[i]));
  return out;
}

std::vector<double> convergence_error_batch(std::span<const AsymptoticParams> params) {
  std::vector<double> out(params.size());
  const auto count = static_cast<std::ptrdiff_t>(params.size());
  // Cost grows with N·Φ (angle precision), so hand out cells dynamically.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = convergence_error(params[i]);
  return out;
}

std::vector<double> serial_convergence_error_batch(std::span<const AsymptoticParams> params) {
  std::vector<double> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(convergence_error(p));
  return out;
}

}  // namespace asymptree::hyperbolic
