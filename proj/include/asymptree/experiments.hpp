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

#pragma once

#include "asymptree/correspondence.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace asymptree::experiments {

enum class Suite {
  metric_axioms_c,
  metric_axioms_d,
  metric_axioms_f,
  four_point_c,
  four_point_d,
  four_point_f,
  geodesic_c,
  geodesic_d,
  geodesic_f,
  cross_formula,
};

inline constexpr Suite kAllSuites[] = {
    Suite::metric_axioms_c, Suite::metric_axioms_d, Suite::metric_axioms_f, Suite::four_point_c,
    Suite::four_point_d,    Suite::four_point_f,    Suite::geodesic_c,      Suite::geodesic_d,
    Suite::geodesic_f,      Suite::cross_formula,
};

std::string suite_name(Suite s);

struct PropertyCount {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<PropertyCount> properties;

  bool ok() const;
};

/// Runs `trials` independent samples of one suite. Trial i draws from its
/// own stream, so the counts do not depend on scheduling.
PropertyCount run_suite(Suite suite, std::uint64_t seed, std::uint64_t trials);
PropertyCount serial_run_suite(Suite suite, std::uint64_t seed, std::uint64_t trials);

/// All suites in kAllSuites order. Throws std::invalid_argument for trials == 0.
VerifyReport verify_metric(std::uint64_t seed, std::uint64_t trials);
VerifyReport serial_verify_metric(std::uint64_t seed, std::uint64_t trials);

struct GridRow {
  double r1;
  double r2;
  double cap_phi;
  double n;
  double error;
};

struct GridReport {
  std::vector<GridRow> rows;
  std::vector<correspondence::ScaleSummary> summary;
};

/// {0.5, 1, ..., 3}.
std::vector<double> grid_axis();

/// Every (R1, R2, Φ) on grid_axis()³ at every scale, ordered by R1, R2, Φ,
/// then scale; plus the largest error per scale.
GridReport convergence_grid(std::span<const double> scales);
GridReport serial_convergence_grid(std::span<const double> scales);

/// The bundled four-profile configuration for the subcone demo.
std::vector<tree::ProfileF> demo_configuration();

std::vector<correspondence::ConvergenceRow> subcone_demo(std::span<const double> scales);

/// Throws std::invalid_argument unless scales are nonempty, ≥ 1 and strictly increasing.
void check_scales(std::span<const double> scales);

}  // namespace asymptree::experiments
