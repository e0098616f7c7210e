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

// Realizing F-profiles as points of the hyperbolic plane at a finite scale N
// and measuring how far the rescaled hyperbolic distance is from the tree
// distance. A profile (depth ℓ, top, {g ↦ c}) becomes the polar point
//   ρ = N·ℓ,   φ = top + Σ c·e^{-N·g}  (mod 2π),
// i.e. the formal symbol u of the levelled numbers is read as e^{-N}.

#include "asymptree/hyperbolic.hpp"
#include "asymptree/levelled.hpp"
#include "asymptree/tree_space.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asymptree::correspondence {

struct Realization {
  hyperbolic::PolarPoint point;
  double scale;
  tree::ProfileF source;
};

struct ConvergenceRow {
  std::string pair;
  double n;
  Rational tree_delta;
  double hyper_scaled;
  double error;
};

/// Throws std::invalid_argument unless every support coefficient lies in (-π, π) \ {0}.
void check_admissible(const tree::ProfileF& p);

/// Throws std::invalid_argument for n < 1 or an inadmissible profile.
Realization realize_at_scale(const tree::ProfileF& p, double n);

ConvergenceRow pair_error(const tree::ProfileF& p1, const tree::ProfileF& p2, double n,
                          std::string label = "0-1");

/// One row per unordered pair (j < k) and scale, ordered by (pair, scale).
/// Throws std::invalid_argument for fewer than two profiles or scales that
/// are not strictly increasing.
std::vector<ConvergenceRow> subcone_witness(std::span<const tree::ProfileF> config, std::span<const double> scales);

/// Single-threaded reference for subcone_witness.
std::vector<ConvergenceRow> serial_subcone_witness(std::span<const tree::ProfileF> config,
                                                   std::span<const double> scales);

struct ScaleSummary {
  double n;
  double max_error;
};

/// Largest error at each scale, in first-appearance order of the scales.
std::vector<ScaleSummary> max_error_by_scale(std::span<const ConvergenceRow> rows);

// Symbolic side: the same profiles as circle-valued levelled numbers.

/// top + Σ c·u^g.
levelled::CircleLevelled<double> to_circle_levelled(const tree::ProfileF& p);

/// Exponent of the leading term of φ_a - φ_b; 0 when the tops differ,
/// nullopt when the two angles coincide.
std::optional<Rational> angular_level(const tree::ProfileF& a, const tree::ProfileF& b);

/// max(|ℓa - ℓb|, ℓa + ℓb - 2Φ) with Φ = angular_level (the second branch is
/// absent when the angles coincide).
Rational analytic_limit(const tree::ProfileF& a, const tree::ProfileF& b);

/// Where Φ falls relative to the depths, with ℓ₁ ≤ ℓ₂ the sorted depths.
enum class LimitCase { within_shorter, between, beyond_longer };

LimitCase classify(const tree::ProfileF& a, const tree::ProfileF& b);

/// The same limit written per case: max(ℓ₁ - Φ, 0) + max(ℓ₂ - Φ, ℓ₂ - ℓ₁).
Rational analytic_limit_by_cases(const tree::ProfileF& a, const tree::ProfileF& b);

}  // namespace asymptree::correspondence
