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

// Seeded generators for property suites and convergence experiments.
// Tree pools are grown by restricting an existing member and extending it,
// so sampled tuples share prefixes and branch at nontrivial depths.

#include "asymptree/levelled.hpp"
#include "asymptree/rng.hpp"
#include "asymptree/tree_space.hpp"

#include <vector>

namespace asymptree::sampling {

std::vector<tree::ProfileC> family_c(rng::Rng& rng, std::size_t count);
std::vector<tree::ProfileD> family_d(rng::Rng& rng, std::size_t count);
std::vector<tree::ProfileF> family_f(rng::Rng& rng, std::size_t count);

/// Two distinct ProfileF with depth ≤ 3 on a 1/10 grid, at most five
/// support points, coefficient magnitudes in [0.1, π - 0.1], and a first
/// difference that is at least 0.1 in size.
std::pair<tree::ProfileF, tree::ProfileF> admissible_pair(rng::Rng& rng);

/// Up to `max_terms` terms, levels p/q with |p| ≤ 24, q ≤ 6, coefficients p/q
/// with |p| ≤ 50, q ≤ 12.
levelled::LevelledNumber<Rational> levelled_number(rng::Rng& rng, std::size_t max_terms);
levelled::Spectrum<Rational> spectrum(rng::Rng& rng, std::size_t max_terms);

}  // namespace asymptree::sampling
