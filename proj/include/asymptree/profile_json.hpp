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

#include "asymptree/tree_space.hpp"

#include <json.hpp>

#include <filesystem>

namespace asymptree::tree {

// Wire format:
//   {"kind":"D|C|F","depth":"p/q","top":<radians, F only>,"support":[["p/q", value], ...]}
// For kind C the support list holds the breakpoints (x, f(x)), starting at
// (0, 0); breakpoint values are written as exact "p/q" strings. For D and F
// the values are JSON numbers. Depths may also be given as JSON integers.

nlohmann::json to_json(const AnyProfile& p);

/// Throws std::invalid_argument describing the first schema violation.
AnyProfile profile_from_json(const nlohmann::json& j);

/// Throws std::runtime_error if the file cannot be opened, and
/// std::invalid_argument (or nlohmann::json::parse_error) on bad contents.
AnyProfile load_profile(const std::filesystem::path& path);

}  // namespace asymptree::tree
