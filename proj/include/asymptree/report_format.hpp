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

// CSV and JSON renderings of experiment output. CSV uses ',' separators, '.'
// decimals, a header row and LF line endings; floating-point columns carry 12
// significant digits.

#include "asymptree/correspondence.hpp"
#include "asymptree/experiments.hpp"

#include <string>
#include <vector>

namespace asymptree::report {

enum class Format { csv, json };

std::string render(const experiments::VerifyReport& r, Format f);
std::string render(const experiments::GridReport& r, Format f);
std::string render(const std::vector<correspondence::ConvergenceRow>& rows, Format f);

}  // namespace asymptree::report
