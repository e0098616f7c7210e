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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asymptree {

/// Exact rational number. Backed by GMP; always kept canonical.
using Rational = mpq_class;

/// Parses "p", "p/q", or a plain decimal such as "-0.125" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Exact conversion of a finite double.
Rational rational_from_double(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace asymptree
