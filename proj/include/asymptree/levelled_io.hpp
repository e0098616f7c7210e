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

#include "asymptree/levelled.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace asymptree::levelled {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `c1*u^g1 + c2*u^g2 + ...`. Coefficients are integers, fractions
/// `p/q` or decimals; exponents are integers or `p/q`. A bare `u^g` has
/// coefficient 1, a bare coefficient has exponent 0, and `0` is zero.
LevelledNumber<Rational> parse_levelled(std::string_view text);

/// Inverse of parse_levelled; terms in decreasing magnitude, joined by " + ".
std::string format_levelled(const LevelledNumber<Rational>& x);

/// `[(c1, g1), (c2, g2)]`, or `[]` for the empty spectrum.
std::string format_spectrum(const Spectrum<Rational>& s);

}  // namespace asymptree::levelled
