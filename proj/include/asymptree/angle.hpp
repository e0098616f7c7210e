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

#include <mpfr.h>

#include <span>

namespace asymptree {

/// One exponentially small contribution `coefficient * exp(-decay)` to an angle.
struct AngleTerm {
  double coefficient;
  double decay;
};

/// A point of the circle R / 2πZ, normalized into [0, 2π).
///
/// Angles in the asymptotic regime differ by amounts like exp(-400 * 3), far
/// below what a double next to an O(1) value can resolve (and below the
/// double exponent range). The value is therefore held as a multiprecision
/// float whose working precision is sized at construction to represent the
/// requested sum exactly, then rounded once by the 2π reduction.
class Angle {
 public:
  Angle();
  explicit Angle(double radians);

  /// base + Σ coefficient·exp(-decay), reduced mod 2π.
  static Angle from_terms(double base, std::span<const AngleTerm> terms);

  Angle(const Angle& other);
  Angle(Angle&& other) noexcept;
  Angle& operator=(const Angle& other);
  Angle& operator=(Angle&& other) noexcept;
  ~Angle();

  /// Nearest double in [0, 2π).
  double radians() const;
  long precision_bits() const { return mpfr_get_prec(value_); }

  /// log|sin((a - b) / 2)|, or -infinity when the angles coincide.
  friend double log_half_chord(const Angle& a, const Angle& b);

  friend bool operator==(const Angle& a, const Angle& b);
  /// Total order on the normalized representatives; used to canonicalize
  /// argument order in symmetric kernels.
  friend bool operator<(const Angle& a, const Angle& b);

 private:
  explicit Angle(long precision);
  void reduce();

  mpfr_t value_;
};

}  // namespace asymptree
