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

#include "asymptree/angle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace asymptree {
namespace {

constexpr long kBasePrecision = 64;
constexpr long kGuardBits = 16;

// Doubles are wrapped against the double nearest 2π first, so a base angle
// of exactly that double lands on 0 rather than just below the true 2π.
double wrap_double(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}
constexpr long kMaxPrecision = 1L << 24;

// RAII scratch value for intermediate results.
struct Scratch {
  explicit Scratch(long precision) { mpfr_init2(v, precision); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

void set_two_pi(mpfr_t out) {
  mpfr_const_pi(out, MPFR_RNDN);
  mpfr_mul_2ui(out, out, 1, MPFR_RNDN);
}

}  // namespace

Angle::Angle() : Angle(kBasePrecision) { mpfr_set_zero(value_, 1); }

Angle::Angle(long precision) { mpfr_init2(value_, std::clamp(precision, long{MPFR_PREC_MIN}, kMaxPrecision)); }

Angle::Angle(double radians) : Angle(kBasePrecision) {
  if (!std::isfinite(radians)) throw std::domain_error("angle must be finite");
  mpfr_set_d(value_, wrap_double(radians), MPFR_RNDN);
  reduce();
}

Angle Angle::from_terms(double base, std::span<const AngleTerm> terms) {
  if (!std::isfinite(base)) throw std::domain_error("angle must be finite");
  base = wrap_double(base);

  // Evaluate each term at base precision; they are then summed exactly.
  std::deque<Scratch> values;
  long top_exp = 3;  // exponent of 2π
  long bottom_exp = top_exp - kBasePrecision;
  if (base != 0.0) {
    int e = 0;
    std::frexp(base, &e);
    top_exp = std::max<long>(top_exp, e);
  }
  for (const auto& term : terms) {
    if (!std::isfinite(term.coefficient) || !std::isfinite(term.decay)) {
      throw std::domain_error("angle term must be finite");
    }
    if (term.coefficient == 0.0) continue;
    auto& v = values.emplace_back(kBasePrecision).v;
    mpfr_set_d(v, -term.decay, MPFR_RNDN);
    mpfr_exp(v, v, MPFR_RNDN);
    mpfr_mul_d(v, v, term.coefficient, MPFR_RNDN);
    if (mpfr_zero_p(v)) continue;
    top_exp = std::max<long>(top_exp, mpfr_get_exp(v));
    bottom_exp = std::min<long>(bottom_exp, mpfr_get_exp(v) - kBasePrecision);
  }

  Angle out(top_exp - bottom_exp + kGuardBits);
  mpfr_set_d(out.value_, base, MPFR_RNDN);
  for (auto& v : values) mpfr_add(out.value_, out.value_, v.v, MPFR_RNDN);
  out.reduce();
  return out;
}

Angle::Angle(const Angle& other) : Angle(mpfr_get_prec(other.value_)) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Angle::Angle(Angle&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Angle& Angle::operator=(const Angle& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Angle& Angle::operator=(Angle&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Angle::~Angle() { mpfr_clear(value_); }

void Angle::reduce() {
  Scratch two_pi(mpfr_get_prec(value_) + kGuardBits);
  set_two_pi(two_pi.v);
  mpfr_fmod(value_, value_, two_pi.v, MPFR_RNDN);
  if (mpfr_sgn(value_) < 0) mpfr_add(value_, value_, two_pi.v, MPFR_RNDN);
  // Rounding can land exactly on 2π, which is the same point as 0.
  if (mpfr_cmp(value_, two_pi.v) >= 0) mpfr_set_zero(value_, 1);
  if (mpfr_zero_p(value_)) mpfr_set_zero(value_, 1);
}

double Angle::radians() const { return mpfr_get_d(value_, MPFR_RNDN); }

double log_half_chord(const Angle& a, const Angle& b) {
  const long precision = std::max(mpfr_get_prec(a.value_), mpfr_get_prec(b.value_)) + kGuardBits;
  Scratch diff(precision);
  mpfr_sub(diff.v, a.value_, b.value_, MPFR_RNDN);
  if (mpfr_zero_p(diff.v)) return -std::numeric_limits<double>::infinity();

  // Fold into [-π, π] at full precision so the half angle is at most π/2 and
  // sin is well conditioned after rounding down to base precision.
  Scratch pi(precision);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  if (mpfr_cmpabs(diff.v, pi.v) > 0) {
    mpfr_mul_2ui(pi.v, pi.v, 1, MPFR_RNDN);
    if (mpfr_sgn(diff.v) > 0) {
      mpfr_sub(diff.v, diff.v, pi.v, MPFR_RNDN);
    } else {
      mpfr_add(diff.v, diff.v, pi.v, MPFR_RNDN);
    }
    if (mpfr_zero_p(diff.v)) return -std::numeric_limits<double>::infinity();
  }

  Scratch half(kBasePrecision);
  mpfr_div_2ui(half.v, diff.v, 1, MPFR_RNDN);
  mpfr_sin(half.v, half.v, MPFR_RNDN);
  mpfr_abs(half.v, half.v, MPFR_RNDN);
  mpfr_log(half.v, half.v, MPFR_RNDN);
  return mpfr_get_d(half.v, MPFR_RNDN);
}

bool operator==(const Angle& a, const Angle& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

bool operator<(const Angle& a, const Angle& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

}  // namespace asymptree
