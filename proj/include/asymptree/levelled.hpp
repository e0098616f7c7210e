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

// Finite formal sums Σ c·u^g over rational exponents g. The symbol u stands
// for a fixed positive infinitesimal: u^g is infinitesimal for g > 0, finite
// and non-infinitesimal for g = 0, infinite for g < 0. Smaller g therefore
// means larger magnitude, and the leading term of a sum is the one with the
// smallest exponent.

#include "asymptree/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace asymptree::levelled {

/// Magnitude class of a nonzero number, identified by its exponent.
struct Level {
  Rational g;

  /// a.g < b.g means a has the LARGER magnitude.
  friend bool operator<(const Level& a, const Level& b) { return a.g < b.g; }
  friend bool operator==(const Level& a, const Level& b) { return a.g == b.g; }
  friend bool operator!=(const Level& a, const Level& b) { return !(a == b); }
};

inline Level level(long p, unsigned long q = 1) {
  Rational g(p, q);
  g.canonicalize();
  return Level{g};
}

template <class Coeff>
struct Term {
  Level level;
  Coeff coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.level == b.level && a.coeff == b.coeff; }
};

template <class Coeff>
class LevelledNumber {
 public:
  using term_type = Term<Coeff>;

  LevelledNumber() = default;

  /// Sorts, merges equal levels and drops zero coefficients.
  static LevelledNumber from_terms(std::vector<term_type> terms) {
    std::map<Rational, Coeff> merged;
    for (auto& t : terms) {
      auto [it, inserted] = merged.try_emplace(t.level.g, t.coeff);
      if (!inserted) it->second = Coeff(it->second + t.coeff);
    }
    LevelledNumber out;
    for (auto& [g, c] : merged) {
      if (c != Coeff(0)) out.terms_.push_back({Level{g}, c});
    }
    return out;
  }

  static LevelledNumber monomial(Coeff c, Level l) { return from_terms({{std::move(l), std::move(c)}}); }

  static LevelledNumber constant(Coeff c) { return monomial(std::move(c), Level{Rational(0)}); }

  /// Terms in strictly increasing exponent order (decreasing magnitude).
  std::span<const term_type> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const LevelledNumber& a, const LevelledNumber& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<term_type> terms_;
};

template <class Coeff>
struct SpectrumEntry {
  Coeff c;
  Level level;

  friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) { return a.c == b.c && a.level == b.level; }
};

/// Decomposition output: coefficients paired with strictly decreasing
/// magnitude classes (strictly increasing g). Empty means zero.
template <class Coeff>
using Spectrum = std::vector<SpectrumEntry<Coeff>>;

enum class Ordering { less, equal, greater };

template <class Coeff>
LevelledNumber<Coeff> add(const LevelledNumber<Coeff>& x, const LevelledNumber<Coeff>& y) {
  std::vector<Term<Coeff>> terms(x.terms().begin(), x.terms().end());
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return LevelledNumber<Coeff>::from_terms(std::move(terms));
}

template <class Coeff>
LevelledNumber<Coeff> scalar_mul(const Coeff& c, const LevelledNumber<Coeff>& x) {
  std::vector<Term<Coeff>> terms;
  for (const auto& t : x.terms()) terms.push_back({t.level, Coeff(c * t.coeff)});
  return LevelledNumber<Coeff>::from_terms(std::move(terms));
}

template <class Coeff>
LevelledNumber<Coeff> negate(const LevelledNumber<Coeff>& x) {
  return scalar_mul(Coeff(-1), x);
}

template <class Coeff>
LevelledNumber<Coeff> mul(const LevelledNumber<Coeff>& x, const LevelledNumber<Coeff>& y) {
  std::vector<Term<Coeff>> terms;
  terms.reserve(x.size() * y.size());
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      Rational g = a.level.g + b.level.g;
      terms.push_back({Level{std::move(g)}, Coeff(a.coeff * b.coeff)});
    }
  }
  return LevelledNumber<Coeff>::from_terms(std::move(terms));
}

/// Magnitude class of the leading term. Zero has none.
template <class Coeff>
Level sim_class(const LevelledNumber<Coeff>& x) {
  if (x.is_zero()) throw std::domain_error("zero has no magnitude class");
  return x.terms().front().level;
}

/// Sign of x - y, read off the leading coefficient of the difference.
template <class Coeff>
Ordering compare(const LevelledNumber<Coeff>& x, const LevelledNumber<Coeff>& y) {
  const auto diff = add(x, negate(y));
  if (diff.is_zero()) return Ordering::equal;
  return diff.terms().front().coeff > Coeff(0) ? Ordering::greater : Ordering::less;
}

template <class Coeff>
Coeff standard_part(const LevelledNumber<Coeff>& x) {
  for (const auto& t : x.terms()) {
    if (t.level.g < 0) throw std::domain_error("not finite");
    if (t.level.g == 0) return t.coeff;
  }
  return Coeff(0);
}

/// Coefficient of x at `l`, zero when `l` is not in the spectrum.
template <class Coeff>
Coeff spectrum_function(const LevelledNumber<Coeff>& x, const Level& l) {
  const auto terms = x.terms();
  const auto it = std::lower_bound(terms.begin(), terms.end(), l,
                                   [](const Term<Coeff>& t, const Level& v) { return t.level < v; });
  return (it != terms.end() && it->level == l) ? it->coeff : Coeff(0);
}

/// Greedy leading-term extraction: repeatedly take the largest-magnitude
/// class, record its coefficient, and subtract that monomial.
template <class Coeff>
Spectrum<Coeff> decompose(const LevelledNumber<Coeff>& x) {
  Spectrum<Coeff> out;
  auto rest = x;
  while (!rest.is_zero()) {
    Level lead = sim_class(rest);
    Coeff c = spectrum_function(rest, lead);
    rest = add(rest, LevelledNumber<Coeff>::monomial(Coeff(-c), lead));
    out.push_back({std::move(c), std::move(lead)});
  }
  return out;
}

/// Throws std::invalid_argument unless levels strictly decrease in magnitude
/// and every coefficient is nonzero.
template <class Coeff>
void validate(const Spectrum<Coeff>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].c == Coeff(0)) throw std::invalid_argument("spectrum coefficient must be nonzero");
    if (i > 0 && !(s[i - 1].level < s[i].level)) {
      throw std::invalid_argument("spectrum levels must strictly decrease in magnitude");
    }
  }
}

template <class Coeff>
LevelledNumber<Coeff> synthesize(const Spectrum<Coeff>& s) {
  validate(s);
  LevelledNumber<Coeff> out;
  for (const auto& e : s) out = add(out, LevelledNumber<Coeff>::monomial(e.c, e.level));
  return out;
}

// Circle-valued numbers: a standard angle plus an infinitesimal tail.

template <class Coeff>
struct CircleLevelled {
  double top = 0.0;
  LevelledNumber<Coeff> tail;
};

template <class Coeff>
struct CircleSpectrum {
  double top = 0.0;
  Spectrum<Coeff> tail;

  friend bool operator==(const CircleSpectrum& a, const CircleSpectrum& b) {
    return a.top == b.top && a.tail == b.tail;
  }
};

/// Reduces into [0, 2π); a standard part of exactly 0 or 2π maps to 0.
inline double normalize_circle(double top) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(top, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r == 0.0 ? 0.0 : r;
}

template <class Coeff>
CircleLevelled<Coeff> make_circle(double top, LevelledNumber<Coeff> tail) {
  for (const auto& t : tail.terms()) {
    if (!(t.level.g > 0)) throw std::invalid_argument("circle tail must be infinitesimal");
  }
  return {normalize_circle(top), std::move(tail)};
}

template <class Coeff>
CircleSpectrum<Coeff> circle_decompose(const CircleLevelled<Coeff>& x) {
  return {normalize_circle(x.top), decompose(x.tail)};
}

template <class Coeff>
CircleLevelled<Coeff> circle_synthesize(const CircleSpectrum<Coeff>& s) {
  return make_circle(s.top, synthesize(s.tail));
}

}  // namespace asymptree::levelled
