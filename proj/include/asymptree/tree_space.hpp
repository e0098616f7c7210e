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

// Separation-metric trees. A point is a profile f on a depth interval
// [0, depth]; two profiles are joined at the depth c up to which they agree,
// and their distance is (depth₁ - c) + (depth₂ - c). Three profile spaces are
// provided:
//   C: continuous piecewise-linear profiles with f(0) = 0,
//   D: profiles that vanish except at finitely many depths,
//   F: like D, plus a circle-valued top value at depth 0.
// Depths and separation moments are exact rationals.

#include "asymptree/rational.hpp"

#include <concepts>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace asymptree::tree {

enum class SpaceKind { C, D, F };

struct SupportPoint {
  Rational depth;
  double value;

  friend bool operator==(const SupportPoint& a, const SupportPoint& b) {
    return a.depth == b.depth && a.value == b.value;
  }
};

struct Breakpoint {
  Rational x;
  Rational value;

  friend bool operator==(const Breakpoint& a, const Breakpoint& b) { return a.x == b.x && a.value == b.value; }
};

struct SeparationResult {
  Rational c;
};

class ProfileD {
 public:
  /// The basepoint: depth 0, empty support.
  ProfileD() = default;
  /// Throws std::invalid_argument unless every support depth lies in
  /// (0, depth], depths are distinct and values are nonzero.
  ProfileD(Rational depth, std::vector<SupportPoint> support);

  const Rational& depth() const { return depth_; }
  std::span<const SupportPoint> support() const { return support_; }

  friend bool operator==(const ProfileD& a, const ProfileD& b) {
    return a.depth_ == b.depth_ && a.support_ == b.support_;
  }

 private:
  Rational depth_{0};
  std::vector<SupportPoint> support_;
};

class ProfileF {
 public:
  ProfileF() = default;
  /// As ProfileD; `top` is reduced into [0, 2π).
  ProfileF(Rational depth, double top, std::vector<SupportPoint> support);

  const Rational& depth() const { return depth_; }
  double top() const { return top_; }
  std::span<const SupportPoint> support() const { return support_; }

  friend bool operator==(const ProfileF& a, const ProfileF& b) {
    return a.depth_ == b.depth_ && a.top_ == b.top_ && a.support_ == b.support_;
  }

 private:
  Rational depth_{0};
  double top_ = 0.0;
  std::vector<SupportPoint> support_;
};

class ProfileC {
 public:
  /// The basepoint f ≡ 0 on [0, 0].
  ProfileC();
  /// Throws std::invalid_argument unless the first breakpoint is (0, 0) and
  /// x is strictly increasing. Collinear interior breakpoints are dropped.
  explicit ProfileC(std::vector<Breakpoint> breakpoints);

  const Rational& depth() const { return breakpoints_.back().x; }
  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }

  /// Linear interpolation; x must lie in [0, depth].
  Rational value_at(const Rational& x) const;

  friend bool operator==(const ProfileC& a, const ProfileC& b) { return a.breakpoints_ == b.breakpoints_; }

 private:
  std::vector<Breakpoint> breakpoints_;
};

SeparationResult separation(const ProfileC& a, const ProfileC& b);
SeparationResult separation(const ProfileD& a, const ProfileD& b);
SeparationResult separation(const ProfileF& a, const ProfileF& b);

/// Zero-distance relation. A value sitting exactly at a profile's own depth
/// never separates it from anything, so D and F profiles of equal depth that
/// differ only there are at distance 0; for F this includes every depth-0
/// profile regardless of top. On C this is plain equality.
bool equivalent(const ProfileC& a, const ProfileC& b);
bool equivalent(const ProfileD& a, const ProfileD& b);
bool equivalent(const ProfileF& a, const ProfileF& b);

/// Prefix of the profile on [0, s]; throws std::out_of_range unless 0 ≤ s ≤ depth.
ProfileC restrict_to(const ProfileC& a, const Rational& s);
ProfileD restrict_to(const ProfileD& a, const Rational& s);
ProfileF restrict_to(const ProfileF& a, const Rational& s);

template <class P>
concept TreeProfile = requires(const P& a, const Rational& s) {
  { a.depth() } -> std::convertible_to<const Rational&>;
  { separation(a, a) } -> std::same_as<SeparationResult>;
  { restrict_to(a, s) } -> std::same_as<P>;
};

template <TreeProfile P>
Rational distance(const P& a, const P& b) {
  const Rational c = separation(a, b).c;
  return Rational((a.depth() - c) + (b.depth() - c));
}

/// The vertex where the geodesics from the basepoint to a and to b part.
template <TreeProfile P>
P branch_point(const P& a, const P& b) {
  return restrict_to(a, separation(a, b).c);
}

/// Point at arc length t along the unique geodesic from a to b.
/// Throws std::out_of_range unless 0 ≤ t ≤ distance(a, b).
template <TreeProfile P>
P geodesic(const P& a, const P& b, const Rational& t) {
  const Rational h = separation(a, b).c;
  const Rational length = (a.depth() - h) + (b.depth() - h);
  if (t < 0 || t > length) throw std::out_of_range("geodesic parameter outside [0, distance]");
  if (t <= a.depth() - h) return restrict_to(a, Rational(a.depth() - t));
  return restrict_to(b, Rational(b.depth() - (length - t)));
}

/// d(w,x) + d(y,z) ≤ max(d(w,y) + d(x,z), d(w,z) + d(x,y)), exactly.
template <TreeProfile P>
bool four_point_check(const P& w, const P& x, const P& y, const P& z) {
  const Rational s1 = distance(w, x) + distance(y, z);
  const Rational s2 = distance(w, y) + distance(x, z);
  const Rational s3 = distance(w, z) + distance(x, y);
  return s1 <= (s2 < s3 ? s3 : s2);
}

// Runtime-tagged profiles, as read from JSON.

using AnyProfile = std::variant<ProfileC, ProfileD, ProfileF>;

SpaceKind kind_of(const AnyProfile& p);

/// Throws std::invalid_argument when the profiles belong to different spaces.
Rational distance(const AnyProfile& a, const AnyProfile& b);

}  // namespace asymptree::tree
