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

#include "asymptree/tree_space.hpp"

#include "asymptree/levelled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asymptree::tree {
namespace {

void check_support(const Rational& depth, std::vector<SupportPoint>& support) {
  if (depth < 0) throw std::invalid_argument("profile depth must be non-negative");
  std::sort(support.begin(), support.end(),
            [](const SupportPoint& a, const SupportPoint& b) { return a.depth < b.depth; });
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto& p = support[i];
    if (!(p.depth > 0) || p.depth > depth) throw std::invalid_argument("support point outside (0, depth]");
    if (p.value == 0.0 || !std::isfinite(p.value)) throw std::invalid_argument("support value must be finite and nonzero");
    if (i > 0 && support[i - 1].depth == p.depth) throw std::invalid_argument("duplicate support depth");
  }
}

// First depth in (0, limit] where the two finitely supported profiles differ.
// A depth present in only one support differs from the implicit zero.
const Rational* first_difference(std::span<const SupportPoint> a, std::span<const SupportPoint> b,
                                 const Rational& limit) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    const bool take_a = j == b.size() || (i < a.size() && a[i].depth <= b[j].depth);
    const bool take_b = i == a.size() || (j < b.size() && b[j].depth <= a[i].depth);
    const Rational& x = take_a ? a[i].depth : b[j].depth;
    if (x > limit) return nullptr;
    const double va = take_a ? a[i++].value : 0.0;
    const double vb = take_b ? b[j++].value : 0.0;
    if (va != vb) return &x;
  }
  return nullptr;
}

std::vector<SupportPoint> prefix(std::span<const SupportPoint> support, const Rational& s) {
  std::vector<SupportPoint> out;
  for (const auto& p : support) {
    if (p.depth <= s) out.push_back(p);
  }
  return out;
}

void check_restriction(const Rational& depth, const Rational& s) {
  if (s < 0 || s > depth) throw std::out_of_range("restriction depth outside [0, depth]");
}

}  // namespace

ProfileD::ProfileD(Rational depth, std::vector<SupportPoint> support)
    : depth_(std::move(depth)), support_(std::move(support)) {
  check_support(depth_, support_);
}

ProfileF::ProfileF(Rational depth, double top, std::vector<SupportPoint> support)
    : depth_(std::move(depth)), top_(top), support_(std::move(support)) {
  if (!std::isfinite(top)) throw std::invalid_argument("top angle must be finite");
  top_ = levelled::normalize_circle(top);
  check_support(depth_, support_);
}

ProfileC::ProfileC() : breakpoints_{{Rational(0), Rational(0)}} {}

ProfileC::ProfileC(std::vector<Breakpoint> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty() || breakpoints_.front().x != 0 || breakpoints_.front().value != 0) {
    throw std::invalid_argument("piecewise-linear profile must start at (0, 0)");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1].x < breakpoints_[i].x)) throw std::invalid_argument("breakpoints must strictly increase");
  }
  // Drop interior breakpoints that lie on the segment through their
  // neighbours, so equal functions have equal breakpoint lists.
  std::vector<Breakpoint> kept{breakpoints_.front()};
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    const auto& cur = breakpoints_[i];
    if (kept.size() >= 2) {
      const auto& a = kept[kept.size() - 2];
      const auto& b = kept.back();
      if ((b.value - a.value) * (cur.x - b.x) == (cur.value - b.value) * (b.x - a.x)) kept.pop_back();
    }
    kept.push_back(cur);
  }
  breakpoints_ = std::move(kept);
}

Rational ProfileC::value_at(const Rational& x) const {
  if (x < 0 || x > depth()) throw std::out_of_range("evaluation point outside [0, depth]");
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x,
                                   [](const Breakpoint& b, const Rational& v) { return b.x < v; });
  if (it->x == x) return it->value;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return Rational(lo.value + (hi.value - lo.value) * (x - lo.x) / (hi.x - lo.x));
}

SeparationResult separation(const ProfileD& a, const ProfileD& b) {
  const Rational& limit = std::min(a.depth(), b.depth());
  if (const Rational* d = first_difference(a.support(), b.support(), limit)) return {*d};
  return {limit};
}

SeparationResult separation(const ProfileF& a, const ProfileF& b) {
  if (a.top() != b.top()) return {Rational(0)};
  const Rational& limit = std::min(a.depth(), b.depth());
  if (const Rational* d = first_difference(a.support(), b.support(), limit)) return {*d};
  return {limit};
}

SeparationResult separation(const ProfileC& a, const ProfileC& b) {
  const Rational& limit = std::min(a.depth(), b.depth());
  // Both profiles are linear between consecutive merged breakpoints, so they
  // agree on such an interval iff they agree at its two ends.
  std::vector<Rational> xs;
  for (const auto& p : a.breakpoints()) {
    if (p.x <= limit) xs.push_back(p.x);
  }
  for (const auto& p : b.breakpoints()) {
    if (p.x <= limit) xs.push_back(p.x);
  }
  xs.push_back(limit);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (a.value_at(xs[k]) != b.value_at(xs[k])) return {xs[k - 1]};
  }
  return {limit};
}

bool equivalent(const ProfileC& a, const ProfileC& b) { return a == b; }

bool equivalent(const ProfileD& a, const ProfileD& b) {
  return a.depth() == b.depth() && separation(a, b).c == a.depth();
}

bool equivalent(const ProfileF& a, const ProfileF& b) {
  return a.depth() == b.depth() && separation(a, b).c == a.depth();
}

ProfileD restrict_to(const ProfileD& a, const Rational& s) {
  check_restriction(a.depth(), s);
  return ProfileD(s, prefix(a.support(), s));
}

ProfileF restrict_to(const ProfileF& a, const Rational& s) {
  check_restriction(a.depth(), s);
  return ProfileF(s, a.top(), prefix(a.support(), s));
}

ProfileC restrict_to(const ProfileC& a, const Rational& s) {
  check_restriction(a.depth(), s);
  std::vector<Breakpoint> out;
  for (const auto& p : a.breakpoints()) {
    if (p.x < s) out.push_back(p);
  }
  if (s == 0) return ProfileC();
  out.push_back({s, a.value_at(s)});
  return ProfileC(std::move(out));
}

SpaceKind kind_of(const AnyProfile& p) {
  switch (p.index()) {
    case 0:
      return SpaceKind::C;
    case 1:
      return SpaceKind::D;
    default:
      return SpaceKind::F;
  }
}

Rational distance(const AnyProfile& a, const AnyProfile& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> Rational {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return distance(x, y);
        } else {
          throw std::invalid_argument("profiles belong to different spaces");
        }
      },
      a, b);
}

}  // namespace asymptree::tree
