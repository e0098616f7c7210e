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

#include "asymptree/random_profiles.hpp"

#include <array>
#include <cmath>
#include <set>
#include <numbers>

namespace asymptree::sampling {
namespace {

constexpr long kGrid = 8;
constexpr long kMaxExtension = 16;
constexpr std::array<double, 6> kValues{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
constexpr std::array<double, 5> kTops{0.0, 1.0, 2.5, std::numbers::pi, 5.0};

Rational grid(long k, long step) {
  Rational r(k, step);
  r.canonicalize();
  return r;
}

long grid_index(const Rational& x, long step) {
  const Rational scaled = x * step;
  return scaled.get_num().get_si() / scaled.get_den().get_si();
}

double pick_value(rng::Rng& rng) { return kValues[rng.below(kValues.size())]; }

// Support points at grid depths in (from, to], each present with probability p.
std::vector<tree::SupportPoint> random_tail(rng::Rng& rng, long from, long to, double p) {
  std::vector<tree::SupportPoint> out;
  for (long k = from + 1; k <= to; ++k) {
    if (rng.chance(p)) out.push_back({grid(k, kGrid), pick_value(rng)});
  }
  return out;
}

template <class P, class Extend>
std::vector<P> grow(rng::Rng& rng, std::size_t count, P root, Extend extend) {
  std::vector<P> pool{std::move(root)};
  while (pool.size() < count) {
    const P& parent = pool[rng.below(pool.size())];
    const long cut = rng.between(0, grid_index(parent.depth(), kGrid));
    const long length = rng.between(0, kMaxExtension);
    pool.push_back(extend(tree::restrict_to(parent, grid(cut, kGrid)), cut, cut + length));
  }
  return pool;
}

double magnitude(rng::Rng& rng) {
  const double m = rng.uniform(0.1, std::numbers::pi - 0.1);
  return rng.chance(0.5) ? -m : m;
}

}  // namespace

std::vector<tree::ProfileD> family_d(rng::Rng& rng, std::size_t count) {
  return grow(rng, count, tree::ProfileD(), [&](const tree::ProfileD& prefix, long cut, long end) {
    auto support = std::vector<tree::SupportPoint>(prefix.support().begin(), prefix.support().end());
    for (auto& p : random_tail(rng, cut, end, 0.35)) support.push_back(p);
    return tree::ProfileD(grid(end, kGrid), std::move(support));
  });
}

std::vector<tree::ProfileF> family_f(rng::Rng& rng, std::size_t count) {
  auto pool = grow(rng, count, tree::ProfileF(), [&](const tree::ProfileF& prefix, long cut, long end) {
    // A cut at the root may also move to another top.
    const double top = cut == 0 && rng.chance(0.5) ? kTops[rng.below(kTops.size())] : prefix.top();
    auto support = std::vector<tree::SupportPoint>(prefix.support().begin(), prefix.support().end());
    for (auto& p : random_tail(rng, cut, end, 0.35)) support.push_back(p);
    return tree::ProfileF(grid(end, kGrid), top, std::move(support));
  });
  return pool;
}

std::vector<tree::ProfileC> family_c(rng::Rng& rng, std::size_t count) {
  return grow(rng, count, tree::ProfileC(), [&](const tree::ProfileC& prefix, long cut, long end) {
    auto bps = std::vector<tree::Breakpoint>(prefix.breakpoints().begin(), prefix.breakpoints().end());
    for (long k = cut + 1; k <= end; ++k) {
      if (k == end || rng.chance(0.4)) bps.push_back({grid(k, kGrid), grid(rng.between(-8, 8), 4)});
    }
    return tree::ProfileC(std::move(bps));
  });
}

std::pair<tree::ProfileF, tree::ProfileF> admissible_pair(rng::Rng& rng) {
  constexpr long step = 10;
  constexpr std::size_t max_support = 5;
  const long depth1 = rng.between(2, 30);
  const long depth2 = rng.between(2, 30);
  const long shorter = std::min(depth1, depth2);

  double top1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  double top2 = top1;
  long branch = 0;
  std::vector<tree::SupportPoint> s1;
  std::vector<tree::SupportPoint> s2;

  if (rng.chance(1.0 / 3.0)) {
    top2 = top1 + rng.uniform(0.1, 2.0 * std::numbers::pi - 0.1);
  } else {
    branch = rng.between(1, shorter - 1);
    for (long k = 1; k < branch && s1.size() < 2; ++k) {
      if (rng.chance(0.3)) {
        const double c = magnitude(rng);
        s1.push_back({grid(k, step), c});
        s2.push_back({grid(k, step), c});
      }
    }
    const Rational at = grid(branch, step);
    switch (rng.below(3)) {
      case 0:
        s1.push_back({at, magnitude(rng)});
        break;
      case 1:
        s2.push_back({at, magnitude(rng)});
        break;
      default: {
        const double c1 = magnitude(rng);
        double c2 = magnitude(rng);
        while (std::abs(c1 - c2) < 0.1) c2 = magnitude(rng);
        s1.push_back({at, c1});
        s2.push_back({at, c2});
      }
    }
  }

  auto fill = [&](std::vector<tree::SupportPoint>& s, long depth) {
    for (long k = branch + 1; k <= depth && s.size() < max_support; ++k) {
      if (rng.chance(0.3)) s.push_back({grid(k, step), magnitude(rng)});
    }
  };
  fill(s1, depth1);
  fill(s2, depth2);
  return {tree::ProfileF(grid(depth1, step), top1, std::move(s1)),
          tree::ProfileF(grid(depth2, step), top2, std::move(s2))};
}

levelled::LevelledNumber<Rational> levelled_number(rng::Rng& rng, std::size_t max_terms) {
  const auto n = rng.below(max_terms + 1);
  std::vector<levelled::Term<Rational>> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const auto l = levelled::level(rng.between(-24, 24), static_cast<unsigned long>(rng.between(1, 6)));
    long p = rng.between(-50, 50);
    if (p == 0) p = 1;
    Rational c(p, rng.between(1, 12));
    c.canonicalize();
    terms.push_back({l, c});
  }
  return levelled::LevelledNumber<Rational>::from_terms(std::move(terms));
}

levelled::Spectrum<Rational> spectrum(rng::Rng& rng, std::size_t max_terms) {
  const auto n = rng.below(max_terms + 1);
  std::set<Rational> levels;
  for (std::size_t i = 0; i < n; ++i) {
    levels.insert(levelled::level(rng.between(-24, 24), static_cast<unsigned long>(rng.between(1, 6))).g);
  }
  levelled::Spectrum<Rational> out;
  for (const auto& g : levels) {
    long p = rng.between(-50, 50);
    if (p == 0) p = -1;
    Rational c(p, rng.between(1, 12));
    c.canonicalize();
    out.push_back({c, levelled::Level{g}});
  }
  return out;
}

}  // namespace asymptree::sampling
