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

#include "asymptree/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asymptree::correspondence {
namespace {

struct PairTask {
  std::size_t j;
  std::size_t k;
  std::size_t scale;
};

void check_config(std::span<const tree::ProfileF> config, std::span<const double> scales) {
  if (config.size() < 2) throw std::invalid_argument("a subcone configuration needs at least two profiles");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] >= 1.0)) throw std::invalid_argument("scales must be at least 1");
    if (i > 0 && !(scales[i - 1] < scales[i])) throw std::invalid_argument("scales must be strictly increasing");
  }
}

std::vector<PairTask> tasks_for(std::size_t profiles, std::size_t scales) {
  std::vector<PairTask> out;
  for (std::size_t j = 0; j < profiles; ++j) {
    for (std::size_t k = j + 1; k < profiles; ++k) {
      for (std::size_t s = 0; s < scales; ++s) out.push_back({j, k, s});
    }
  }
  return out;
}

std::string label(std::size_t j, std::size_t k) { return std::to_string(j) + "-" + std::to_string(k); }

}  // namespace

void check_admissible(const tree::ProfileF& p) {
  for (const auto& s : p.support()) {
    if (!(std::abs(s.value) < std::numbers::pi) || s.value == 0.0) {
      throw std::invalid_argument("support coefficient " + std::to_string(s.value) + " at depth " +
                                  to_string(s.depth) + " outside (-pi, pi) \\ {0}");
    }
  }
}

Realization realize_at_scale(const tree::ProfileF& p, double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::invalid_argument("scale must be finite and at least 1");
  check_admissible(p);
  std::vector<AngleTerm> terms;
  terms.reserve(p.support().size());
  for (const auto& s : p.support()) terms.push_back({s.value, n * to_double(s.depth)});
  return {hyperbolic::PolarPoint(n * to_double(p.depth()), Angle::from_terms(p.top(), terms)), n, p};
}

ConvergenceRow pair_error(const tree::ProfileF& p1, const tree::ProfileF& p2, double n, std::string label) {
  const Rational delta = tree::distance(p1, p2);
  const auto x1 = realize_at_scale(p1, n);
  const auto x2 = realize_at_scale(p2, n);
  const double scaled = hyperbolic::scaled_distance(x1.point, x2.point, 1.0 / n);
  return {std::move(label), n, delta, scaled, std::abs(scaled - to_double(delta))};
}

std::vector<ConvergenceRow> subcone_witness(std::span<const tree::ProfileF> config, std::span<const double> scales) {
  check_config(config, scales);
  const auto tasks = tasks_for(config.size(), scales.size());
  std::vector<ConvergenceRow> rows(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& t = tasks[i];
    rows[i] = pair_error(config[t.j], config[t.k], scales[t.scale], label(t.j, t.k));
  }
  return rows;
}

std::vector<ConvergenceRow> serial_subcone_witness(std::span<const tree::ProfileF> config,
                                                   std::span<const double> scales) {
  check_config(config, scales);
  std::vector<ConvergenceRow> rows;
  for (const auto& t : tasks_for(config.size(), scales.size())) {
    rows.push_back(pair_error(config[t.j], config[t.k], scales[t.scale], label(t.j, t.k)));
  }
  return rows;
}

std::vector<ScaleSummary> max_error_by_scale(std::span<const ConvergenceRow> rows) {
  std::vector<ScaleSummary> out;
  for (const auto& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ScaleSummary& s) { return s.n == r.n; });
    if (it == out.end()) {
      out.push_back({r.n, r.error});
    } else {
      it->max_error = std::max(it->max_error, r.error);
    }
  }
  return out;
}

levelled::CircleLevelled<double> to_circle_levelled(const tree::ProfileF& p) {
  std::vector<levelled::Term<double>> terms;
  for (const auto& s : p.support()) terms.push_back({levelled::Level{s.depth}, s.value});
  return levelled::make_circle(p.top(), levelled::LevelledNumber<double>::from_terms(std::move(terms)));
}

std::optional<Rational> angular_level(const tree::ProfileF& a, const tree::ProfileF& b) {
  const auto ca = to_circle_levelled(a);
  const auto cb = to_circle_levelled(b);
  if (ca.top != cb.top) return Rational(0);
  const auto diff = levelled::add(ca.tail, levelled::negate(cb.tail));
  if (diff.is_zero()) return std::nullopt;
  return levelled::sim_class(diff).g;
}

Rational analytic_limit(const tree::ProfileF& a, const tree::ProfileF& b) {
  Rational radial = a.depth() - b.depth();
  radial = abs(radial);
  const auto phi = angular_level(a, b);
  if (!phi) return radial;
  const Rational angular = a.depth() + b.depth() - 2 * *phi;
  return std::max(radial, angular);
}

LimitCase classify(const tree::ProfileF& a, const tree::ProfileF& b) {
  const auto phi = angular_level(a, b);
  const Rational& shorter = std::min(a.depth(), b.depth());
  const Rational& longer = std::max(a.depth(), b.depth());
  if (phi && *phi <= shorter) return LimitCase::within_shorter;
  if (phi && *phi <= longer) return LimitCase::between;
  return LimitCase::beyond_longer;
}

Rational analytic_limit_by_cases(const tree::ProfileF& a, const tree::ProfileF& b) {
  const Rational& shorter = std::min(a.depth(), b.depth());
  const Rational& longer = std::max(a.depth(), b.depth());
  const Rational spread = longer - shorter;
  const auto phi = angular_level(a, b);
  if (!phi) return spread;
  const Rational first = std::max(Rational(shorter - *phi), Rational(0));
  const Rational second = std::max(Rational(longer - *phi), spread);
  return Rational(first + second);
}

}  // namespace asymptree::correspondence
