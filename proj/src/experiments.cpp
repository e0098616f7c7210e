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

#include "asymptree/experiments.hpp"

#include "asymptree/hyperbolic.hpp"
#include "asymptree/random_profiles.hpp"
#include "asymptree/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asymptree::experiments {
namespace {

constexpr std::size_t kFamilySize = 8;

template <class P>
const P& pick(rng::Rng& rng, const std::vector<P>& pool) {
  return pool[rng.below(pool.size())];
}

template <class P>
bool metric_axioms(const P& a, const P& b, const P& c) {
  using tree::distance;
  const Rational ab = distance(a, b);
  const Rational bc = distance(b, c);
  const Rational ca = distance(c, a);
  if (ab < 0 || bc < 0 || ca < 0) return false;
  if (distance(a, a) != 0) return false;
  if ((ab == 0) != tree::equivalent(a, b)) return false;
  if (ab != distance(b, a) || separation(a, b).c != separation(b, a).c) return false;
  return ca <= ab + bc && ab <= bc + ca && bc <= ca + ab;
}

template <class P>
bool four_point(const P& w, const P& x, const P& y, const P& z) {
  return tree::four_point_check(w, x, y, z) && tree::four_point_check(w, y, x, z) &&
         tree::four_point_check(w, z, x, y);
}

template <class P>
bool geodesic_isometry(rng::Rng& rng, const P& a, const P& b) {
  using tree::distance;
  const Rational length = distance(a, b);
  auto sample = [&] { return Rational(length * rng.between(0, 16) / 16); };
  const Rational s = sample();
  const Rational t = sample();
  if (distance(tree::geodesic(a, b, s), tree::geodesic(a, b, t)) != abs(Rational(s - t))) return false;
  if (!(tree::geodesic(a, b, Rational(0)) == a) || !tree::equivalent(tree::geodesic(a, b, length), b)) return false;

  const P branch = tree::branch_point(a, b);
  if (distance(a, branch) + distance(branch, b) != length) return false;

  // A prefix of a that lies on the a-b geodesic must be the geodesic point.
  const Rational cut = a.depth() * rng.between(0, 16) / 16;
  const P candidate = tree::restrict_to(a, cut);
  const Rational along = distance(a, candidate);
  if (along + distance(candidate, b) == length && distance(candidate, tree::geodesic(a, b, along)) != 0) return false;
  return true;
}

bool cross_formula(rng::Rng& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const hyperbolic::PolarPoint p(rng.uniform(0.0, 10.0), rng.uniform(0.0, two_pi));
  const hyperbolic::PolarPoint q(rng.uniform(0.0, 10.0), rng.uniform(0.0, two_pi));
  const double d = hyperbolic::polar_distance(p, q);
  const double via_disk = hyperbolic::disk_distance(hyperbolic::polar_to_disk(p), hyperbolic::polar_to_disk(q));
  return std::abs(d - via_disk) <= 1e-9 * (1.0 + d);
}

template <class Make>
bool tree_trial(rng::Rng& rng, Suite suite, Make make_family) {
  const auto pool = make_family(rng, kFamilySize);
  switch (suite) {
    case Suite::metric_axioms_c:
    case Suite::metric_axioms_d:
    case Suite::metric_axioms_f:
      return metric_axioms(pick(rng, pool), pick(rng, pool), pick(rng, pool));
    case Suite::four_point_c:
    case Suite::four_point_d:
    case Suite::four_point_f: {
      const auto& w = pick(rng, pool);
      const auto& x = pick(rng, pool);
      const auto& y = pick(rng, pool);
      return four_point(w, x, y, pick(rng, pool));
    }
    default: {
      const auto& a = pick(rng, pool);
      return geodesic_isometry(rng, a, pick(rng, pool));
    }
  }
}

bool trial(Suite suite, std::uint64_t stream, std::uint64_t index) {
  rng::Rng rng(rng::trial_seed(stream, index));
  switch (suite) {
    case Suite::metric_axioms_c:
    case Suite::four_point_c:
    case Suite::geodesic_c:
      return tree_trial(rng, suite, sampling::family_c);
    case Suite::metric_axioms_d:
    case Suite::four_point_d:
    case Suite::geodesic_d:
      return tree_trial(rng, suite, sampling::family_d);
    case Suite::metric_axioms_f:
    case Suite::four_point_f:
    case Suite::geodesic_f:
      return tree_trial(rng, suite, sampling::family_f);
    case Suite::cross_formula:
      return cross_formula(rng);
  }
  return false;
}

PropertyCount run(Suite suite, std::uint64_t seed, std::uint64_t trials, bool parallel) {
  const std::string name = suite_name(suite);
  const std::uint64_t stream = rng::stream_seed(seed, name);
  const auto count = static_cast<std::int64_t>(trials);
  std::uint64_t violations = 0;
#pragma omp parallel for if (parallel) schedule(dynamic, 16) reduction(+ : violations)
  for (std::int64_t i = 0; i < count; ++i) {
    if (!trial(suite, stream, static_cast<std::uint64_t>(i))) ++violations;
  }
  return {name, trials, violations};
}

VerifyReport verify(std::uint64_t seed, std::uint64_t trials, bool parallel) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  VerifyReport report{seed, trials, {}};
  for (Suite s : kAllSuites) report.properties.push_back(run(s, seed, trials, parallel));
  return report;
}

std::vector<hyperbolic::AsymptoticParams> grid_params(std::span<const double> scales) {
  check_scales(scales);
  std::vector<hyperbolic::AsymptoticParams> params;
  const auto axis = grid_axis();
  for (double r1 : axis) {
    for (double r2 : axis) {
      for (double phi : axis) {
        for (double n : scales) params.push_back({r1, r2, phi, n});
      }
    }
  }
  return params;
}

GridReport assemble(const std::vector<hyperbolic::AsymptoticParams>& params, const std::vector<double>& errors) {
  GridReport report;
  std::vector<correspondence::ConvergenceRow> for_summary;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    report.rows.push_back({p.r1, p.r2, p.cap_phi, p.n, errors[i]});
    for_summary.push_back({"", p.n, Rational(0), 0.0, errors[i]});
  }
  report.summary = correspondence::max_error_by_scale(for_summary);
  return report;
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::metric_axioms_c:
      return "metric_axioms_C";
    case Suite::metric_axioms_d:
      return "metric_axioms_D";
    case Suite::metric_axioms_f:
      return "metric_axioms_F";
    case Suite::four_point_c:
      return "four_point_C";
    case Suite::four_point_d:
      return "four_point_D";
    case Suite::four_point_f:
      return "four_point_F";
    case Suite::geodesic_c:
      return "geodesic_isometry_C";
    case Suite::geodesic_d:
      return "geodesic_isometry_D";
    case Suite::geodesic_f:
      return "geodesic_isometry_F";
    case Suite::cross_formula:
      return "cross_formula";
  }
  return "unknown";
}

bool VerifyReport::ok() const {
  for (const auto& p : properties) {
    if (p.violations != 0) return false;
  }
  return true;
}

PropertyCount run_suite(Suite suite, std::uint64_t seed, std::uint64_t trials) {
  return run(suite, seed, trials, true);
}

PropertyCount serial_run_suite(Suite suite, std::uint64_t seed, std::uint64_t trials) {
  return run(suite, seed, trials, false);
}

VerifyReport verify_metric(std::uint64_t seed, std::uint64_t trials) { return verify(seed, trials, true); }

VerifyReport serial_verify_metric(std::uint64_t seed, std::uint64_t trials) { return verify(seed, trials, false); }

std::vector<double> grid_axis() { return {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}; }

void check_scales(std::span<const double> scales) {
  if (scales.empty()) throw std::invalid_argument("at least one scale is required");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] >= 1.0) || !std::isfinite(scales[i])) throw std::invalid_argument("scales must be finite and at least 1");
    if (i > 0 && !(scales[i - 1] < scales[i])) throw std::invalid_argument("scales must be strictly increasing");
  }
}

GridReport convergence_grid(std::span<const double> scales) {
  const auto params = grid_params(scales);
  return assemble(params, hyperbolic::convergence_error_batch(params));
}

GridReport serial_convergence_grid(std::span<const double> scales) {
  const auto params = grid_params(scales);
  return assemble(params, hyperbolic::serial_convergence_error_batch(params));
}

std::vector<tree::ProfileF> demo_configuration() {
  using tree::ProfileF;
  return {
      ProfileF(Rational(2), 1.0, {{Rational(1, 2), 0.5}}),
      ProfileF(Rational(3, 2), 1.0, {{Rational(1, 2), 0.5}, {Rational(1), -1.0}}),
      ProfileF(Rational(5, 2), 1.0, {{Rational(1, 2), -0.75}}),
      ProfileF(Rational(1), 2.5, {{Rational(1, 4), 1.0}}),
  };
}

std::vector<correspondence::ConvergenceRow> subcone_demo(std::span<const double> scales) {
  check_scales(scales);
  const auto config = demo_configuration();
  return correspondence::subcone_witness(config, scales);
}

}  // namespace asymptree::experiments
