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

#include "asymptree/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace asymptree::hyperbolic {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// asinh(exp(log_y)) without forming exp(log_y) when it would overflow.
double asinh_exp(double log_y) {
  if (log_y < 0.0) return std::asinh(std::exp(log_y));
  return log_y + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * log_y)));
}

}  // namespace

DiskPoint make_disk_point(double re, double im, double gap) { return DiskPoint(re, im, gap); }

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) throw std::domain_error("disk point must be finite");
  const double r = std::hypot(re, im);
  if (!(r < 1.0)) throw std::domain_error("disk point must satisfy |z| < 1");
  gap_ = (1.0 - r) * (1.0 + r);
}

PolarPoint::PolarPoint(double rho_, Angle phi_) : rho(rho_), phi(std::move(phi_)) {
  if (!std::isfinite(rho) || rho < 0.0) throw std::domain_error("rho must be finite and non-negative");
}

double log_sinh(double x) {
  if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == kNegInf) return a;
  return a + std::log1p(std::exp(b - a));
}

double disk_distance(const DiskPoint& z1, const DiskPoint& z2) {
  // sinh(d/2) = |z1 - z2| / sqrt((1 - |z1|²)(1 - |z2|²)), which equals the
  // A-form of the distance but never subtracts A from 1.
  const double chord = std::hypot(z1.re() - z2.re(), z1.im() - z2.im());
  if (chord == 0.0) return 0.0;
  const double log_q = std::log(chord) - 0.5 * (std::log(z1.boundary_gap()) + std::log(z2.boundary_gap()));
  return 2.0 * asinh_exp(log_q);
}

DiskPoint polar_to_disk(const PolarPoint& p) {
  const double r = std::tanh(0.5 * p.rho);
  const double e = std::exp(-p.rho);
  const double gap = 4.0 * e / ((1.0 + e) * (1.0 + e));  // sech²(rho/2)
  if (!(gap > 0.0)) throw std::domain_error("point lies beyond the representable disk radius");
  const double phi = p.phi.radians();
  return make_disk_point(r * std::cos(phi), r * std::sin(phi), gap);
}

double polar_distance(const PolarPoint& p1, const PolarPoint& p2) {
  const bool swap = p2.rho < p1.rho || (p2.rho == p1.rho && p2.phi < p1.phi);
  const PolarPoint& a = swap ? p2 : p1;
  const PolarPoint& b = swap ? p1 : p2;

  // sinh²(d/2) = sinh²((ρ1 - ρ2)/2) + sin²((φ1 - φ2)/2)·sinh ρ1·sinh ρ2.
  // Both terms are accumulated as logarithms.
  const double half_gap = 0.5 * (b.rho - a.rho);
  const double radial = half_gap > 0.0 ? 2.0 * log_sinh(half_gap) : kNegInf;

  double angular = kNegInf;
  if (a.rho > 0.0 && b.rho > 0.0) {
    const double chord = log_half_chord(a.phi, b.phi);
    if (chord != kNegInf) angular = 2.0 * chord + log_sinh(a.rho) + log_sinh(b.rho);
  }

  const double log_s = log_add_exp(radial, angular);
  if (log_s == kNegInf) return 0.0;
  return 2.0 * asinh_exp(0.5 * log_s);
}

double scaled_distance(const PolarPoint& p1, const PolarPoint& p2, double inv_n) {
  if (!(inv_n > 0.0 && inv_n <= 1.0)) throw std::invalid_argument("inv_n must lie in (0, 1]");
  return inv_n * polar_distance(p1, p2);
}

double tree_limit_estimate(double r1, double r2, double cap_phi) {
  return std::max(std::abs(r1 - r2), r1 + r2 - 2.0 * cap_phi);
}

std::pair<PolarPoint, PolarPoint> asymptotic_pair(const AsymptoticParams& params) {
  const auto& [r1, r2, cap_phi, n] = params;
  if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(cap_phi) || !std::isfinite(n)) {
    throw std::invalid_argument("asymptotic parameters must be finite");
  }
  if (r1 < 0.0 || r2 < 0.0 || cap_phi < 0.0) throw std::invalid_argument("R1, R2 and Phi must be non-negative");
  if (n < 1.0) throw std::invalid_argument("N must be at least 1");
  const AngleTerm offset{1.0, n * cap_phi};
  return {PolarPoint(n * r1, Angle(0.0)), PolarPoint(n * r2, Angle::from_terms(0.0, {&offset, 1}))};
}

double convergence_error(const AsymptoticParams& params) {
  const auto [x1, x2] = asymptotic_pair(params);
  return std::abs(polar_distance(x1, x2) / params.n - tree_limit_estimate(params.r1, params.r2, params.cap_phi));
}

}  // namespace asymptree::hyperbolic
