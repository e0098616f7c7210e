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

#include "asymptree/angle.hpp"

#include <span>
#include <utility>
#include <vector>

namespace asymptree::hyperbolic {

/// Point of the open unit disk model.
///
/// Besides the Cartesian coordinates the point carries 1 - |z|², which is the
/// quantity every distance computation actually needs. Near the boundary it
/// cannot be recovered from re/im without catastrophic cancellation, so points
/// built from polar coordinates store it exactly.
class DiskPoint {
 public:
  /// Throws std::domain_error unless re² + im² < 1.
  DiskPoint(double re, double im);

  double re() const { return re_; }
  double im() const { return im_; }
  double boundary_gap() const { return gap_; }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  friend DiskPoint make_disk_point(double, double, double);
  DiskPoint(double re, double im, double gap) : re_(re), im_(im), gap_(gap) {}

  double re_;
  double im_;
  double gap_;
};

/// Polar coordinates: rho is the hyperbolic distance from the origin.
struct PolarPoint {
  /// Throws std::domain_error for negative or non-finite rho.
  PolarPoint(double rho, Angle phi);
  PolarPoint(double rho, double phi) : PolarPoint(rho, Angle(phi)) {}

  double rho;
  Angle phi;

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

/// Parameters of the two-point family x1 = (N·R1, 0), x2 = (N·R2, e^{-N·Φ}).
struct AsymptoticParams {
  double r1;
  double r2;
  double cap_phi;
  double n;
};

/// Distance in the disk, log((1 + A) / (1 - A)) with A = |(z1 - z2) / (z1 conj(z2) - 1)|.
double disk_distance(const DiskPoint& z1, const DiskPoint& z2);

DiskPoint polar_to_disk(const PolarPoint& p);

/// Polar-coordinate distance evaluated entirely in the log domain; finite for
/// rho up to at least 1e5 and exactly symmetric.
double polar_distance(const PolarPoint& p1, const PolarPoint& p2);

/// inv_n · polar_distance(p1, p2); inv_n must lie in (0, 1].
double scaled_distance(const PolarPoint& p1, const PolarPoint& p2, double inv_n);

/// max(|r1 - r2|, r1 + r2 - 2·cap_phi).
double tree_limit_estimate(double r1, double r2, double cap_phi);

/// The two points of the asymptotic family for `params`.
std::pair<PolarPoint, PolarPoint> asymptotic_pair(const AsymptoticParams& params);

/// |polar_distance(x1, x2) / N - tree_limit_estimate(R1, R2, Φ)|.
double convergence_error(const AsymptoticParams& params);

/// log(sinh(x)) for x > 0 without overflow.
double log_sinh(double x);

/// log(exp(a) + exp(b)); either argument may be -infinity.
double log_add_exp(double a, double b);

// Batched kernels. The parallel versions distribute independent evaluations
// over OpenMP threads; the serial_* versions are the straight-line reference
// the tests compare against.

std::vector<double> polar_distance_batch(std::span<const PolarPoint> a,
                                         std::span<const PolarPoint> b);
std::vector<double> serial_polar_distance_batch(std::span<const PolarPoint> a,
                                                std::span<const PolarPoint> b);

std::vector<double> convergence_error_batch(std::span<const AsymptoticParams> params);
std::vector<double> serial_convergence_error_batch(std::span<const AsymptoticParams> params);

}  // namespace asymptree::hyperbolic
