/* Copyright 2026 The RIPT-Sim Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RIPT_MAGNETICS_HPP
#define RIPT_MAGNETICS_HPP

#include "ript/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace ript {

// Vacuum permeability, pre-2019 exact value.
inline constexpr double kMu0 = 4.0e-7 * std::numbers::pi;

class GeometryOverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegrationSettings {
  // Gauss-Legendre nodes per panel on near segment pairs.
  int quadrature_points_per_segment = 8;
  // Pairs whose centers are farther apart than
  // max(min_center_distance_for_midpoint_rule,
  //     midpoint_length_factor * longest segment)
  // use the one-point midpoint rule.
  double min_center_distance_for_midpoint_rule = 0.0;
  double midpoint_length_factor = 4.0;
  // Adds the uniform-current internal inductance mu0*l/(8*pi) per segment
  // (the l/4 term of the round-wire partial inductance). Off by default: at
  // the link's operating frequency the skin depth is far below the wire
  // radius and the internal flux vanishes.
  bool internal_inductance = false;
  // Worker threads for the pair sum, 0 = hardware concurrency. The result is
  // independent of this value.
  int threads = 1;

  void validate() const;
};

struct LinkInductances {
  double L_primary = 0.0;    // H
  double L_secondary = 0.0;  // H
  double mutual = 0.0;       // H
  double coupling = 0.0;     // M / sqrt(Lp * Ls)

  // Fills `coupling` from the other three fields.
  static LinkInductances from(double lp, double ls, double m);
};

// Partial self-inductance of a straight round wire of length l and radius
// rho. Equals the filament-to-surface Neumann integral of the segment with
// itself, plus mu0*l/(8*pi) when `internal` is set.
double partial_self_inductance(double length, double radius, bool internal);

// (mu0/4pi) * double line integral over two straight segments of
// dl_a . dl_b / sqrt(|r_a - r_b|^2 + reg^2), symmetric in (a, b).
double segment_pair_inductance(const Segment& a, const Segment& b,
                               double regularization, int quadrature_points);

double mutual_inductance(const CoilGeometry& a, const CoilGeometry& b,
                         const IntegrationSettings& settings = {});

double self_inductance(const CoilGeometry& coil,
                       const IntegrationSettings& settings = {});

double coupling_coefficient(double l_primary, double l_secondary,
                            double mutual);

LinkInductances extract_link(const CoilGeometry& tx, const CoilGeometry& rx,
                             const IntegrationSettings& settings = {});

}  // namespace ript

#endif  // RIPT_MAGNETICS_HPP
