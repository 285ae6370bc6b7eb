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

#ifndef RIPT_LOSSES_HPP
#define RIPT_LOSSES_HPP

#include "ript/geometry.hpp"

namespace ript {

enum class ResistanceMode { DcOnly, SkinEffect, FixedOverride };

struct ResistanceModel {
  ResistanceMode mode = ResistanceMode::SkinEffect;
  double override_ohms = 0.0;            // FixedOverride only
  double temperature_coefficient = 0.0;  // 1/K
  double temperature_rise = 0.0;         // K above the resistivity reference

  static ResistanceModel fixed(double ohms);
  void validate() const;
  bool operator==(const ResistanceModel&) const = default;
};

// Conductor radius used for skin effect: the wire radius for solid wire,
// the strand radius rho/sqrt(n) for litz.
double strand_radius(const WireSpec& wire);

double dc_resistance(const CoilGeometry& coil);

// Skin depth sqrt(resistivity / (pi f mu0)).
double skin_depth(double resistivity, double frequency);

// AC/DC resistance ratio of an isolated round conductor of radius r,
// from the exact Bessel-function solution.
double skin_factor(double radius_over_depth);

double ac_resistance(const CoilGeometry& coil, double frequency,
                     const ResistanceModel& model);

}  // namespace ript

#endif  // RIPT_LOSSES_HPP
