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

#include "ript/losses.hpp"

#include "ript/magnetics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ript {

namespace {

using cld = std::complex<long double>;

// Power series for J0 and J1 at complex argument.
void bessel_j01(cld z, cld& j0, cld& j1) {
  const cld q = -0.25L * z * z;
  cld term0 = 1.0L;
  cld term1 = 0.5L * z;
  j0 = term0;
  j1 = term1;
  for (int k = 1; k < 400; ++k) {
    term0 *= q / static_cast<long double>(k * k);
    term1 *= q / static_cast<long double>(k * (k + 1));
    j0 += term0;
    j1 += term1;
    if (std::abs(term0) < 1e-21L * std::abs(j0) &&
        std::abs(term1) < 1e-21L * std::abs(j1))
      break;
  }
}

// Above this r/delta the series loses too many digits; the asymptotic
// expansion is accurate to ~1e-7 relative there.
constexpr double kAsymptoticCrossover = 18.0;

}  // namespace

ResistanceModel ResistanceModel::fixed(double ohms) {
  ResistanceModel m;
  m.mode = ResistanceMode::FixedOverride;
  m.override_ohms = ohms;
  return m;
}

void ResistanceModel::validate() const {
  if (mode == ResistanceMode::FixedOverride && !(override_ohms >= 0.0))
    throw std::invalid_argument("resistance: override must be >= 0");
}

double strand_radius(const WireSpec& wire) {
  return wire.cross_section_radius / std::sqrt(static_cast<double>(wire.litz_strand_count));
}

double dc_resistance(const CoilGeometry& coil) {
  const WireSpec& wire = coil.wire();
  // Litz bundles are modeled with the same copper area as a solid wire of the
  // bundle radius (n strands of radius rho/sqrt(n)).
  const double rs = strand_radius(wire);
  const double area = wire.litz_strand_count * std::numbers::pi * rs * rs;
  return wire.resistivity * total_wire_length(coil) / area;
}

double skin_depth(double resistivity, double frequency) {
  if (!(frequency > 0.0)) throw std::invalid_argument("skin_depth: frequency must be > 0");
  return std::sqrt(resistivity / (std::numbers::pi * frequency * kMu0));
}

double skin_factor(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("skin_factor: negative argument");
  if (x == 0.0) return 1.0;
  if (x > kAsymptoticCrossover)
    return 0.5 * x + 0.25 + 3.0 / (32.0 * x) - 1.0 / (16.0 * x * x * x);
  const cld z = cld(x, -x);  // k r with k = (1 - j) / delta
  cld j0, j1;
  bessel_j01(z, j0, j1);
  const cld ratio = 0.5L * z * j0 / j1;
  return std::max(1.0, static_cast<double>(ratio.real()));
}

double ac_resistance(const CoilGeometry& coil, double frequency,
                     const ResistanceModel& model) {
  model.validate();
  if (!(frequency > 0.0)) throw std::invalid_argument("ac_resistance: frequency must be > 0");
  const double thermal = 1.0 + model.temperature_coefficient * model.temperature_rise;
  switch (model.mode) {
    case ResistanceMode::FixedOverride:
      return model.override_ohms;
    case ResistanceMode::DcOnly:
      return dc_resistance(coil) * thermal;
    case ResistanceMode::SkinEffect: {
      const double delta = skin_depth(coil.wire().resistivity * thermal, frequency);
      return dc_resistance(coil) * thermal * skin_factor(strand_radius(coil.wire()) / delta);
    }
  }
  return 0.0;
}

}  // namespace ript
