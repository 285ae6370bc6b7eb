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

#ifndef RIPT_DESIGN_HPP
#define RIPT_DESIGN_HPP

#include "ript/circuit.hpp"
#include "ript/geometry.hpp"
#include "ript/losses.hpp"
#include "ript/magnetics.hpp"
#include "ript/sweep_result.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ript {

struct CoilPairSpec {
  CoilShape tx;
  CoilShape rx;
  WireSpec wire;
  int segments_per_turn = 0;  // 0 = per-shape default
  IntegrationSettings integration;
  // Measured inductances replace the extracted ones when set.
  std::optional<double> L_primary_override;
  std::optional<double> L_secondary_override;
};

// Coil pair with self-inductances extracted once. The receiver is placed by
// translating its local frame: `axial` along +z, `lateral` along +y.
class CoilPair {
 public:
  explicit CoilPair(CoilPairSpec spec);

  const CoilPairSpec& spec() const { return spec_; }
  const CoilGeometry& tx() const { return tx_; }
  const CoilGeometry& rx_local() const { return rx_; }
  double L_primary() const { return lp_; }
  double L_secondary() const { return ls_; }

  CoilGeometry rx_at(double axial, double lateral = 0.0) const;
  // Throws GeometryOverlapError for intersecting windings.
  LinkInductances link_at(double axial, double lateral = 0.0) const;

 private:
  CoilPairSpec spec_;
  CoilGeometry tx_;
  CoilGeometry rx_;
  double lp_ = 0.0;
  double ls_ = 0.0;
};

// Circuit values that depend on the coils: resistances come from the loss
// model, unset capacitances are tuned to the drive frequency.
struct CircuitTemplate {
  ResistanceModel resistance_primary;
  ResistanceModel resistance_secondary;
  double extra_esr = 0.0;  // per side, added to the coil resistance
  double R_load = 10.0;
  double capacitor_voltage_rating = 0.0;
  std::optional<double> C_primary;
  std::optional<double> C_secondary;

  // Same loss model on both sides.
  static CircuitTemplate symmetric(const ResistanceModel& model, double r_load);
  bool operator==(const CircuitTemplate&) const = default;
};

ResonatorParams resolve_circuit(const CoilPair& pair, const CircuitTemplate& tmpl,
                                const DriveSpec& drive);

SweepResult distance_sweep(const CoilPair& pair, const ResonatorParams& circuit,
                           const DriveSpec& drive, std::span<const double> distances);

SweepResult lateral_offset_sweep(const CoilPair& pair, const ResonatorParams& circuit,
                                 const DriveSpec& drive, double axial_distance,
                                 std::span<const double> offsets);

struct ParetoPoint {
  int turns = 0;
  double P_load = 0.0;
  double efficiency = 0.0;
  double coil_resistance = 0.0;  // tx side, ohm
  double wire_length = 0.0;      // tx coil, m
  double L_primary = 0.0;
  double mutual = 0.0;
};

struct TurnsStudy {
  std::vector<ParetoPoint> points;
  std::vector<std::size_t> front;  // indices into points, ascending
};

// Indices of points not dominated under (max P_load, max efficiency,
// min turns).
std::vector<std::size_t> pareto_front(std::span<const ParetoPoint> points);

// Evaluates every turn count in [turns_min, turns_max] with capacitors
// re-tuned to the drive frequency. The family's turn counts are replaced.
TurnsStudy optimize_turns(const CoilPairSpec& family, const CircuitTemplate& tmpl,
                          const DriveSpec& drive, double axial_distance,
                          int turns_min, int turns_max);

struct ShapeReport {
  std::string label;
  double L_primary = 0.0;
  double L_secondary = 0.0;
  double mutual = 0.0;
  double coupling = 0.0;
  double R_primary = 0.0;
  double wire_length = 0.0;
  double efficiency = 0.0;
  double P_load = 0.0;
};

struct ShapeComparison {
  ShapeReport first;
  ShapeReport second;
};

ShapeReport evaluate_shape(const std::string& label, const CoilPairSpec& spec,
                           const CircuitTemplate& tmpl, const DriveSpec& drive,
                           double axial_distance);

// Circle against the inscribed regular polygon with the same aperture,
// turns, pitch and wire as `base` (base shapes are overridden).
ShapeComparison shape_comparison(const CoilPairSpec& base, int polygon_sides,
                                 const CircuitTemplate& tmpl, const DriveSpec& drive,
                                 double axial_distance);

}  // namespace ript

#endif  // RIPT_DESIGN_HPP
