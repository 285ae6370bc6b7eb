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

#include "ript/design.hpp"

#include <cmath>
#include <stdexcept>

namespace ript {

namespace {

SweepRow evaluate_row(const CoilPair& pair, const ResonatorParams& circuit,
                      const DriveSpec& drive, double x, double axial,
                      double lateral) {
  SweepRow row;
  row.x = x;
  try {
    const LinkInductances link = pair.link_at(axial, lateral);
    row.mutual = link.mutual;
    row.coupling = link.coupling;
    const CircuitSolution s = solve(circuit, link, drive);
    row.P_load = s.P_load;
    row.P_in = s.P_in;
    row.efficiency = s.efficiency;
    row.I_primary = std::abs(s.I_primary);
    row.I_secondary = std::abs(s.I_secondary);
    row.valid = true;
    if (s.capacitor_overstress) row.flags = "cap_overstress";
  } catch (const GeometryOverlapError&) {
    row.flags = "overlap";
  } catch (const SingularCircuitError&) {
    row.flags = "singular";
  }
  return row;
}

bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
  const bool no_worse = a.P_load >= b.P_load && a.efficiency >= b.efficiency &&
                        a.turns <= b.turns;
  const bool better = a.P_load > b.P_load || a.efficiency > b.efficiency ||
                      a.turns < b.turns;
  return no_worse && better;
}

}  // namespace

CoilPair::CoilPair(CoilPairSpec spec)
    : spec_(std::move(spec)),
      tx_(build_coil(spec_.tx, spec_.wire, spec_.segments_per_turn)),
      rx_(build_coil(spec_.rx, spec_.wire, spec_.segments_per_turn)) {
  lp_ = spec_.L_primary_override ? *spec_.L_primary_override
                                 : self_inductance(tx_, spec_.integration);
  ls_ = spec_.L_secondary_override ? *spec_.L_secondary_override
                                   : self_inductance(rx_, spec_.integration);
  if (!(lp_ > 0.0) || !(ls_ > 0.0))
    throw std::invalid_argument("coil pair: self-inductances must be > 0");
}

CoilGeometry CoilPair::rx_at(double axial, double lateral) const {
  return transform_coil(rx_, Vec3(0.0, lateral, axial));
}

LinkInductances CoilPair::link_at(double axial, double lateral) const {
  const double m = mutual_inductance(tx_, rx_at(axial, lateral), spec_.integration);
  return LinkInductances::from(lp_, ls_, m);
}

CircuitTemplate CircuitTemplate::symmetric(const ResistanceModel& model,
                                           double r_load) {
  CircuitTemplate t;
  t.resistance_primary = model;
  t.resistance_secondary = model;
  t.R_load = r_load;
  return t;
}

ResonatorParams resolve_circuit(const CoilPair& pair, const CircuitTemplate& tmpl,
                                const DriveSpec& drive) {
  drive.validate();
  ResonatorParams p;
  p.R_primary = ac_resistance(pair.tx(), drive.frequency, tmpl.resistance_primary) + tmpl.extra_esr;
  p.R_secondary =
      ac_resistance(pair.rx_local(), drive.frequency, tmpl.resistance_secondary) + tmpl.extra_esr;
  p.R_load = tmpl.R_load;
  p.capacitor_voltage_rating = tmpl.capacitor_voltage_rating;
  p.C_primary = tmpl.C_primary ? *tmpl.C_primary
                               : tuning_capacitance(pair.L_primary(), drive.frequency);
  p.C_secondary = tmpl.C_secondary
                      ? *tmpl.C_secondary
                      : tuning_capacitance(pair.L_secondary(), drive.frequency);
  p.validate();
  return p;
}

SweepResult distance_sweep(const CoilPair& pair, const ResonatorParams& circuit,
                           const DriveSpec& drive, std::span<const double> distances) {
  require_strictly_monotone(distances, "distance");
  for (double d : distances)
    if (!(d > 0.0)) throw std::invalid_argument("distance: values must be > 0");

  SweepResult out{"distance", "m", {}};
  for (double d : distances)
    out.rows.push_back(evaluate_row(pair, circuit, drive, d, d, 0.0));
  return out;
}

SweepResult lateral_offset_sweep(const CoilPair& pair, const ResonatorParams& circuit,
                                 const DriveSpec& drive, double axial_distance,
                                 std::span<const double> offsets) {
  require_strictly_monotone(offsets, "offset");
  for (double y : offsets)
    if (!(y >= 0.0)) throw std::invalid_argument("offset: values must be >= 0");
  if (!(axial_distance > 0.0))
    throw std::invalid_argument("offset: axial distance must be > 0");

  SweepResult out{"offset", "m", {}};
  for (double y : offsets)
    out.rows.push_back(evaluate_row(pair, circuit, drive, y, axial_distance, y));
  return out;
}

std::vector<std::size_t> pareto_front(std::span<const ParetoPoint> points) {
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j)
      dominated = j != i && dominates(points[j], points[i]);
    if (!dominated) front.push_back(i);
  }
  return front;
}

TurnsStudy optimize_turns(const CoilPairSpec& family, const CircuitTemplate& tmpl,
                          const DriveSpec& drive, double axial_distance,
                          int turns_min, int turns_max) {
  if (turns_min < 1 || turns_max < turns_min)
    throw std::invalid_argument("optimize_turns: invalid turns range");

  CircuitTemplate tuned = tmpl;
  tuned.C_primary.reset();
  tuned.C_secondary.reset();

  TurnsStudy study;
  for (int n = turns_min; n <= turns_max; ++n) {
    CoilPairSpec spec = family;
    spec.tx.turns = n;
    spec.rx.turns = n;
    spec.L_primary_override.reset();
    spec.L_secondary_override.reset();
    const CoilPair pair(spec);
    const ResonatorParams circuit = resolve_circuit(pair, tuned, drive);
    const LinkInductances link = pair.link_at(axial_distance);
    const CircuitSolution s = solve(circuit, link, drive);

    ParetoPoint pt;
    pt.turns = n;
    pt.P_load = s.P_load;
    pt.efficiency = s.efficiency;
    pt.coil_resistance = circuit.R_primary - tmpl.extra_esr;
    pt.wire_length = total_wire_length(pair.tx());
    pt.L_primary = pair.L_primary();
    pt.mutual = link.mutual;
    study.points.push_back(pt);
  }
  study.front = pareto_front(study.points);
  return study;
}

ShapeReport evaluate_shape(const std::string& label, const CoilPairSpec& spec,
                           const CircuitTemplate& tmpl, const DriveSpec& drive,
                           double axial_distance) {
  const CoilPair pair(spec);
  const ResonatorParams circuit = resolve_circuit(pair, tmpl, drive);
  const LinkInductances link = pair.link_at(axial_distance);
  const CircuitSolution s = solve(circuit, link, drive);
  ShapeReport r;
  r.label = label;
  r.L_primary = link.L_primary;
  r.L_secondary = link.L_secondary;
  r.mutual = link.mutual;
  r.coupling = link.coupling;
  r.R_primary = circuit.R_primary;
  r.wire_length = total_wire_length(pair.tx());
  r.efficiency = s.efficiency;
  r.P_load = s.P_load;
  return r;
}

ShapeComparison shape_comparison(const CoilPairSpec& base, int polygon_sides,
                                 const CircuitTemplate& tmpl, const DriveSpec& drive,
                                 double axial_distance) {
  const auto reshape = [&](bool polygon) {
    CoilPairSpec spec = base;
    for (CoilShape* s : {&spec.tx, &spec.rx}) {
      s->kind = polygon ? ShapeKind::RegularPolygon : ShapeKind::Circle;
      s->polygon_sides = polygon ? polygon_sides : 0;
    }
    spec.L_primary_override.reset();
    spec.L_secondary_override.reset();
    spec.segments_per_turn = 0;
    return spec;
  };
  return {evaluate_shape("circle", reshape(false), tmpl, drive, axial_distance),
          evaluate_shape("polygon" + std::to_string(polygon_sides), reshape(true), tmpl,
                         drive, axial_distance)};
}

}  // namespace ript
