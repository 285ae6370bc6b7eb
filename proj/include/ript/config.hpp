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

// Scenario files: `[section]` headers followed by `key = value` lines.
// Quantities carry optional SI-prefixed unit suffixes ("1nF", "63.15uH",
// "1m", "1cm", "615kHz"); a bare number is read in SI base units. `#` starts
// a comment. Unknown sections and keys are errors.

#ifndef RIPT_CONFIG_HPP
#define RIPT_CONFIG_HPP

#include "ript/charging.hpp"
#include "ript/circuit.hpp"
#include "ript/design.hpp"
#include "ript/geometry.hpp"
#include "ript/losses.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ript {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string section, std::string key, const std::string& message);

  int line() const { return line_; }
  const std::string& section() const { return section_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string section_;
  std::string key_;
};

enum class StudyKind { Solve, FreqSweep, DistanceSweep, OffsetSweep, OptimizeTurns, ShapeCompare, Charge };

std::string_view study_name(StudyKind kind);

struct CoilSection {
  CoilShape shape;
  int segments_per_turn = 0;
  bool operator==(const CoilSection&) const = default;
};

struct CircuitSection {
  std::optional<double> C_primary;  // unset = tune to drive frequency
  std::optional<double> C_secondary;
  ResistanceMode resistance_mode = ResistanceMode::FixedOverride;
  double R_primary = 0.55;    // used by FixedOverride
  double R_secondary = 0.55;
  double extra_esr = 0.0;
  double R_load = 10.0;
  std::optional<double> R_load_dc;  // when set, R_load = (8/pi^2) R_load_dc
  double capacitor_rating = 0.0;
  double temperature_coefficient = 0.0;
  double temperature_rise = 0.0;
  std::optional<double> L_primary;
  std::optional<double> L_secondary;
  std::optional<double> mutual;
  bool operator==(const CircuitSection&) const = default;
};

struct StudySection {
  StudyKind kind = StudyKind::Solve;
  double distance = 1.0;
  double f_start = 500e3;
  double f_stop = 750e3;
  int points = 251;
  std::vector<double> distances{0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
  std::vector<double> offsets{0.0, 0.25, 0.5, 0.75, 1.0};
  int turns_min = 1;
  int turns_max = 10;
  int polygon_sides = 8;
  BatteryPack battery;
  std::optional<double> delivered_power;  // charge study; unset = solved P_load
  double observed_charge_time = 300.0;
  int quadrature_points = 8;
  bool internal_inductance = false;
  bool operator==(const StudySection&) const = default;
};

struct ScenarioConfig {
  CoilSection coil_tx;
  CoilSection coil_rx;
  WireSpec wire;
  CircuitSection circuit;
  DriveSpec drive;
  StudySection study;
  bool operator==(const ScenarioConfig&) const = default;

  // Throws ConfigError naming the offending section.
  void validate() const;

  CoilPairSpec coil_pair_spec(int threads = 1) const;
  CircuitTemplate circuit_template() const;
};

// Parses a quantity such as "1.5mm" against the expected base unit
// ("m", "H", "F", "Ohm", "V", "Hz", "W", "Ah", "s", "K" or "" for
// dimensionless).
double parse_quantity(std::string_view text, std::string_view unit);

ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::string& path);
std::string serialize_scenario(const ScenarioConfig& config);

// Built-in reference scenario for the 1 m, 5-turn link.
std::string_view reference_scenario_text();

}  // namespace ript

#endif  // RIPT_CONFIG_HPP
