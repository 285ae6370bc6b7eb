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

#ifndef RIPT_CHARGING_HPP
#define RIPT_CHARGING_HPP

#include <ostream>
#include <vector>

namespace ript {

struct BatteryPack {
  double nominal_voltage = 12.0;  // V per unit
  double capacity = 0.8;          // Ah per unit
  int series_count = 2;
  double initial_soc = 0.0;
  double charge_efficiency = 0.85;

  void validate() const;
  // Stored energy at full charge, J.
  double energy_joules() const;
  bool operator==(const BatteryPack&) const = default;
};

struct SocSample {
  double time = 0.0;  // s
  double soc = 0.0;
};

struct ChargeResult {
  double seconds = 0.0;
  std::vector<SocSample> trace;  // 1 s spacing, last sample at `seconds`
};

// Constant-power bulk charge from `initial_soc` to full.
ChargeResult charge_time(const BatteryPack& pack, double delivered_power);

// Starting SOC at which a full charge takes `observed_seconds`; clamped to
// [0, 1].
double implied_initial_soc(const BatteryPack& pack, double delivered_power,
                           double observed_seconds);

void write_trace_csv(std::ostream& out, const ChargeResult& result);

}  // namespace ript

#endif  // RIPT_CHARGING_HPP
