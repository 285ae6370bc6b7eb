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

#include "ript/charging.hpp"

#include "ript/sweep_result.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ript {

void BatteryPack::validate() const {
  if (!(nominal_voltage > 0.0)) throw std::invalid_argument("battery: nominal_voltage must be > 0");
  if (!(capacity > 0.0)) throw std::invalid_argument("battery: capacity must be > 0");
  if (series_count < 1) throw std::invalid_argument("battery: series_count must be >= 1");
  if (!(initial_soc >= 0.0 && initial_soc <= 1.0))
    throw std::invalid_argument("battery: initial_soc must be in [0, 1]");
  if (!(charge_efficiency > 0.0 && charge_efficiency <= 1.0))
    throw std::invalid_argument("battery: charge_efficiency must be in (0, 1]");
}

double BatteryPack::energy_joules() const {
  return series_count * nominal_voltage * capacity * 3600.0;
}

ChargeResult charge_time(const BatteryPack& pack, double delivered_power) {
  pack.validate();
  if (!(delivered_power > 0.0))
    throw std::invalid_argument("charge_time: delivered power must be > 0");

  const double stored_rate = delivered_power * pack.charge_efficiency;  // W into the cells
  ChargeResult r;
  r.seconds = (1.0 - pack.initial_soc) * pack.energy_joules() / stored_rate;

  const double soc_per_second = stored_rate / pack.energy_joules();
  const auto whole = static_cast<long>(std::floor(r.seconds));
  r.trace.reserve(static_cast<std::size_t>(whole) + 2);
  for (long t = 0; t <= whole; ++t)
    r.trace.push_back({static_cast<double>(t),
                       std::min(1.0, pack.initial_soc + soc_per_second * t)});
  if (r.trace.back().time < r.seconds) r.trace.push_back({r.seconds, 1.0});
  r.trace.back().soc = 1.0;
  return r;
}

double implied_initial_soc(const BatteryPack& pack, double delivered_power,
                           double observed_seconds) {
  pack.validate();
  if (!(delivered_power > 0.0) || !(observed_seconds >= 0.0))
    throw std::invalid_argument("implied_initial_soc: invalid inputs");
  const double charged = delivered_power * pack.charge_efficiency * observed_seconds;
  return std::clamp(1.0 - charged / pack.energy_joules(), 0.0, 1.0);
}

void write_trace_csv(std::ostream& out, const ChargeResult& result) {
  out << "time[s],soc\n";
  for (const auto& s : result.trace)
    out << format_number(s.time) << ',' << format_number(s.soc) << '\n';
}

}  // namespace ript
