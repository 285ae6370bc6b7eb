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

#include "ript/sweep_result.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ript {

void require_strictly_monotone(std::span<const double> xs, const std::string& what) {
  if (xs.empty()) throw std::invalid_argument(what + ": no points given");
  if (xs.size() < 2) return;
  const bool rising = xs[1] > xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const bool ok = rising ? xs[i] > xs[i - 1] : xs[i] < xs[i - 1];
    if (!ok)
      throw std::invalid_argument(what + ": values must be strictly monotone (entry " +
                                  std::to_string(i) + ")");
  }
}

void SweepResult::validate() const {
  std::vector<double> xs;
  xs.reserve(rows.size());
  for (const auto& r : rows) {
    xs.push_back(r.x);
    if (r.valid && !(std::isfinite(r.mutual) && std::isfinite(r.P_load) &&
                     std::isfinite(r.efficiency) && std::isfinite(r.P_in)))
      throw std::logic_error("sweep: valid row with non-finite fields");
  }
  require_strictly_monotone(xs, independent_name);
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& sweep) {
  out << sweep.independent_name << '[' << sweep.independent_unit << ']'
      << ",M[H],k,P_load[W],P_in[W],efficiency,I_primary[A],I_secondary[A],flags\n";
  for (const auto& r : sweep.rows) {
    out << format_number(r.x) << ',' << format_number(r.mutual) << ','
        << format_number(r.coupling) << ',' << format_number(r.P_load) << ','
        << format_number(r.P_in) << ',' << format_number(r.efficiency) << ','
        << format_number(r.I_primary) << ',' << format_number(r.I_secondary) << ','
        << (r.valid ? (r.flags.empty() ? "ok" : r.flags) : "invalid;" + r.flags)
        << '\n';
  }
}

}  // namespace ript
