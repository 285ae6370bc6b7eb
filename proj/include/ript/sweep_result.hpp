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

#ifndef RIPT_SWEEP_RESULT_HPP
#define RIPT_SWEEP_RESULT_HPP

#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ript {

struct SweepRow {
  static constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  double x = kNaN;
  double mutual = kNaN;       // H
  double coupling = kNaN;
  double P_load = kNaN;       // W
  double P_in = kNaN;         // W
  double efficiency = kNaN;
  double I_primary = kNaN;    // A rms
  double I_secondary = kNaN;  // A rms
  bool valid = false;
  std::string flags;          // ';'-separated, empty when clean
};

struct SweepResult {
  std::string independent_name;
  std::string independent_unit;
  std::vector<SweepRow> rows;

  // Throws unless x values are strictly monotone and every valid row is
  // finite.
  void validate() const;
};

// Rejects empty or non-strictly-monotone sequences.
void require_strictly_monotone(std::span<const double> xs, const std::string& what);

// 9 significant digits in scientific notation, "nan" for non-finite.
std::string format_number(double v);

// Header row then one row per sweep point, LF line endings.
void write_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace ript

#endif  // RIPT_SWEEP_RESULT_HPP
