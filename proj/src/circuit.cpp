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

#include "ript/circuit.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace ript {

namespace {

constexpr double kMaxConditionNumber = 1e12;

double omega_of(double frequency) { return 2.0 * std::numbers::pi * frequency; }

}  // namespace

void ResonatorParams::validate() const {
  if (!(C_primary > 0.0) || !(C_secondary > 0.0))
    throw std::invalid_argument("circuit: capacitances must be > 0");
  if (!(R_primary > 0.0) || !(R_secondary > 0.0))
    throw std::invalid_argument("circuit: series resistances must be > 0");
  if (!(R_load >= 0.0)) throw std::invalid_argument("circuit: R_load must be >= 0");
  if (!(capacitor_voltage_rating >= 0.0))
    throw std::invalid_argument("circuit: capacitor_voltage_rating must be >= 0");
}

void DriveSpec::validate() const {
  if (!(frequency > 0.0)) throw std::invalid_argument("drive: frequency must be > 0");
  if (!(voltage >= 0.0)) throw std::invalid_argument("drive: voltage must be >= 0");
}

double DriveSpec::source_rms() const {
  return source == SourceKind::FullBridgeFundamental
             ? full_bridge_fundamental_rms(voltage)
             : voltage;
}

double full_bridge_fundamental_rms(double dc_voltage) {
  return dc_voltage * 2.0 * std::numbers::sqrt2 / std::numbers::pi;
}

double resonance_frequency(double inductance, double capacitance) {
  if (!(inductance > 0.0) || !(capacitance > 0.0))
    throw std::invalid_argument("resonance_frequency: L and C must be > 0");
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(inductance * capacitance));
}

double tuning_capacitance(double inductance, double frequency) {
  if (!(inductance > 0.0) || !(frequency > 0.0))
    throw std::invalid_argument("tuning_capacitance: L and f must be > 0");
  const double w = omega_of(frequency);
  return 1.0 / (w * w * inductance);
}

ImpedanceMatrix impedance_matrix(const ResonatorParams& p, double l_primary,
                                 double l_secondary, double mutual,
                                 double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("impedance_matrix: omega must be > 0");
  ImpedanceMatrix z;
  z(0, 0) = Complex(p.R_primary, omega * l_primary - 1.0 / (omega * p.C_primary));
  z(1, 1) = Complex(p.R_secondary + p.R_load,
                    omega * l_secondary - 1.0 / (omega * p.C_secondary));
  z(0, 1) = Complex(0.0, omega * mutual);
  z(1, 0) = z(0, 1);
  return z;
}

CircuitSolution solve(const ResonatorParams& p, const LinkInductances& link,
                      double source_rms, double frequency) {
  p.validate();
  if (!(frequency > 0.0)) throw std::invalid_argument("solve: frequency must be > 0");
  const double w = omega_of(frequency);
  const ImpedanceMatrix z =
      impedance_matrix(p, link.L_primary, link.L_secondary, link.mutual, w);

  const Eigen::JacobiSVD<ImpedanceMatrix> svd(z);
  const auto sv = svd.singularValues();
  if (!(sv(1) > 0.0) || sv(0) / sv(1) > kMaxConditionNumber)
    throw SingularCircuitError("solve: impedance matrix is singular at " +
                               std::to_string(frequency) + " Hz");

  // Cramer's rule on the 2x2 system Z [Ip, Is]^T = [Vp, 0]^T.
  const Complex det = z(0, 0) * z(1, 1) - z(0, 1) * z(1, 0);
  const Complex vp(source_rms, 0.0);

  CircuitSolution s;
  s.frequency = frequency;
  s.I_primary = vp * z(1, 1) / det;
  s.I_secondary = -vp * z(1, 0) / det;
  s.V_load = s.I_secondary * p.R_load;
  s.P_load = std::norm(s.I_secondary) * p.R_load;
  s.P_in = (vp * std::conj(s.I_primary)).real();
  s.efficiency = s.P_in > 0.0 ? s.P_load / s.P_in : 0.0;
  s.V_cap_primary = std::abs(s.I_primary) / (w * p.C_primary);
  s.V_cap_secondary = std::abs(s.I_secondary) / (w * p.C_secondary);
  s.capacitor_overstress =
      p.capacitor_voltage_rating > 0.0 &&
      std::max(s.V_cap_primary, s.V_cap_secondary) > p.capacitor_voltage_rating;
  return s;
}

CircuitSolution solve(const ResonatorParams& p, const LinkInductances& link,
                      const DriveSpec& drive) {
  drive.validate();
  return solve(p, link, drive.source_rms(), drive.frequency);
}

Complex secondary_current_closed_form(const ResonatorParams& p, double omega_m,
                                      double vp) {
  const double denom = p.R_primary * (p.R_secondary + p.R_load) + omega_m * omega_m;
  return -vp * Complex(0.0, omega_m) / denom;
}

double efficiency_closed_form(const ResonatorParams& p, double omega_m) {
  const double x2 = omega_m * omega_m;
  const double rsl = p.R_secondary + p.R_load;
  const double denom = rsl * (p.R_primary * rsl + x2);
  return denom > 0.0 ? x2 * p.R_load / denom : 0.0;
}

double load_power_closed_form(const ResonatorParams& p, double omega_m,
                              double vp) {
  const double x2 = omega_m * omega_m;
  const double denom = p.R_primary * (p.R_secondary + p.R_load) + x2;
  return x2 * vp * vp * p.R_load / (denom * denom);
}

SweepResult frequency_sweep(const ResonatorParams& p,
                            const LinkInductances& link, double source_rms,
                            double f_start, double f_stop, int points) {
  if (!(f_start > 0.0) || !(f_stop > 0.0))
    throw std::invalid_argument("frequency_sweep: frequencies must be > 0");
  if (points < 1) throw std::invalid_argument("frequency_sweep: points must be >= 1");
  if (points == 1 && f_start != f_stop)
    throw std::invalid_argument("frequency_sweep: a single point needs f_start == f_stop");
  if (points > 1 && !(f_stop > f_start))
    throw std::invalid_argument("frequency_sweep: f_stop must exceed f_start");

  SweepResult out{"frequency", "Hz", {}};
  out.rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    SweepRow row;
    row.x = points == 1 ? f_start
                        : f_start + (f_stop - f_start) * i / (points - 1.0);
    row.mutual = link.mutual;
    row.coupling = link.coupling;
    try {
      const CircuitSolution s = solve(p, link, source_rms, row.x);
      row.P_load = s.P_load;
      row.P_in = s.P_in;
      row.efficiency = s.efficiency;
      row.I_primary = std::abs(s.I_primary);
      row.I_secondary = std::abs(s.I_secondary);
      row.valid = true;
      if (s.capacitor_overstress) row.flags = "cap_overstress";
    } catch (const SingularCircuitError&) {
      row.flags = "singular";
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

double peak_efficiency_frequency(const SweepResult& sweep) {
  double best = -1.0;
  double at = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : sweep.rows) {
    if (r.valid && r.efficiency > best) {
      best = r.efficiency;
      at = r.x;
    }
  }
  return at;
}

double rectifier_equivalent_load(double r_dc) {
  if (!(r_dc > 0.0)) throw std::invalid_argument("rectifier_equivalent_load: R_dc must be > 0");
  return 8.0 / (std::numbers::pi * std::numbers::pi) * r_dc;
}

MaxPowerReport mptp_analysis(const ResonatorParams& p, double omega_m,
                             double vp, double r_min, double r_max,
                             int grid_points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || grid_points < 3)
    throw std::invalid_argument("mptp_analysis: invalid load scan range");

  ResonatorParams q = p;
  const auto power_at = [&](double log_r) {
    q.R_load = std::exp(log_r);
    return load_power_closed_form(q, omega_m, vp);
  };

  const double lo = std::log(r_min);
  const double hi = std::log(r_max);
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_p = -1.0;
  for (int i = 0; i < grid_points; ++i) {
    const double pw = power_at(lo + step * i);
    if (pw > best_p) {
      best_p = pw;
      best = i;
    }
  }

  MaxPowerReport report;
  report.scan_min = r_min;
  report.scan_max = r_max;
  double log_opt = lo + step * best;
  if (best == 0 || best == grid_points - 1) {
    report.hit_scan_boundary = true;
  } else {
    // Golden-section refinement inside the bracketing grid cells.
    double a = lo + step * (best - 1);
    double b = lo + step * (best + 1);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
      if (power_at(c) > power_at(d))
        b = d;
      else
        a = c;
      c = b - g * (b - a);
      d = a + g * (b - a);
    }
    log_opt = 0.5 * (a + b);
  }
  q.R_load = std::exp(log_opt);
  report.R_load_at_max_power = q.R_load;
  report.P_load_max = load_power_closed_form(q, omega_m, vp);
  report.efficiency_at_max_power = efficiency_closed_form(q, omega_m);
  return report;
}

}  // namespace ript
