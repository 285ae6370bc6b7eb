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

#ifndef RIPT_CIRCUIT_HPP
#define RIPT_CIRCUIT_HPP

#include "ript/magnetics.hpp"
#include "ript/sweep_result.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ript {

using Complex = std::complex<double>;
using ImpedanceMatrix = Eigen::Matrix2cd;

class SingularCircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series-series compensated resonator pair.
struct ResonatorParams {
  double C_primary = 1e-9;     // F
  double C_secondary = 1e-9;   // F
  double R_primary = 0.55;     // ohm, coil + capacitor ESR
  double R_secondary = 0.55;   // ohm
  double R_load = 10.0;        // ohm
  double capacitor_voltage_rating = 0.0;  // V rms, 0 = unchecked

  void validate() const;
};

enum class SourceKind { FullBridgeFundamental, Sinusoid };

struct DriveSpec {
  double voltage = 43.0;       // DC rail for FullBridgeFundamental, rms otherwise
  double frequency = 615e3;    // Hz
  SourceKind source = SourceKind::FullBridgeFundamental;

  void validate() const;
  // Rms phasor magnitude applied to the primary.
  double source_rms() const;
  bool operator==(const DriveSpec&) const = default;
};

struct CircuitSolution {
  double frequency = 0.0;
  Complex I_primary;
  Complex I_secondary;
  Complex V_load;
  double P_load = 0.0;
  double P_in = 0.0;
  double efficiency = 0.0;
  double V_cap_primary = 0.0;    // rms across Cp
  double V_cap_secondary = 0.0;  // rms across Cs
  bool capacitor_overstress = false;
};

// Fundamental rms of a full-bridge square wave from rail voltage.
double full_bridge_fundamental_rms(double dc_voltage);

double resonance_frequency(double inductance, double capacitance);

// Capacitance tuning `inductance` to `frequency`.
double tuning_capacitance(double inductance, double frequency);

ImpedanceMatrix impedance_matrix(const ResonatorParams& p, double l_primary,
                                 double l_secondary, double mutual,
                                 double omega);

// Solves Z [Ip, Is]^T = [Vp, 0]^T at the full (detuned) impedance matrix.
CircuitSolution solve(const ResonatorParams& p, const LinkInductances& link,
                      double source_rms, double frequency);
CircuitSolution solve(const ResonatorParams& p, const LinkInductances& link,
                      const DriveSpec& drive);

// Closed forms valid when both sides are resonant.
Complex secondary_current_closed_form(const ResonatorParams& p,
                                      double omega_m, double vp);
double efficiency_closed_form(const ResonatorParams& p, double omega_m);
double load_power_closed_form(const ResonatorParams& p, double omega_m,
                              double vp);

SweepResult frequency_sweep(const ResonatorParams& p,
                            const LinkInductances& link, double source_rms,
                            double f_start, double f_stop, int points);

// Frequency of the highest-efficiency valid row.
double peak_efficiency_frequency(const SweepResult& sweep);

// Fundamental-equivalent AC load of a full-bridge rectifier: (8/pi^2) R_dc.
double rectifier_equivalent_load(double r_dc);

struct MaxPowerReport {
  double R_load_at_max_power = 0.0;
  double P_load_max = 0.0;
  double efficiency_at_max_power = 0.0;
  bool hit_scan_boundary = false;
  double scan_min = 0.0;
  double scan_max = 0.0;
  // Measured system efficiency of the reference build.
  static constexpr double kReferenceEfficiency = 0.4714;
};

// Scans R_load on a log grid (then golden-section refines) for the load that
// maximizes delivered power at fixed source voltage, both sides resonant.
MaxPowerReport mptp_analysis(const ResonatorParams& p, double omega_m,
                             double vp = 1.0, double r_min = 1e-3,
                             double r_max = 1e6, int grid_points = 2001);

}  // namespace ript

#endif  // RIPT_CIRCUIT_HPP
