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

#include "ript/runner.hpp"

#include "ript/charging.hpp"
#include "ript/design.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ript {

namespace {

namespace fs = std::filesystem;

std::string line(const std::string& key, double value, const std::string& unit = "") {
  return key + ": " + format_number(value) + (unit.empty() ? "" : " " + unit) + "\n";
}

struct ResolvedLink {
  ResonatorParams circuit;
  LinkInductances link;
};

ResolvedLink resolve_link(const ScenarioConfig& cfg, const CoilPair& pair) {
  ResolvedLink r;
  r.circuit = resolve_circuit(pair, cfg.circuit_template(), cfg.drive);
  r.link = cfg.circuit.mutual
               ? LinkInductances::from(pair.L_primary(), pair.L_secondary(), *cfg.circuit.mutual)
               : pair.link_at(cfg.study.distance);
  return r;
}

std::string circuit_summary(const ScenarioConfig& cfg, const ResonatorParams& p,
                            const LinkInductances& link) {
  std::string s;
  s += line("L_primary", link.L_primary, "H");
  s += line("L_secondary", link.L_secondary, "H");
  s += line("M", link.mutual, "H");
  s += line("k", link.coupling);
  s += line("C_primary", p.C_primary, "F");
  s += line("C_secondary", p.C_secondary, "F");
  s += line("fs_primary", resonance_frequency(link.L_primary, p.C_primary), "Hz");
  s += line("fs_secondary", resonance_frequency(link.L_secondary, p.C_secondary), "Hz");
  s += line("R_primary", p.R_primary, "Ohm");
  s += line("R_secondary", p.R_secondary, "Ohm");
  s += line("R_load", p.R_load, "Ohm");
  s += line("drive_frequency", cfg.drive.frequency, "Hz");
  s += line("source_rms", cfg.drive.source_rms(), "V");
  if (cfg.circuit.resistance_mode == ResistanceMode::FixedOverride)
    s += "note: R_primary/R_secondary are fixed ESR inputs, not derived from the wire\n";
  return s;
}

std::string solution_summary(const CircuitSolution& sol, const ResonatorParams& p) {
  std::string s;
  s += line("I_primary", std::abs(sol.I_primary), "A rms");
  s += line("I_secondary", std::abs(sol.I_secondary), "A rms");
  s += line("V_load", std::abs(sol.V_load), "V rms");
  s += line("P_in", sol.P_in, "W");
  s += line("P_load", sol.P_load, "W");
  s += line("efficiency", sol.efficiency);
  s += line("V_cap_primary", sol.V_cap_primary, "V rms");
  s += line("V_cap_secondary", sol.V_cap_secondary, "V rms");
  if (sol.capacitor_overstress)
    s += "warning: capacitor voltage exceeds rating " + format_number(p.capacitor_voltage_rating) +
         " V\n";
  return s;
}

SweepRow row_from(double x, const LinkInductances& link, const CircuitSolution& sol) {
  SweepRow row;
  row.x = x;
  row.mutual = link.mutual;
  row.coupling = link.coupling;
  row.P_load = sol.P_load;
  row.P_in = sol.P_in;
  row.efficiency = sol.efficiency;
  row.I_primary = std::abs(sol.I_primary);
  row.I_secondary = std::abs(sol.I_secondary);
  row.valid = true;
  if (sol.capacitor_overstress) row.flags = "cap_overstress";
  return row;
}

std::string sweep_csv(const SweepResult& sweep) {
  sweep.validate();
  std::ostringstream out;
  write_csv(out, sweep);
  return out.str();
}

std::string sweep_summary(const SweepResult& sweep) {
  std::string s;
  std::size_t invalid = 0;
  for (const auto& r : sweep.rows) invalid += r.valid ? 0 : 1;
  s += "rows: " + std::to_string(sweep.rows.size()) + "\n";
  s += "invalid_rows: " + std::to_string(invalid) + "\n";
  return s;
}

StudyOutput run_solve(const ScenarioConfig& cfg, const CoilPair& pair) {
  const auto [p, link] = resolve_link(cfg, pair);
  const CircuitSolution sol = solve(p, link, cfg.drive);
  SweepResult table{"frequency", "Hz", {row_from(cfg.drive.frequency, link, sol)}};
  StudyOutput out{"solve.csv", sweep_csv(table), ""};
  out.summary = circuit_summary(cfg, p, link) + solution_summary(sol, p);
  return out;
}

StudyOutput run_freq_sweep(const ScenarioConfig& cfg, const CoilPair& pair) {
  const auto [p, link] = resolve_link(cfg, pair);
  const SweepResult sweep = frequency_sweep(p, link, cfg.drive.source_rms(), cfg.study.f_start,
                                            cfg.study.f_stop, cfg.study.points);
  StudyOutput out{"freq_sweep.csv", sweep_csv(sweep), ""};
  out.summary = circuit_summary(cfg, p, link) + sweep_summary(sweep);
  out.summary += line("peak_efficiency_frequency", peak_efficiency_frequency(sweep), "Hz");
  return out;
}

StudyOutput run_distance_sweep(const ScenarioConfig& cfg, const CoilPair& pair) {
  const ResonatorParams p = resolve_circuit(pair, cfg.circuit_template(), cfg.drive);
  const SweepResult sweep = distance_sweep(pair, p, cfg.drive, cfg.study.distances);
  StudyOutput out{"distance_sweep.csv", sweep_csv(sweep), ""};
  out.summary = line("L_primary", pair.L_primary(), "H") +
                line("L_secondary", pair.L_secondary(), "H") + sweep_summary(sweep);
  return out;
}

StudyOutput run_offset_sweep(const ScenarioConfig& cfg, const CoilPair& pair) {
  const ResonatorParams p = resolve_circuit(pair, cfg.circuit_template(), cfg.drive);
  const SweepResult sweep =
      lateral_offset_sweep(pair, p, cfg.drive, cfg.study.distance, cfg.study.offsets);
  StudyOutput out{"offset_sweep.csv", sweep_csv(sweep), ""};
  out.summary = line("axial_distance", cfg.study.distance, "m") +
                line("L_primary", pair.L_primary(), "H") +
                line("L_secondary", pair.L_secondary(), "H") + sweep_summary(sweep);
  return out;
}

StudyOutput run_optimize_turns(const ScenarioConfig& cfg, int threads) {
  const TurnsStudy study =
      optimize_turns(cfg.coil_pair_spec(threads), cfg.circuit_template(), cfg.drive,
                     cfg.study.distance, cfg.study.turns_min, cfg.study.turns_max);
  std::ostringstream csv;
  csv << "turns,P_load[W],efficiency,coil_resistance[Ohm],wire_length[m],L_primary[H],M[H],"
         "on_front\n";
  std::string front_list;
  for (std::size_t i = 0; i < study.points.size(); ++i) {
    const ParetoPoint& pt = study.points[i];
    bool on_front = false;
    for (auto f : study.front) on_front = on_front || f == i;
    csv << pt.turns << ',' << format_number(pt.P_load) << ',' << format_number(pt.efficiency)
        << ',' << format_number(pt.coil_resistance) << ',' << format_number(pt.wire_length)
        << ',' << format_number(pt.L_primary) << ',' << format_number(pt.mutual) << ','
        << (on_front ? 1 : 0) << '\n';
    if (on_front) front_list += (front_list.empty() ? "" : " ") + std::to_string(pt.turns);
  }
  StudyOutput out{"optimize_turns.csv", csv.str(), ""};
  out.summary = "evaluated_turns: " + std::to_string(cfg.study.turns_min) + ".." +
                std::to_string(cfg.study.turns_max) + "\n";
  out.summary += "pareto_front_turns: " + front_list + "\n";
  return out;
}

StudyOutput run_shape_compare(const ScenarioConfig& cfg, int threads) {
  const ShapeComparison cmp = shape_comparison(cfg.coil_pair_spec(threads), cfg.study.polygon_sides,
                                               cfg.circuit_template(), cfg.drive,
                                               cfg.study.distance);
  std::ostringstream csv;
  csv << "shape,L_primary[H],L_secondary[H],M[H],k,R_primary[Ohm],wire_length[m],efficiency,"
         "P_load[W]\n";
  for (const ShapeReport* r : {&cmp.first, &cmp.second}) {
    csv << r->label << ',' << format_number(r->L_primary) << ',' << format_number(r->L_secondary)
        << ',' << format_number(r->mutual) << ',' << format_number(r->coupling) << ','
        << format_number(r->R_primary) << ',' << format_number(r->wire_length) << ','
        << format_number(r->efficiency) << ',' << format_number(r->P_load) << '\n';
  }
  StudyOutput out{"shape_compare.csv", csv.str(), ""};
  out.summary = line("efficiency_difference", cmp.first.efficiency - cmp.second.efficiency);
  out.summary += line("wire_length_difference", cmp.first.wire_length - cmp.second.wire_length, "m");
  out.summary += "note: the shapes differ in how the same aperture allocates wire length\n";
  return out;
}

StudyOutput run_charge(const ScenarioConfig& cfg, const CoilPair* pair) {
  double power = 0.0;
  std::string source;
  if (cfg.study.delivered_power) {
    power = *cfg.study.delivered_power;
    source = "configured";
  } else {
    const auto [p, link] = resolve_link(cfg, *pair);
    power = solve(p, link, cfg.drive).P_load;
    source = "solved link";
  }
  const ChargeResult result = charge_time(cfg.study.battery, power);
  std::ostringstream csv;
  write_trace_csv(csv, result);
  StudyOutput out{"charge.csv", csv.str(), ""};
  out.summary = line("delivered_power", power, "W") + "delivered_power_source: " + source + "\n";
  out.summary += line("pack_energy", cfg.study.battery.energy_joules(), "J");
  out.summary += line("charge_time", result.seconds, "s");
  out.summary += line("observed_charge_time", cfg.study.observed_charge_time, "s");
  out.summary += line("implied_initial_soc",
                      implied_initial_soc(cfg.study.battery, power, cfg.study.observed_charge_time));
  out.summary += "note: implied_initial_soc is an inference from the observed time, not an input\n";
  return out;
}

bool needs_geometry(const ScenarioConfig& cfg) {
  switch (cfg.study.kind) {
    case StudyKind::OptimizeTurns:
    case StudyKind::ShapeCompare:
      return false;
    case StudyKind::Charge:
      return !cfg.study.delivered_power;
    default:
      return true;
  }
}

ValidationCheck band(std::string name, double value, double expected, double low, double high,
                     std::string unit) {
  return {std::move(name), value, expected, low, high, std::move(unit),
          value >= low && value <= high};
}

ValidationCheck relative(std::string name, double value, double expected, double tol,
                         std::string unit) {
  const double a = expected * (1.0 - tol);
  const double b = expected * (1.0 + tol);
  return band(std::move(name), value, expected, std::min(a, b), std::max(a, b), std::move(unit));
}

}  // namespace

StudyOutput run_study(const ScenarioConfig& config, int threads) {
  config.validate();
  std::optional<CoilPair> pair;
  if (needs_geometry(config)) pair.emplace(config.coil_pair_spec(threads));

  StudyOutput out;
  switch (config.study.kind) {
    case StudyKind::Solve: out = run_solve(config, *pair); break;
    case StudyKind::FreqSweep: out = run_freq_sweep(config, *pair); break;
    case StudyKind::DistanceSweep: out = run_distance_sweep(config, *pair); break;
    case StudyKind::OffsetSweep: out = run_offset_sweep(config, *pair); break;
    case StudyKind::OptimizeTurns: out = run_optimize_turns(config, threads); break;
    case StudyKind::ShapeCompare: out = run_shape_compare(config, threads); break;
    case StudyKind::Charge: out = run_charge(config, pair ? &*pair : nullptr); break;
  }
  out.summary = "study: " + std::string(study_name(config.study.kind)) + "\n" + out.summary;
  return out;
}

void write_outputs_atomically(const fs::path& dir,
                              const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::pair<fs::path, fs::path>> staged;
  try {
    for (const auto& [name, content] : files) {
      const fs::path final_path = dir / name;
      fs::path tmp = final_path;
      tmp += ".tmp";
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
      staged.emplace_back(tmp, final_path);
      out << content;
      out.close();
      if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
    for (const auto& [tmp, final_path] : staged) fs::rename(tmp, final_path);
  } catch (...) {
    std::error_code ec;
    for (const auto& [tmp, final_path] : staged) fs::remove(tmp, ec);
    throw;
  }
}

std::vector<ValidationCheck> run_reference_validation(int threads) {
  constexpr double kLp = 63.15e-6;
  constexpr double kLs = 65.73e-6;
  constexpr double kM = 1.4525e-6;
  constexpr double kC = 1e-9;
  constexpr double kF = 615e3;

  IntegrationSettings integration;
  integration.threads = threads;
  const WireSpec wire{0.75e-3, 1.68e-8, 1};
  const CoilGeometry circle = build_coil(CoilShape::circle(1.0, 5, 0.01), wire);
  const CoilGeometry octagon = build_coil(CoilShape::octagon(1.0, 5, 0.01), wire);
  const double lp = self_inductance(circle, integration);
  const double m_oct =
      mutual_inductance(octagon, transform_coil(octagon, Vec3(0, 0, 1.0)), integration);

  std::vector<ValidationCheck> checks;
  checks.push_back(relative("Lp (5-turn circle, 1 m, 1 cm pitch)", lp, kLp, 0.10, "H"));
  checks.push_back(relative("Ls (identical geometry)", lp, kLs, 0.10, "H"));
  checks.push_back(relative("M (5-turn octagons, 1 m coaxial)", m_oct, kM, 0.15, "H"));
  const double k = coupling_coefficient(kLp, kLs, kM);
  checks.push_back(band("k from reference Lp, Ls, M", k, 0.02254, 0.02254 - 1e-5, 0.02254 + 1e-5, ""));
  checks.push_back(band("fs(Lp, 1 nF)", resonance_frequency(kLp, kC), 633.3e3, 633.2e3, 633.4e3, "Hz"));
  checks.push_back(band("fs(Ls, 1 nF)", resonance_frequency(kLs, kC), 620.8e3, 620.7e3, 620.9e3, "Hz"));

  ResonatorParams p;
  p.R_primary = p.R_secondary = 0.55;
  p.R_load = 10.0;
  p.C_primary = tuning_capacitance(kLp, kF);
  p.C_secondary = tuning_capacitance(kLs, kF);
  const double omega_m = 2.0 * std::numbers::pi * kF * kM;
  const double eta = efficiency_closed_form(p, omega_m);
  checks.push_back(band("efficiency (fitted 0.55 Ohm ESR, 10 Ohm load)", eta, 0.80, 0.78, 0.82, ""));
  const CircuitSolution sol = solve(p, LinkInductances::from(kLp, kLs, kM), 1.0, kF);
  checks.push_back(band("|solve - closed form| / closed form", std::abs(sol.efficiency / eta - 1.0),
                        0.0, 0.0, 1e-9, ""));
  return checks;
}

void print_validation(std::ostream& out, const std::vector<ValidationCheck>& checks) {
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << format_number(c.value)
        << (c.unit.empty() ? "" : " " + c.unit) << " (accept " << format_number(c.low) << " .. "
        << format_number(c.high) << ")\n";
  }
}

int resolve_threads_option(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RIPT_SIM_THREADS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

int run(const std::optional<std::string>& config_path, const RunOptions& options,
        std::ostream& out, std::ostream& err) {
  try {
    if (options.validate) {
      const auto checks = run_reference_validation(options.threads);
      print_validation(out, checks);
      bool all = true;
      for (const auto& c : checks) all = all && c.pass;
      return all ? 0 : 1;
    }
    if (!config_path) {
      err << "error: a config file is required unless --validate is given\n";
      return 2;
    }
    const ScenarioConfig config = load_scenario(*config_path);
    const StudyOutput result = run_study(config, options.threads);
    if (!fs::is_directory(options.output_dir)) {
      err << "error: output directory '" << options.output_dir.string() << "' does not exist\n";
      return 1;
    }
    write_outputs_atomically(options.output_dir,
                             {{result.csv_name, result.csv}, {"summary.txt", result.summary}});
    out << result.summary;
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace ript
