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

#include "ript/config.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ript {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Prefix {
  std::string_view symbol;
  double scale;
};

constexpr std::array<Prefix, 10> kPrefixes{{{"", 1.0},
                                            {"p", 1e-12},
                                            {"n", 1e-9},
                                            {"u", 1e-6},
                                            {"\xC2\xB5", 1e-6},  // micro sign
                                            {"m", 1e-3},
                                            {"c", 1e-2},
                                            {"k", 1e3},
                                            {"M", 1e6},
                                            {"G", 1e9}}};

std::vector<std::string_view> unit_spellings(std::string_view unit) {
  if (unit == "Ohm") return {"Ohm", "ohm", "\xCE\xA9"};  // Omega
  return {unit};
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  return v;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("expected true or false, got '" + std::string(text) + "'");
}

std::vector<double> parse_list(std::string_view text, std::string_view unit) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_quantity(text.substr(0, comma), unit));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string emit_list(const std::vector<double>& xs, std::string_view unit) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_exact(xs[i]) + std::string(unit);
  }
  return out;
}

std::string emit(double v, std::string_view unit) { return format_exact(v) + std::string(unit); }

// One recognised key: how to read it into the config and how to write it
// back (nullopt = omit).
struct KeyDef {
  std::string_view name;
  std::function<void(ScenarioConfig&, std::string_view)> read;
  std::function<std::optional<std::string>(const ScenarioConfig&)> write;
};

struct SectionDef {
  std::string_view name;
  std::vector<KeyDef> keys;
};

KeyDef quantity_key(std::string_view name, std::string_view unit,
                    double& (*field)(ScenarioConfig&),
                    const double& (*cfield)(const ScenarioConfig&)) {
  return {name,
          [=](ScenarioConfig& c, std::string_view v) { field(c) = parse_quantity(v, unit); },
          [=](const ScenarioConfig& c) -> std::optional<std::string> {
            return emit(cfield(c), unit);
          }};
}

#define RIPT_QTY(NAME, UNIT, EXPR)                                          \
  quantity_key(NAME, UNIT, [](ScenarioConfig& c) -> double& { return EXPR; }, \
               [](const ScenarioConfig& c) -> const double& { return EXPR; })

KeyDef optional_key(std::string_view name, std::string_view unit, std::string_view unset_word,
                    std::optional<double>& (*field)(ScenarioConfig&),
                    const std::optional<double>& (*cfield)(const ScenarioConfig&),
                    bool emit_unset) {
  return {name,
          [=](ScenarioConfig& c, std::string_view v) {
            if (trim(v) == unset_word)
              field(c).reset();
            else
              field(c) = parse_quantity(v, unit);
          },
          [=](const ScenarioConfig& c) -> std::optional<std::string> {
            const auto& f = cfield(c);
            if (f) return emit(*f, unit);
            if (emit_unset) return std::string(unset_word);
            return std::nullopt;
          }};
}

#define RIPT_OPT(NAME, UNIT, WORD, EXPR, EMIT_UNSET)                                       \
  optional_key(                                                                            \
      NAME, UNIT, WORD, [](ScenarioConfig& c) -> std::optional<double>& { return EXPR; }, \
      [](const ScenarioConfig& c) -> const std::optional<double>& { return EXPR; }, EMIT_UNSET)

KeyDef int_key(std::string_view name, int& (*field)(ScenarioConfig&),
               const int& (*cfield)(const ScenarioConfig&)) {
  return {name, [=](ScenarioConfig& c, std::string_view v) { field(c) = parse_int(v); },
          [=](const ScenarioConfig& c) -> std::optional<std::string> {
            return std::to_string(cfield(c));
          }};
}

#define RIPT_INT(NAME, EXPR)                                          \
  int_key(NAME, [](ScenarioConfig& c) -> int& { return EXPR; }, \
          [](const ScenarioConfig& c) -> const int& { return EXPR; })

std::string_view shape_word(const CoilShape& s) {
  if (s.kind == ShapeKind::Circle) return "circle";
  return s.polygon_sides == 8 ? "octagon" : "polygon";
}

std::vector<KeyDef> coil_keys(CoilSection& (*sec)(ScenarioConfig&),
                              const CoilSection& (*csec)(const ScenarioConfig&)) {
  std::vector<KeyDef> keys;
  keys.push_back({"shape",
                  [=](ScenarioConfig& c, std::string_view v) {
                    auto& s = sec(c).shape;
                    v = trim(v);
                    if (v == "circle") {
                      s.kind = ShapeKind::Circle;
                    } else if (v == "octagon") {
                      s.kind = ShapeKind::RegularPolygon;
                      if (s.polygon_sides == 0) s.polygon_sides = 8;
                    } else if (v == "polygon") {
                      s.kind = ShapeKind::RegularPolygon;
                    } else {
                      throw std::invalid_argument("expected circle, octagon or polygon");
                    }
                  },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    return std::string(shape_word(csec(c).shape));
                  }});
  keys.push_back({"sides",
                  [=](ScenarioConfig& c, std::string_view v) {
                    sec(c).shape.polygon_sides = parse_int(v);
                  },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    const auto& s = csec(c).shape;
                    if (s.kind == ShapeKind::Circle) return std::nullopt;
                    return std::to_string(s.polygon_sides);
                  }});
  keys.push_back({"diameter",
                  [=](ScenarioConfig& c, std::string_view v) {
                    sec(c).shape.aperture_diameter = parse_quantity(v, "m");
                  },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    return emit(csec(c).shape.aperture_diameter, "m");
                  }});
  keys.push_back({"turns",
                  [=](ScenarioConfig& c, std::string_view v) { sec(c).shape.turns = parse_int(v); },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    return std::to_string(csec(c).shape.turns);
                  }});
  keys.push_back({"pitch",
                  [=](ScenarioConfig& c, std::string_view v) {
                    sec(c).shape.pitch = parse_quantity(v, "m");
                  },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    return emit(csec(c).shape.pitch, "m");
                  }});
  keys.push_back({"segments_per_turn",
                  [=](ScenarioConfig& c, std::string_view v) {
                    sec(c).segments_per_turn = parse_int(v);
                  },
                  [=](const ScenarioConfig& c) -> std::optional<std::string> {
                    return std::to_string(csec(c).segments_per_turn);
                  }});
  return keys;
}

std::string_view mode_word(ResistanceMode m) {
  switch (m) {
    case ResistanceMode::DcOnly: return "dc";
    case ResistanceMode::SkinEffect: return "skin";
    case ResistanceMode::FixedOverride: return "fixed";
  }
  return "fixed";
}

constexpr std::array<std::pair<StudyKind, std::string_view>, 7> kStudyNames{{
    {StudyKind::Solve, "solve"},
    {StudyKind::FreqSweep, "freq_sweep"},
    {StudyKind::DistanceSweep, "distance_sweep"},
    {StudyKind::OffsetSweep, "offset_sweep"},
    {StudyKind::OptimizeTurns, "optimize_turns"},
    {StudyKind::ShapeCompare, "shape_compare"},
    {StudyKind::Charge, "charge"},
}};

const std::vector<SectionDef>& schema() {
  static const std::vector<SectionDef> sections = [] {
    std::vector<SectionDef> s;
    s.push_back({"coil_tx", coil_keys([](ScenarioConfig& c) -> CoilSection& { return c.coil_tx; },
                                      [](const ScenarioConfig& c) -> const CoilSection& {
                                        return c.coil_tx;
                                      })});
    s.push_back({"coil_rx", coil_keys([](ScenarioConfig& c) -> CoilSection& { return c.coil_rx; },
                                      [](const ScenarioConfig& c) -> const CoilSection& {
                                        return c.coil_rx;
                                      })});
    s.push_back({"wire",
                 {RIPT_QTY("radius", "m", c.wire.cross_section_radius),
                  RIPT_QTY("resistivity", "", c.wire.resistivity),
                  RIPT_INT("strands", c.wire.litz_strand_count)}});
    s.push_back(
        {"circuit",
         {RIPT_OPT("C_primary", "F", "auto", c.circuit.C_primary, true),
          RIPT_OPT("C_secondary", "F", "auto", c.circuit.C_secondary, true),
          {"resistance_model",
           [](ScenarioConfig& c, std::string_view v) {
             v = trim(v);
             if (v == "fixed")
               c.circuit.resistance_mode = ResistanceMode::FixedOverride;
             else if (v == "dc")
               c.circuit.resistance_mode = ResistanceMode::DcOnly;
             else if (v == "skin")
               c.circuit.resistance_mode = ResistanceMode::SkinEffect;
             else
               throw std::invalid_argument("expected fixed, dc or skin");
           },
           [](const ScenarioConfig& c) -> std::optional<std::string> {
             return std::string(mode_word(c.circuit.resistance_mode));
           }},
          RIPT_QTY("R_primary", "Ohm", c.circuit.R_primary),
          RIPT_QTY("R_secondary", "Ohm", c.circuit.R_secondary),
          RIPT_QTY("extra_esr", "Ohm", c.circuit.extra_esr),
          RIPT_QTY("R_load", "Ohm", c.circuit.R_load),
          RIPT_OPT("R_load_dc", "Ohm", "none", c.circuit.R_load_dc, false),
          RIPT_QTY("capacitor_rating", "V", c.circuit.capacitor_rating),
          RIPT_QTY("temperature_coefficient", "", c.circuit.temperature_coefficient),
          RIPT_QTY("temperature_rise", "K", c.circuit.temperature_rise),
          RIPT_OPT("L_primary", "H", "none", c.circuit.L_primary, false),
          RIPT_OPT("L_secondary", "H", "none", c.circuit.L_secondary, false),
          RIPT_OPT("M", "H", "none", c.circuit.mutual, false)}});
    s.push_back({"drive",
                 {RIPT_QTY("voltage", "V", c.drive.voltage),
                  RIPT_QTY("frequency", "Hz", c.drive.frequency),
                  {"source",
                   [](ScenarioConfig& c, std::string_view v) {
                     v = trim(v);
                     if (v == "full_bridge")
                       c.drive.source = SourceKind::FullBridgeFundamental;
                     else if (v == "sinusoid")
                       c.drive.source = SourceKind::Sinusoid;
                     else
                       throw std::invalid_argument("expected full_bridge or sinusoid");
                   },
                   [](const ScenarioConfig& c) -> std::optional<std::string> {
                     return c.drive.source == SourceKind::Sinusoid ? "sinusoid" : "full_bridge";
                   }}}});
    s.push_back(
        {"study",
         {{"kind",
           [](ScenarioConfig& c, std::string_view v) {
             v = trim(v);
             for (const auto& [kind, name] : kStudyNames) {
               if (name == v) {
                 c.study.kind = kind;
                 return;
               }
             }
             throw std::invalid_argument("unknown study kind '" + std::string(v) + "'");
           },
           [](const ScenarioConfig& c) -> std::optional<std::string> {
             return std::string(study_name(c.study.kind));
           }},
          RIPT_QTY("distance", "m", c.study.distance),
          RIPT_QTY("f_start", "Hz", c.study.f_start),
          RIPT_QTY("f_stop", "Hz", c.study.f_stop),
          RIPT_INT("points", c.study.points),
          {"distances",
           [](ScenarioConfig& c, std::string_view v) { c.study.distances = parse_list(v, "m"); },
           [](const ScenarioConfig& c) -> std::optional<std::string> {
             return emit_list(c.study.distances, "m");
           }},
          {"offsets",
           [](ScenarioConfig& c, std::string_view v) { c.study.offsets = parse_list(v, "m"); },
           [](const ScenarioConfig& c) -> std::optional<std::string> {
             return emit_list(c.study.offsets, "m");
           }},
          RIPT_INT("turns_min", c.study.turns_min),
          RIPT_INT("turns_max", c.study.turns_max),
          RIPT_INT("polygon_sides", c.study.polygon_sides),
          RIPT_QTY("battery_voltage", "V", c.study.battery.nominal_voltage),
          RIPT_QTY("battery_capacity", "Ah", c.study.battery.capacity),
          RIPT_INT("battery_series", c.study.battery.series_count),
          RIPT_QTY("initial_soc", "", c.study.battery.initial_soc),
          RIPT_QTY("charge_efficiency", "", c.study.battery.charge_efficiency),
          RIPT_OPT("delivered_power", "W", "none", c.study.delivered_power, false),
          RIPT_QTY("observed_charge_time", "s", c.study.observed_charge_time),
          RIPT_INT("quadrature_points", c.study.quadrature_points),
          {"internal_inductance",
           [](ScenarioConfig& c, std::string_view v) {
             c.study.internal_inductance = parse_bool(v);
           },
           [](const ScenarioConfig& c) -> std::optional<std::string> {
             return c.study.internal_inductance ? "true" : "false";
           }}}});
    return s;
  }();
  return sections;
}

#undef RIPT_QTY
#undef RIPT_OPT
#undef RIPT_INT

ConfigError section_error(const std::string& section, const std::string& message) {
  return ConfigError(0, section, "", message);
}

}  // namespace

ConfigError::ConfigError(int line, std::string section, std::string key,
                         const std::string& message)
    : std::runtime_error([&] {
        std::string where;
        if (line > 0) where += "line " + std::to_string(line) + ": ";
        if (!section.empty()) where += "[" + section + "] ";
        if (!key.empty()) where += key + ": ";
        return where + message;
      }()),
      line_(line),
      section_(std::move(section)),
      key_(std::move(key)) {}

std::string_view study_name(StudyKind kind) {
  for (const auto& [k, name] : kStudyNames)
    if (k == kind) return name;
  return "solve";
}

double parse_quantity(std::string_view text, std::string_view unit) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data())
    throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
  const std::string_view suffix = trim(std::string_view(ptr, text.data() + text.size() - ptr));
  if (suffix.empty()) return value;
  if (!unit.empty()) {
    for (std::string_view spelling : unit_spellings(unit)) {
      if (!suffix.ends_with(spelling)) continue;
      const std::string_view prefix = suffix.substr(0, suffix.size() - spelling.size());
      for (const auto& p : kPrefixes)
        if (p.symbol == prefix) return value * p.scale;
    }
  }
  throw std::invalid_argument("unit suffix '" + std::string(suffix) + "' does not match " +
                              (unit.empty() ? std::string("a dimensionless value")
                                            : "unit " + std::string(unit)));
}

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig config;
  const SectionDef* current = nullptr;
  std::set<std::string> seen;
  std::set<std::string> sections_seen;
  bool have_kind = false;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "", "malformed section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      current = nullptr;
      for (const auto& sec : schema())
        if (sec.name == name) current = &sec;
      if (!current) throw ConfigError(line_no, name, "", "unknown section");
      if (!sections_seen.insert(name).second)
        throw ConfigError(line_no, name, "", "duplicate section");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, current ? std::string(current->name) : "", "",
                        "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!current) throw ConfigError(line_no, "", key, "key outside of any section");
    const std::string section(current->name);

    const KeyDef* def = nullptr;
    for (const auto& k : current->keys)
      if (k.name == key) def = &k;
    if (!def) throw ConfigError(line_no, section, key, "unknown key");
    if (!seen.insert(section + "." + key).second)
      throw ConfigError(line_no, section, key, "duplicate key");
    if (value.empty()) throw ConfigError(line_no, section, key, "missing value");
    try {
      def->read(config, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line_no, section, key, e.what());
    }
    if (section == "study" && key == "kind") have_kind = true;
  }
  if (!have_kind) throw ConfigError(0, "study", "kind", "missing study kind");
  config.validate();
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "", "", "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioConfig& config) {
  std::string out;
  for (const auto& sec : schema()) {
    if (!out.empty()) out += '\n';
    out += "[" + std::string(sec.name) + "]\n";
    for (const auto& key : sec.keys) {
      if (auto v = key.write(config)) out += std::string(key.name) + " = " + *v + '\n';
    }
  }
  return out;
}

void ScenarioConfig::validate() const {
  const auto check = [](const std::string& section, auto&& fn) {
    try {
      fn();
    } catch (const std::invalid_argument& e) {
      throw section_error(section, e.what());
    }
  };
  for (const auto& [name, coil] : {std::pair{"coil_tx", &coil_tx}, std::pair{"coil_rx", &coil_rx}}) {
    check(name, [&] {
      if (coil->shape.kind == ShapeKind::Circle && coil->shape.polygon_sides != 0)
        throw std::invalid_argument("sides given for a circular coil");
      coil->shape.validate();
      if (coil->segments_per_turn < 0)
        throw std::invalid_argument("segments_per_turn must be >= 0");
    });
  }
  check("wire", [&] { wire.validate(); });
  check("circuit", [&] {
    const auto positive = [](const std::optional<double>& v, const char* what) {
      if (v && !(*v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
    };
    positive(circuit.C_primary, "C_primary");
    positive(circuit.C_secondary, "C_secondary");
    positive(circuit.R_load_dc, "R_load_dc");
    positive(circuit.L_primary, "L_primary");
    positive(circuit.L_secondary, "L_secondary");
    if (!(circuit.R_primary >= 0.0) || !(circuit.R_secondary >= 0.0) ||
        !(circuit.extra_esr >= 0.0))
      throw std::invalid_argument("resistances must be >= 0");
    if (!(circuit.R_load >= 0.0)) throw std::invalid_argument("R_load must be >= 0");
    if (!(circuit.capacitor_rating >= 0.0))
      throw std::invalid_argument("capacitor_rating must be >= 0");
    if (circuit.mutual && !(circuit.L_primary && circuit.L_secondary))
      throw std::invalid_argument("M override needs L_primary and L_secondary");
  });
  check("drive", [&] {
    drive.validate();
    if (!(drive.voltage > 0.0)) throw std::invalid_argument("voltage must be > 0");
  });
  check("study", [&] {
    if (!(study.distance > 0.0)) throw std::invalid_argument("distance must be > 0");
    if (!(study.f_start > 0.0) || !(study.f_stop >= study.f_start))
      throw std::invalid_argument("need 0 < f_start <= f_stop");
    if (study.points < 1) throw std::invalid_argument("points must be >= 1");
    for (double d : study.distances)
      if (!(d > 0.0)) throw std::invalid_argument("distances must be > 0");
    for (double y : study.offsets)
      if (!(y >= 0.0)) throw std::invalid_argument("offsets must be >= 0");
    require_strictly_monotone(study.distances, "distances");
    require_strictly_monotone(study.offsets, "offsets");
    if (study.turns_min < 1 || study.turns_max < study.turns_min)
      throw std::invalid_argument("need 1 <= turns_min <= turns_max");
    if (study.polygon_sides < 3) throw std::invalid_argument("polygon_sides must be >= 3");
    study.battery.validate();
    if (study.delivered_power && !(*study.delivered_power > 0.0))
      throw std::invalid_argument("delivered_power must be > 0");
    if (study.quadrature_points < 1)
      throw std::invalid_argument("quadrature_points must be >= 1");
  });
}

CoilPairSpec ScenarioConfig::coil_pair_spec(int threads) const {
  CoilPairSpec spec;
  spec.tx = coil_tx.shape;
  spec.rx = coil_rx.shape;
  spec.wire = wire;
  if (coil_tx.segments_per_turn != coil_rx.segments_per_turn)
    throw section_error("coil_rx", "segments_per_turn must match coil_tx");
  spec.segments_per_turn = coil_tx.segments_per_turn;
  spec.integration.quadrature_points_per_segment = study.quadrature_points;
  spec.integration.internal_inductance = study.internal_inductance;
  spec.integration.threads = threads;
  spec.L_primary_override = circuit.L_primary;
  spec.L_secondary_override = circuit.L_secondary;
  return spec;
}

CircuitTemplate ScenarioConfig::circuit_template() const {
  CircuitTemplate t;
  const auto model = [&](double fixed_value) {
    ResistanceModel m;
    m.mode = circuit.resistance_mode;
    m.override_ohms = fixed_value;
    m.temperature_coefficient = circuit.temperature_coefficient;
    m.temperature_rise = circuit.temperature_rise;
    return m;
  };
  t.resistance_primary = model(circuit.R_primary);
  t.resistance_secondary = model(circuit.R_secondary);
  t.extra_esr = circuit.extra_esr;
  t.R_load = circuit.R_load_dc ? rectifier_equivalent_load(*circuit.R_load_dc) : circuit.R_load;
  t.capacitor_voltage_rating = circuit.capacitor_rating;
  t.C_primary = circuit.C_primary;
  t.C_secondary = circuit.C_secondary;
  return t;
}

std::string_view reference_scenario_text() {
  return R"(# Octagonal 5-turn link, 1 m aperture, 1 m apart, 615 kHz.
[coil_tx]
shape = octagon
diameter = 1m
turns = 5
pitch = 1cm

[coil_rx]
shape = octagon
diameter = 1m
turns = 5
pitch = 1cm

[wire]
radius = 0.75mm
resistivity = 1.68e-8
strands = 1

[circuit]
C_primary = 1nF
C_secondary = 1nF
resistance_model = fixed
R_primary = 0.55Ohm
R_secondary = 0.55Ohm
R_load = 10Ohm
capacitor_rating = 2500V
L_primary = 63.15uH
L_secondary = 65.73uH
M = 1.4525uH

[drive]
voltage = 43V
frequency = 615kHz
source = full_bridge

[study]
kind = solve
distance = 1m
)";
}

}  // namespace ript
