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

#include "doctest.h"
#include "oracles.hpp"
#include "ript/losses.hpp"

#include <cmath>
#include <numbers>

using namespace ript;

namespace {

// Straight wire of the given length, for resistance checks.
CoilGeometry straight(double length, WireSpec wire = {}) {
  return CoilGeometry({Segment{Vec3(0, 0, 0), Vec3(length, 0, 0)}}, wire);
}

}  // namespace

TEST_CASE("dc resistance of 15.363 m of 0.75 mm copper") {
  const double expected = 1.68e-8 * 15.363 / (std::numbers::pi * 0.75e-3 * 0.75e-3);
  CHECK(dc_resistance(straight(15.363)) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(dc_resistance(straight(15.363)) == doctest::Approx(0.146).epsilon(5e-3));
  CHECK(dc_resistance(straight(30.726)) == doctest::Approx(2.0 * dc_resistance(straight(15.363))));
  CHECK(dc_resistance(CoilGeometry{}) == 0.0);
}

TEST_CASE("litz bundle keeps the copper area") {
  WireSpec litz;
  litz.litz_strand_count = 100;
  CHECK(strand_radius(litz) == doctest::Approx(0.75e-4));
  CHECK(dc_resistance(straight(10.0, litz)) == doctest::Approx(dc_resistance(straight(10.0))));
  // thinner strands suppress skin effect
  CHECK(ac_resistance(straight(10.0, litz), 615e3, ResistanceModel{}) <
        ac_resistance(straight(10.0), 615e3, ResistanceModel{}));
}

TEST_CASE("skin depth of copper at 615 kHz") {
  const double delta = std::sqrt(1.68e-8 / (std::numbers::pi * 615e3 * oracle::kMu0));
  CHECK(skin_depth(1.68e-8, 615e3) == doctest::Approx(delta).epsilon(1e-14));
  CHECK(skin_depth(1.68e-8, 615e3) == doctest::Approx(83e-6).epsilon(0.01));
}

TEST_CASE("ac resistance at 615 kHz") {
  const auto wire = straight(15.363);
  const double r = ac_resistance(wire, 615e3, ResistanceModel{});
  CHECK(r == doctest::Approx(0.69).epsilon(0.02));
  CHECK(r / dc_resistance(wire) == doctest::Approx(4.7).epsilon(0.03));
}

TEST_CASE("skin factor limits and continuity") {
  CHECK(skin_factor(0.0) == 1.0);
  CHECK(skin_factor(0.1) == doctest::Approx(1.0).epsilon(1e-5));
  // low-argument series 1 + x^4/48 of the exact solution
  CHECK(skin_factor(0.5) - 1.0 == doctest::Approx(std::pow(0.5, 4) / 48.0).epsilon(0.01));
  // large argument follows x/2 + 1/4
  CHECK(skin_factor(100.0) == doctest::Approx(50.25).epsilon(1e-4));
  // the series/asymptotic switch at 18 leaves at most a 1e-7 relative step
  CHECK(std::abs(skin_factor(18.0 + 1e-9) / skin_factor(18.0 - 1e-9) - 1.0) < 1e-7);
  CHECK_THROWS_AS(skin_factor(-1.0), std::invalid_argument);
}

TEST_CASE("skin factor is monotone and never below one") {
  double prev = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    const double x = i * 1e-3;
    const double f = skin_factor(x);
    if (f < prev || f < 1.0) {
      CAPTURE(x);
      FAIL("skin factor not monotone");
    }
    prev = f;
  }
}

TEST_CASE("ac resistance is nondecreasing in frequency and reaches dc at low f") {
  const auto wire = straight(15.0);
  const double rdc = dc_resistance(wire);
  CHECK(ac_resistance(wire, 1.0, ResistanceModel{}) == doctest::Approx(rdc).epsilon(1e-3));
  double prev = 0.0;
  for (double f = 10.0; f < 1e8; f *= 1.3) {
    const double r = ac_resistance(wire, f, ResistanceModel{});
    CHECK(r >= rdc);
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("resistance modes") {
  const auto wire = straight(15.0);
  CHECK(ac_resistance(wire, 615e3, ResistanceModel::fixed(0.55)) == 0.55);
  CHECK(ac_resistance(wire, 1.0, ResistanceModel::fixed(0.55)) == 0.55);
  ResistanceModel dc;
  dc.mode = ResistanceMode::DcOnly;
  CHECK(ac_resistance(wire, 615e3, dc) == doctest::Approx(dc_resistance(wire)));
  dc.temperature_coefficient = 0.00393;
  dc.temperature_rise = 40.0;
  CHECK(ac_resistance(wire, 615e3, dc) == doctest::Approx(dc_resistance(wire) * (1.0 + 0.00393 * 40.0)));
  CHECK_THROWS_AS(ResistanceModel::fixed(-1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ac_resistance(wire, 0.0, ResistanceModel{}), std::invalid_argument);
}
