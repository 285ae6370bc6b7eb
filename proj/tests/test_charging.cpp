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
#include "ript/charging.hpp"

#include <sstream>

using namespace ript;

TEST_CASE("two 12 V 0.8 Ah batteries at 109.7 W") {
  const BatteryPack pack;
  CHECK(pack.energy_joules() == doctest::Approx(2 * 12.0 * 0.8 * 3600.0));
  const auto r = charge_time(pack, 109.7);
  // 19.2 Wh / (109.7 W * 0.85)
  CHECK(r.seconds == doctest::Approx(19.2 * 3600.0 / (109.7 * 0.85)).epsilon(1e-14));
  CHECK(r.seconds == doctest::Approx(741.27).epsilon(1e-5));
  CHECK(r.seconds / 60.0 == doctest::Approx(12.4).epsilon(0.01));
}

TEST_CASE("full pack needs no time") {
  BatteryPack pack;
  pack.initial_soc = 1.0;
  const auto r = charge_time(pack, 100.0);
  CHECK(r.seconds == 0.0);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].soc == 1.0);
}

TEST_CASE("charge time is inverse in power") {
  const BatteryPack pack;
  CHECK(charge_time(pack, 50.0).seconds == doctest::Approx(2.0 * charge_time(pack, 100.0).seconds));
}

TEST_CASE("trace is monotone, 1 s spaced and ends full") {
  BatteryPack pack;
  pack.initial_soc = 0.3;
  const auto r = charge_time(pack, 109.7);
  REQUIRE(r.trace.size() > 2);
  CHECK(r.trace.front().soc == doctest::Approx(0.3));
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].soc >= r.trace[i - 1].soc);
    if (i + 1 < r.trace.size()) CHECK(r.trace[i].time - r.trace[i - 1].time == 1.0);
  }
  CHECK(r.trace.back().soc == 1.0);
  CHECK(r.trace.back().time == doctest::Approx(r.seconds));

  std::ostringstream csv;
  write_trace_csv(csv, r);
  CHECK(csv.str().rfind("time[s],soc\n0.00000000e+00,3.00000000e-01\n", 0) == 0);
}

TEST_CASE("five minute observation implies a partly charged pack") {
  const BatteryPack pack;
  const double soc = implied_initial_soc(pack, 100.0, 300.0);
  CHECK(soc == doctest::Approx(1.0 - 100.0 * 0.85 * 300.0 / 69120.0));
  CHECK(soc == doctest::Approx(0.63).epsilon(0.01));
  BatteryPack start = pack;
  start.initial_soc = soc;
  CHECK(charge_time(start, 100.0).seconds == doctest::Approx(300.0));
}

TEST_CASE("invalid charging inputs") {
  CHECK_THROWS_AS(charge_time(BatteryPack{}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(charge_time(BatteryPack{}, -5.0), std::invalid_argument);
  BatteryPack bad;
  bad.initial_soc = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = BatteryPack{};
  bad.capacity = 0.0;
  CHECK_THROWS_AS(charge_time(bad, 100.0), std::invalid_argument);
}
