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
#include "ript/magnetics.hpp"

#include <cmath>
#include <numbers>

using namespace ript;

namespace {

CoilGeometry loop(double radius, int segments = 0) {
  return build_coil(CoilShape::circle(2.0 * radius, 1, 0.0), WireSpec{}, segments);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("coaxial loops match the elliptic-integral formula") {
  const auto a = loop(0.5);
  for (double d : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    CAPTURE(d);
    const double m = mutual_inductance(a, transform_coil(a, Vec3(0, 0, d)));
    CHECK(rel(m, oracle::coaxial_loops_mutual(0.5, 0.5, d)) < 5e-3);
  }
}

TEST_CASE("unequal coaxial loops") {
  const auto a = loop(0.5);
  const auto b = transform_coil(loop(0.2), Vec3(0, 0, 0.3));
  CHECK(rel(mutual_inductance(a, b), oracle::coaxial_loops_mutual(0.5, 0.2, 0.3)) < 5e-3);
}

TEST_CASE("single loop self-inductance") {
  const double expected = oracle::loop_self_inductance(0.5, 0.75e-3);
  CHECK(rel(self_inductance(loop(0.5)), expected) < 0.02);

  IntegrationSettings with_internal;
  with_internal.internal_inductance = true;
  const double uniform = oracle::loop_self_inductance_uniform(0.5, 0.75e-3);
  CHECK(rel(self_inductance(loop(0.5), with_internal), uniform) < 0.02);
}

TEST_CASE("self-inductance converges under refinement") {
  const CoilShape shape = CoilShape::circle(1.0, 5, 0.01);
  const double base = self_inductance(build_coil(shape, WireSpec{}));
  const double fine = self_inductance(build_coil(shape, WireSpec{}, 2 * kDefaultCircleSegmentsPerTurn));
  CHECK(rel(base, fine) < 5e-3);

  const CoilShape oct = CoilShape::octagon(1.0, 5, 0.01);
  const double o1 = self_inductance(build_coil(oct, WireSpec{}));
  const double o2 = self_inductance(build_coil(oct, WireSpec{}, 64));
  CHECK(rel(o1, o2) < 5e-3);
}

TEST_CASE("partial self-inductance closed form") {
  const double l = 0.2, r = 1e-3;
  const double expected = 2e-7 * (l * std::log((l + std::hypot(l, r)) / r) - std::hypot(l, r) + r);
  CHECK(partial_self_inductance(l, r, false) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(partial_self_inductance(l, r, true) - partial_self_inductance(l, r, false) ==
        doctest::Approx(1e-7 * l / 2.0).epsilon(1e-12));
}

TEST_CASE("parallel filament pair against brute-force double sum") {
  const Segment a{Vec3(0, 0, 0), Vec3(0.3, 0, 0)};
  const Segment b{Vec3(0, 0.01, 0), Vec3(0.3, 0.01, 0)};
  const double brute = oracle::parallel_filaments_brute(0.3, 0.01, 4000);
  CHECK(rel(segment_pair_inductance(a, b, 0.0, 8), brute) < 1e-4);
  // antiparallel flips the sign
  const Segment b_rev{b.end, b.start};
  CHECK(segment_pair_inductance(a, b_rev, 0.0, 8) == doctest::Approx(-segment_pair_inductance(a, b, 0.0, 8)));
  // perpendicular segments do not couple
  const Segment c{Vec3(0.1, 0.1, 0), Vec3(0.1, 0.4, 0)};
  CHECK(std::abs(segment_pair_inductance(a, c, 0.0, 8)) < 1e-20);
}

TEST_CASE("mutual inductance is reciprocal") {
  const auto tx = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const auto rx = transform_coil(build_coil(CoilShape::circle(0.8, 3, 0.01), WireSpec{}),
                                 Vec3(0.2, 0.1, 0.4), Eigen::AngleAxisd(0.3, Vec3::UnitX()));
  const double ab = mutual_inductance(tx, rx);
  const double ba = mutual_inductance(rx, tx);
  CHECK(std::abs(ab - ba) <= 1e-10 * std::abs(ab));
}

TEST_CASE("mutual inductance scales linearly with geometry") {
  const auto a = build_coil(CoilShape::circle(1.0, 2, 0.01), WireSpec{});
  const auto b = transform_coil(a, Vec3(0.1, 0, 0.5));
  WireSpec w2;
  w2.cross_section_radius *= 2.0;
  const auto a2 = build_coil(CoilShape::circle(2.0, 2, 0.02), w2);
  const auto b2 = transform_coil(a2, Vec3(0.2, 0, 1.0));
  CHECK(rel(mutual_inductance(a2, b2), 2.0 * mutual_inductance(a, b)) < 1e-9);
  CHECK(rel(self_inductance(a2), 2.0 * self_inductance(a)) < 1e-9);
}

TEST_CASE("translating both coils leaves M unchanged") {
  const auto a = build_coil(CoilShape::octagon(1.0, 2, 0.01), WireSpec{});
  const auto b = transform_coil(a, Vec3(0, 0.2, 0.7));
  const Vec3 shift(3.0, -1.0, 2.5);
  const double m0 = mutual_inductance(a, b);
  const double m1 = mutual_inductance(transform_coil(a, shift), transform_coil(b, shift));
  CHECK(rel(m1, m0) < 1e-9);
}

TEST_CASE("coaxial coupling decays with distance and |k| stays below one") {
  const auto tx = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const double lp = self_inductance(tx);
  double prev = std::numeric_limits<double>::infinity();
  for (double d : {0.06, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    CAPTURE(d);
    const auto rx = transform_coil(tx, Vec3(0, 0, d));
    const double m = mutual_inductance(tx, rx);
    CHECK(m > 0.0);
    CHECK(m < prev);
    prev = m;
    const double k = coupling_coefficient(lp, lp, m);
    CHECK(std::abs(k) < 1.0);
  }
}

TEST_CASE("flipping the receiver flips the sign of M") {
  const auto tx = loop(0.5);
  const auto rx = transform_coil(tx, Vec3(0, 0, 0.5), Eigen::AngleAxisd(std::numbers::pi, Vec3::UnitX()));
  CHECK(mutual_inductance(tx, rx) == doctest::Approx(-oracle::coaxial_loops_mutual(0.5, 0.5, 0.5)).epsilon(5e-3));
}

TEST_CASE("overlapping windings raise GeometryOverlapError") {
  const auto tx = loop(0.5);
  CHECK_THROWS_AS(mutual_inductance(tx, tx), GeometryOverlapError);
  CHECK_THROWS_AS(mutual_inductance(tx, transform_coil(tx, Vec3(0, 0, 1e-3))), GeometryOverlapError);
  CHECK_NOTHROW(mutual_inductance(tx, transform_coil(tx, Vec3(0, 0, 2e-3))));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(coupling_coefficient(0.0, 1e-6, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(self_inductance(CoilGeometry{}), std::invalid_argument);
  IntegrationSettings bad;
  bad.quadrature_points_per_segment = 0;
  CHECK_THROWS_AS(self_inductance(loop(0.5), bad), std::invalid_argument);
}

TEST_CASE("result does not depend on the thread count") {
  const auto tx = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const auto rx = transform_coil(tx, Vec3(0, 0.3, 1.0));
  IntegrationSettings one, four;
  four.threads = 4;
  CHECK(self_inductance(tx, one) == self_inductance(tx, four));
  CHECK(mutual_inductance(tx, rx, one) == mutual_inductance(tx, rx, four));
}

TEST_CASE("link extraction fills the coupling coefficient") {
  const auto tx = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const auto link = extract_link(tx, transform_coil(tx, Vec3(0, 0, 1.0)));
  CHECK(link.coupling == doctest::Approx(link.mutual / std::sqrt(link.L_primary * link.L_secondary)));
  const auto table = LinkInductances::from(63.15e-6, 65.73e-6, 1.4525e-6);
  CHECK(std::abs(table.coupling - 0.02254) < 1e-5);
}

TEST_CASE("far loops decouple and coupling limits") {
  const auto a = loop(0.5);
  const double m10 = mutual_inductance(a, transform_coil(a, Vec3(0, 0, 10.0)));
  CHECK(m10 > 0.0);
  CHECK(m10 < 1e-3 * self_inductance(a));
  CHECK(coupling_coefficient(63.15e-6, 65.73e-6, 0.0) == 0.0);
  CHECK(coupling_coefficient(5e-6, 5e-6, 5e-6) == doctest::Approx(1.0));
}
