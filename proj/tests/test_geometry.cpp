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
#include "ript/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace ript;

namespace {

// Length of a helix drawn as `per_turn` chords per turn of a circle of
// diameter d, rising `pitch` per turn.
double chorded_helix_length(double d, int turns, double pitch, int per_turn) {
  const double chord = d * std::sin(std::numbers::pi / per_turn);
  const double rise = pitch / per_turn;
  return turns * per_turn * std::hypot(chord, rise);
}

}  // namespace

TEST_CASE("circular coil wire length follows the chorded helix") {
  const auto coil = build_coil(CoilShape::circle(1.0, 5, 0.01), WireSpec{});
  CHECK(coil.size() == 5 * kDefaultCircleSegmentsPerTurn);
  const double expected = chorded_helix_length(1.0, 5, 0.01, kDefaultCircleSegmentsPerTurn);
  CHECK(total_wire_length(coil) == doctest::Approx(expected).epsilon(1e-12));
  // close to the ideal 5 * pi * D, within the 3% band
  CHECK(std::abs(total_wire_length(coil) / (5.0 * std::numbers::pi) - 1.0) < 0.03);
}

TEST_CASE("octagon coil length matches the inscribed perimeter") {
  const auto coil = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const double flat = 5.0 * oracle::inscribed_polygon_perimeter(8, 1.0);
  // the helical rise adds a little over the flat perimeter
  CHECK(total_wire_length(coil) > flat);
  CHECK(total_wire_length(coil) == doctest::Approx(flat).epsilon(2e-4));
  CHECK(coil.size() % 8 == 0);
}

TEST_CASE("path is continuous and starts on the +x axis") {
  for (const auto& shape : {CoilShape::circle(0.6, 3, 0.02), CoilShape::polygon(6, 0.6, 3, 0.02)}) {
    const auto coil = build_coil(shape, WireSpec{});
    CHECK(max_path_gap(coil) < 1e-12);
    const auto& first = coil.segments().front().start;
    CHECK(first.x() == doctest::Approx(0.3));
    CHECK(std::abs(first.y()) < 1e-15);
    CHECK(std::abs(first.z()) < 1e-15);
    const auto& last = coil.segments().back().end;
    CHECK(last.z() == doctest::Approx(shape.axial_length()));
    CHECK(last.x() == doctest::Approx(0.3));
  }
}

TEST_CASE("invalid shapes and discretizations are rejected") {
  CHECK_THROWS_AS(build_coil(CoilShape::circle(-1.0, 5, 0.01), WireSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(build_coil(CoilShape::circle(1.0, 0, 0.01), WireSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(build_coil(CoilShape::polygon(2, 1.0, 5, 0.01), WireSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(build_coil(CoilShape::circle(1.0, 1, 0.0), WireSpec{}, 8), std::invalid_argument);
  CHECK_THROWS_AS(build_coil(CoilShape::octagon(1.0, 1, 0.0), WireSpec{}, 12), std::invalid_argument);
  WireSpec bad;
  bad.cross_section_radius = 0.0;
  CHECK_THROWS_AS(build_coil(CoilShape::circle(1.0, 1, 0.0), bad), std::invalid_argument);
  bad = WireSpec{};
  bad.litz_strand_count = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("discontinuous or degenerate segment lists are rejected") {
  const Segment a{Vec3(0, 0, 0), Vec3(1, 0, 0)};
  const Segment gap{Vec3(1.1, 0, 0), Vec3(2, 0, 0)};
  const Segment zero{Vec3(1, 0, 0), Vec3(1, 0, 0)};
  CHECK_THROWS_AS(CoilGeometry({a, gap}, WireSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(CoilGeometry({a, zero}, WireSpec{}), std::invalid_argument);
  CHECK_NOTHROW(CoilGeometry({a, Segment{Vec3(1, 0, 0), Vec3(1, 1, 0)}}, WireSpec{}));
}

TEST_CASE("rigid transforms preserve length and compose") {
  const auto coil = build_coil(CoilShape::octagon(1.0, 2, 0.01), WireSpec{});
  const auto moved = transform_coil(coil, Vec3(0, 0, 1.0));
  CHECK(moved.segments().front().start.z() == doctest::Approx(1.0));
  CHECK(total_wire_length(moved) == doctest::Approx(total_wire_length(coil)).epsilon(1e-13));

  const auto rotated = transform_coil(coil, Vec3(0.3, -0.2, 0.5),
                                      Eigen::AngleAxisd(0.7, Vec3(1, 1, 0).normalized()));
  CHECK(total_wire_length(rotated) == doctest::Approx(total_wire_length(coil)).epsilon(1e-13));
  CHECK(max_path_gap(rotated) < 1e-12);
  CHECK_FALSE(rotated.frame_pose().is_identity());

  // two steps equal the combined translation
  const auto twice = transform_coil(transform_coil(coil, Vec3(0, 0, 0.4)), Vec3(0, 0.1, 0.6));
  CHECK(twice.frame_pose().translation.isApprox(Vec3(0, 0.1, 1.0)));
  for (std::size_t i = 0; i < coil.size(); ++i)
    CHECK((twice.segments()[i].start - coil.segments()[i].start - Vec3(0, 0.1, 1.0)).norm() < 1e-14);
}

TEST_CASE("identity transform returns an equal coil") {
  const auto coil = build_coil(CoilShape::circle(1.0, 1, 0.0), WireSpec{});
  const auto same = transform_coil(coil, Vec3::Zero());
  REQUIRE(same.size() == coil.size());
  for (std::size_t i = 0; i < coil.size(); ++i) {
    CHECK(same.segments()[i].start == coil.segments()[i].start);
    CHECK(same.segments()[i].end == coil.segments()[i].end);
  }
  CHECK(same.frame_pose().is_identity());
}

TEST_CASE("segment distance uses closest points") {
  const Segment a{Vec3(0, 0, 0), Vec3(1, 0, 0)};
  CHECK(segment_distance(a, Segment{Vec3(0.5, 1, 0), Vec3(0.5, 2, 0)}) == doctest::Approx(1.0));
  CHECK(segment_distance(a, Segment{Vec3(2, 0, 0), Vec3(3, 0, 0)}) == doctest::Approx(1.0));
  CHECK(segment_distance(a, Segment{Vec3(0.5, -1, 0.5), Vec3(0.5, 1, 0.5)}) == doctest::Approx(0.5));
  CHECK(segment_distance(a, Segment{Vec3(0, 0.2, 0), Vec3(1, 0.2, 0)}) == doctest::Approx(0.2));
}

TEST_CASE("segment count scales with the requested discretization") {
  const auto coarse = build_coil(CoilShape::circle(1.0, 2, 0.01), WireSpec{}, 32);
  const auto fine = build_coil(CoilShape::circle(1.0, 2, 0.01), WireSpec{}, 128);
  CHECK(coarse.size() == 64);
  CHECK(fine.size() == 256);
  // finer chords approach the true helix from below
  CHECK(total_wire_length(fine) > total_wire_length(coarse));
  const double helix = 2.0 * std::hypot(std::numbers::pi, 0.01);
  CHECK(total_wire_length(fine) < helix);
  CHECK(default_segments_per_turn(CoilShape::octagon(1, 1, 0)) == 8 * kDefaultPolygonEdgeSubdivisions);
}

TEST_CASE("planar ring and trivial lengths") {
  const auto ring = build_coil(CoilShape::circle(1.0, 1, 0.0), WireSpec{});
  for (const auto& s : ring.segments()) {
    CHECK(s.start.z() == 0.0);
    CHECK(s.end.z() == 0.0);
  }
  const CoilGeometry unit({Segment{Vec3(0, 0, 0), Vec3(1, 0, 0)}}, WireSpec{});
  CHECK(total_wire_length(unit) == 1.0);
  CHECK(total_wire_length(CoilGeometry{}) == 0.0);
}

TEST_CASE("inverse translations restore the geometry") {
  const auto coil = build_coil(CoilShape::octagon(1.0, 5, 0.01), WireSpec{});
  const auto back = transform_coil(transform_coil(coil, Vec3(0, 0.5, 0)), Vec3(0, -0.5, 0));
  for (std::size_t i = 0; i < coil.size(); ++i) {
    CHECK((back.segments()[i].start - coil.segments()[i].start).norm() < 1e-12);
    CHECK((back.segments()[i].end - coil.segments()[i].end).norm() < 1e-12);
  }
}
