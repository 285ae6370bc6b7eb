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

#include "ript/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ript {

namespace {

constexpr double kContinuityTolerance = 1e-9;  // m

}  // namespace

void WireSpec::validate() const {
  if (!(cross_section_radius > 0.0))
    throw std::invalid_argument("wire: cross_section_radius must be > 0");
  if (!(resistivity > 0.0))
    throw std::invalid_argument("wire: resistivity must be > 0");
  if (litz_strand_count < 1)
    throw std::invalid_argument("wire: litz_strand_count must be >= 1");
}

CoilShape CoilShape::circle(double diameter, int turns, double pitch) {
  CoilShape s;
  s.kind = ShapeKind::Circle;
  s.aperture_diameter = diameter;
  s.turns = turns;
  s.pitch = pitch;
  return s;
}

CoilShape CoilShape::polygon(int sides, double diameter, int turns,
                             double pitch) {
  CoilShape s = circle(diameter, turns, pitch);
  s.kind = ShapeKind::RegularPolygon;
  s.polygon_sides = sides;
  return s;
}

void CoilShape::validate() const {
  if (!(aperture_diameter > 0.0))
    throw std::invalid_argument("coil: aperture_diameter must be > 0");
  if (turns < 1) throw std::invalid_argument("coil: turns must be >= 1");
  if (!(pitch >= 0.0)) throw std::invalid_argument("coil: pitch must be >= 0");
  if (kind == ShapeKind::RegularPolygon && polygon_sides < 3)
    throw std::invalid_argument("coil: polygon needs at least 3 sides");
}

Pose Pose::compose(const Pose& inner) const {
  Pose out;
  out.rotation = rotation * inner.rotation;
  out.translation = rotation * inner.translation + translation;
  return out;
}

bool Pose::is_identity() const {
  return rotation == Eigen::Matrix3d::Identity() && translation.isZero(0.0);
}

CoilGeometry::CoilGeometry(std::vector<Segment> segments, WireSpec wire,
                           Pose pose)
    : segments_(std::move(segments)), wire_(wire), pose_(pose) {
  wire_.validate();
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].length() > 0.0))
      throw std::invalid_argument("coil: segment " + std::to_string(i) +
                                  " has zero length");
    if (i > 0 && (segments_[i].start - segments_[i - 1].end).norm() >
                     kContinuityTolerance)
      throw std::invalid_argument("coil: path is discontinuous at segment " +
                                  std::to_string(i));
  }
}

double CoilGeometry::max_segment_length() const {
  double m = 0.0;
  for (const auto& s : segments_) m = std::max(m, s.length());
  return m;
}

double CoilGeometry::min_segment_length() const {
  if (segments_.empty()) return 0.0;
  double m = segments_.front().length();
  for (const auto& s : segments_) m = std::min(m, s.length());
  return m;
}

int default_segments_per_turn(const CoilShape& shape) {
  if (shape.kind == ShapeKind::Circle) return kDefaultCircleSegmentsPerTurn;
  return shape.polygon_sides * kDefaultPolygonEdgeSubdivisions;
}

CoilGeometry build_coil(const CoilShape& shape, const WireSpec& wire,
                        int segments_per_turn) {
  shape.validate();
  wire.validate();
  if (segments_per_turn <= 0) segments_per_turn = default_segments_per_turn(shape);

  const double radius = 0.5 * shape.aperture_diameter;
  const double two_pi = 2.0 * std::numbers::pi;
  const int total = segments_per_turn * shape.turns;

  std::vector<Vec3> points;
  points.reserve(static_cast<std::size_t>(total) + 1);

  if (shape.kind == ShapeKind::Circle) {
    if (segments_per_turn < kMinCircleSegmentsPerTurn)
      throw std::invalid_argument("coil: circles need at least " +
                                  std::to_string(kMinCircleSegmentsPerTurn) +
                                  " segments per turn");
    for (int k = 0; k <= total; ++k) {
      const double frac = static_cast<double>(k) / segments_per_turn;
      const double angle = two_pi * frac;
      points.emplace_back(radius * std::cos(angle), radius * std::sin(angle),
                          shape.pitch * frac);
    }
  } else {
    const int sides = shape.polygon_sides;
    if (segments_per_turn < sides || segments_per_turn % sides != 0)
      throw std::invalid_argument(
          "coil: polygon segments_per_turn must be a positive multiple of the "
          "side count");
    const int per_edge = segments_per_turn / sides;
    // Vertices on the circumscribing circle; z advances linearly along the
    // path parameter, so every sub-segment of an edge stays collinear.
    for (int k = 0; k <= total; ++k) {
      const int edge = k / per_edge;
      const int sub = k % per_edge;
      const double a0 = two_pi * edge / sides;
      const double a1 = two_pi * (edge + 1) / sides;
      const double t = static_cast<double>(sub) / per_edge;
      const Vec3 v0(radius * std::cos(a0), radius * std::sin(a0), 0.0);
      const Vec3 v1(radius * std::cos(a1), radius * std::sin(a1), 0.0);
      Vec3 p = (1.0 - t) * v0 + t * v1;
      p.z() = shape.pitch * static_cast<double>(k) / segments_per_turn;
      points.push_back(p);
    }
  }

  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) segments.push_back({points[k], points[k + 1]});
  return CoilGeometry(std::move(segments), wire);
}

CoilGeometry transform_coil(const CoilGeometry& coil, const Vec3& translation,
                            const Eigen::AngleAxisd& rotation) {
  Pose step;
  step.rotation = rotation.toRotationMatrix();
  step.translation = translation;
  if (step.is_identity()) return coil;

  std::vector<Segment> moved;
  moved.reserve(coil.size());
  for (const auto& s : coil.segments())
    moved.push_back({step.apply(s.start), step.apply(s.end)});
  return CoilGeometry(std::move(moved), coil.wire(),
                      step.compose(coil.frame_pose()));
}

double total_wire_length(const CoilGeometry& coil) {
  double sum = 0.0;
  for (const auto& s : coil.segments()) sum += s.length();
  return sum;
}

double max_path_gap(const CoilGeometry& coil) {
  double gap = 0.0;
  const auto& segs = coil.segments();
  for (std::size_t i = 1; i < segs.size(); ++i)
    gap = std::max(gap, (segs[i].start - segs[i - 1].end).norm());
  return gap;
}

double segment_distance(const Segment& a, const Segment& b) {
  // Closest points between segments, clamped parametric form.
  const Vec3 d1 = a.direction();
  const Vec3 d2 = b.direction();
  const Vec3 r = a.start - b.start;
  const double aa = d1.squaredNorm();
  const double ee = d2.squaredNorm();
  const double f = d2.dot(r);
  const double c = d1.dot(r);
  const double bb = d1.dot(d2);
  const double denom = aa * ee - bb * bb;

  double s = 0.0;
  if (denom > 1e-14 * aa * ee) s = std::clamp((bb * f - c * ee) / denom, 0.0, 1.0);
  double t = (bb * s + f) / ee;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / aa, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((bb - c) / aa, 0.0, 1.0);
  }
  return ((a.start + s * d1) - (b.start + t * d2)).norm();
}

}  // namespace ript
