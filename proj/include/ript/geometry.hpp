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

#ifndef RIPT_GEOMETRY_HPP
#define RIPT_GEOMETRY_HPP

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <vector>

namespace ript {

using Vec3 = Eigen::Vector3d;

struct WireSpec {
  double cross_section_radius = 0.75e-3;  // m
  double resistivity = 1.68e-8;           // ohm*m (annealed copper)
  int litz_strand_count = 1;              // 1 = solid wire

  void validate() const;
  bool operator==(const WireSpec&) const = default;
};

enum class ShapeKind { Circle, RegularPolygon };

struct CoilShape {
  ShapeKind kind = ShapeKind::Circle;
  int polygon_sides = 0;  // only for RegularPolygon
  double aperture_diameter = 1.0;
  int turns = 5;
  double pitch = 0.01;  // axial advance per turn

  static CoilShape circle(double diameter, int turns, double pitch);
  static CoilShape polygon(int sides, double diameter, int turns, double pitch);
  static CoilShape octagon(double diameter, int turns, double pitch) {
    return polygon(8, diameter, turns, pitch);
  }

  void validate() const;
  // Axial extent of the winding from first to last point.
  double axial_length() const { return pitch * turns; }
  bool operator==(const CoilShape&) const = default;
};

struct Segment {
  Vec3 start;
  Vec3 end;

  Vec3 direction() const { return end - start; }
  Vec3 midpoint() const { return 0.5 * (start + end); }
  double length() const { return (end - start).norm(); }
};

// Rigid coil-local -> world transform.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  // (*this) after `inner`.
  Pose compose(const Pose& inner) const;
  bool is_identity() const;
};

class CoilGeometry {
 public:
  CoilGeometry() = default;
  // Segments in world coordinates. Throws if a segment is degenerate or the
  // path is discontinuous.
  CoilGeometry(std::vector<Segment> segments, WireSpec wire, Pose pose = {});

  const std::vector<Segment>& segments() const { return segments_; }
  const WireSpec& wire() const { return wire_; }
  const Pose& frame_pose() const { return pose_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  double max_segment_length() const;
  double min_segment_length() const;

 private:
  std::vector<Segment> segments_;
  WireSpec wire_;
  Pose pose_;
};

inline constexpr int kDefaultCircleSegmentsPerTurn = 64;
inline constexpr int kDefaultPolygonEdgeSubdivisions = 4;
inline constexpr int kMinCircleSegmentsPerTurn = 16;

// Default discretization: 64 for circles, sides * 4 for polygons.
int default_segments_per_turn(const CoilShape& shape);

// Continuous helix of `turns` loops along local +z starting on +x. Polygon
// vertices lie on the circle of diameter `aperture_diameter`.
// segments_per_turn <= 0 selects the default.
CoilGeometry build_coil(const CoilShape& shape, const WireSpec& wire,
                        int segments_per_turn = 0);

CoilGeometry transform_coil(const CoilGeometry& coil, const Vec3& translation,
                            const Eigen::AngleAxisd& rotation =
                                Eigen::AngleAxisd(0.0, Vec3::UnitZ()));

double total_wire_length(const CoilGeometry& coil);

// Largest gap between consecutive segment endpoints.
double max_path_gap(const CoilGeometry& coil);

// Shortest distance between two line segments.
double segment_distance(const Segment& a, const Segment& b);

}  // namespace ript

#endif  // RIPT_GEOMETRY_HPP
