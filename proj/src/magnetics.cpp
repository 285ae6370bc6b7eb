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

#include "ript/magnetics.hpp"

#include "ript/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace ript {

namespace {

constexpr double kMu0Over4Pi = 1.0e-7;

struct GaussRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// Breakpoints on [0, len] refined geometrically toward `focus`, so the
// near-singular behavior of the kernel at a shared corner is resolved.
std::vector<double> graded_breaks(double len, double focus, double scale) {
  constexpr double ratio = 0.3;
  constexpr int max_levels = 24;
  std::vector<double> breaks{0.0, len};
  const auto grade = [&](double span, double sign) {
    double step = span * ratio;
    for (int level = 0; level < max_levels && step > scale; ++level) {
      breaks.push_back(focus + sign * step);
      step *= ratio;
    }
  };
  if (focus > 0.0) grade(focus, -1.0);
  if (focus < len) grade(len - focus, 1.0);
  if (focus > 0.0 && focus < len) breaks.push_back(focus);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

// Closest-point parameter (arc length) on `a` with respect to segment `b`.
double closest_arc_length(const Segment& a, const Segment& b) {
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
  const double t = (bb * s + f) / ee;
  if (t < 0.0)
    s = std::clamp(-c / aa, 0.0, 1.0);
  else if (t > 1.0)
    s = std::clamp((bb - c) / aa, 0.0, 1.0);
  return s * std::sqrt(aa);
}

// Integral over `a` (Gauss-Legendre, graded panels) of the closed-form line
// integral over `b` of 1/sqrt(|r_a - r_b|^2 + reg^2). Unit-direction factor
// excluded.
double outer_inner_integral(const Segment& a, const Segment& b, double reg2,
                            const GaussRule& rule, double gap) {
  const double la = a.length();
  const double lb = b.length();
  const Vec3 ua = a.direction() / la;
  const Vec3 ub = b.direction() / lb;

  std::vector<double> breaks;
  if (gap < la) {
    const double scale = std::max({gap, std::sqrt(reg2), 1e-9 * la});
    breaks = graded_breaks(la, closest_arc_length(a, b), scale);
  } else {
    breaks = {0.0, la};
  }

  CompensatedSum total;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p];
    const double width = breaks[p + 1] - lo;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const Vec3 point = a.start + (lo + width * rule.nodes[q]) * ua;
      const Vec3 w = point - b.start;
      const double along = w.dot(ub);
      const double h2 = std::max(w.squaredNorm() - along * along, 0.0) + reg2;
      const double h = std::sqrt(std::max(h2, 1e-300));
      const double inner = std::asinh((lb - along) / h) + std::asinh(along / h);
      total.add(width * rule.weights[q] * inner);
    }
  }
  return total.value();
}

double pair_value(const Segment& a, const Segment& b, double reg2,
                  const GaussRule& rule) {
  const double cosine = a.direction().dot(b.direction()) / (a.length() * b.length());
  if (cosine == 0.0) return 0.0;
  const double gap = segment_distance(a, b);
  const double ab = outer_inner_integral(a, b, reg2, rule, gap);
  const double ba = outer_inner_integral(b, a, reg2, rule, gap);
  return kMu0Over4Pi * cosine * 0.5 * (ab + ba);
}

double midpoint_value(const Segment& a, const Segment& b, double reg2) {
  const double dist2 = (a.midpoint() - b.midpoint()).squaredNorm() + reg2;
  return kMu0Over4Pi * a.direction().dot(b.direction()) / std::sqrt(dist2);
}

double midpoint_threshold(const IntegrationSettings& s, double longest) {
  return std::max(s.min_center_distance_for_midpoint_rule,
                  s.midpoint_length_factor * longest);
}

}  // namespace

void IntegrationSettings::validate() const {
  if (quadrature_points_per_segment < 1)
    throw std::invalid_argument("integration: quadrature_points_per_segment must be >= 1");
  if (!(min_center_distance_for_midpoint_rule >= 0.0))
    throw std::invalid_argument("integration: min_center_distance_for_midpoint_rule must be >= 0");
  if (!(midpoint_length_factor > 0.0))
    throw std::invalid_argument("integration: midpoint_length_factor must be > 0");
}

LinkInductances LinkInductances::from(double lp, double ls, double m) {
  return {lp, ls, m, coupling_coefficient(lp, ls, m)};
}

double partial_self_inductance(double length, double radius, bool internal) {
  const double hyp = std::hypot(length, radius);
  double bracket = length * std::log((length + hyp) / radius) - hyp + radius;
  if (internal) bracket += 0.25 * length;
  return kMu0 / (2.0 * std::numbers::pi) * bracket;
}

double segment_pair_inductance(const Segment& a, const Segment& b,
                               double regularization, int quadrature_points) {
  const GaussRule rule = gauss_legendre(quadrature_points);
  return pair_value(a, b, regularization * regularization, rule);
}

double mutual_inductance(const CoilGeometry& a, const CoilGeometry& b,
                         const IntegrationSettings& settings) {
  settings.validate();
  const GaussRule rule = gauss_legendre(settings.quadrature_points_per_segment);
  const double longest = std::max(a.max_segment_length(), b.max_segment_length());
  const double clearance =
      a.wire().cross_section_radius + b.wire().cross_section_radius;
  const double near = std::max(midpoint_threshold(settings, longest),
                               longest + clearance);
  const double near2 = near * near;

  const auto& sa = a.segments();
  const auto& sb = b.segments();
  std::vector<double> rows(sa.size(), 0.0);
  parallel_for(sa.size(), settings.threads, [&](std::size_t i) {
    CompensatedSum row;
    for (const auto& seg : sb) {
      if ((sa[i].midpoint() - seg.midpoint()).squaredNorm() > near2) {
        row.add(midpoint_value(sa[i], seg, 0.0));
        continue;
      }
      if (segment_distance(sa[i], seg) < clearance)
        throw GeometryOverlapError(
            "coils overlap: wire segments closer than the sum of wire radii");
      row.add(pair_value(sa[i], seg, 0.0, rule));
    }
    rows[i] = row.value();
  });

  CompensatedSum total;
  for (double r : rows) total.add(r);
  return total.value();
}

double self_inductance(const CoilGeometry& coil,
                       const IntegrationSettings& settings) {
  settings.validate();
  if (coil.empty()) throw std::invalid_argument("self_inductance: empty coil");
  const double radius = coil.wire().cross_section_radius;
  if (coil.min_segment_length() < 0.2 * radius)
    throw std::invalid_argument(
        "self_inductance: segment shorter than 0.1 wire diameter (" +
        std::to_string(coil.min_segment_length()) + " m)");

  const GaussRule rule = gauss_legendre(settings.quadrature_points_per_segment);
  const double reg2 = radius * radius;
  const double near = std::max(midpoint_threshold(settings, coil.max_segment_length()),
                               coil.max_segment_length() + 2.0 * radius);
  const double near2 = near * near;

  const auto& segs = coil.segments();
  std::vector<double> rows(segs.size(), 0.0);
  parallel_for(segs.size(), settings.threads, [&](std::size_t i) {
    CompensatedSum row;
    row.add(partial_self_inductance(segs[i].length(), radius,
                                    settings.internal_inductance));
    for (std::size_t j = 0; j < segs.size(); ++j) {
      if (j == i) continue;
      if ((segs[i].midpoint() - segs[j].midpoint()).squaredNorm() > near2)
        row.add(midpoint_value(segs[i], segs[j], reg2));
      else
        row.add(pair_value(segs[i], segs[j], reg2, rule));
    }
    rows[i] = row.value();
  });

  CompensatedSum total;
  for (double r : rows) total.add(r);
  return total.value();
}

double coupling_coefficient(double l_primary, double l_secondary,
                            double mutual) {
  if (!(l_primary > 0.0) || !(l_secondary > 0.0))
    throw std::invalid_argument("coupling_coefficient: self-inductances must be > 0");
  return mutual / std::sqrt(l_primary * l_secondary);
}

LinkInductances extract_link(const CoilGeometry& tx, const CoilGeometry& rx,
                             const IntegrationSettings& settings) {
  const double lp = self_inductance(tx, settings);
  const double ls = self_inductance(rx, settings);
  return LinkInductances::from(lp, ls, mutual_inductance(tx, rx, settings));
}

}  // namespace ript
