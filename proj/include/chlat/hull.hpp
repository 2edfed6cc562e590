// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "chlat/point.hpp"

namespace chlat {

/// Extreme points of a 2D set as a counterclockwise cycle starting at the
/// lexicographically smallest point. Collinear boundary points are dropped;
/// a collinear input yields its two endpoints, a single point itself.
std::vector<Point> convex_hull_2d(std::span<const Point> pts);

/// Exact membership oracle for the closed convex hull of a point set in
/// dimension 1, 2 or 3.
///
/// The hull is represented inside its own affine hull: after an affine
/// dimension test, points are projected onto coordinates that keep the
/// affine hull bijective, and the projected hull is stored as an interval
/// (k = 1), a counterclockwise polygon (k = 2) or a list of supporting
/// planes through triples of input points (k = 3).
class HullMembership {
 public:
  explicit HullMembership(std::span<const Point> pts);

  bool contains(const Point& x) const;
  int affine_dim() const { return k_; }

 private:
  struct Plane {
    Point normal;
    Rational offset;  // inside iff dot(normal, x) >= offset
  };

  bool in_affine_hull(const Point& x) const;
  Point project(const Point& x) const;

  int k_ = -1;
  Point origin_;
  Point direction_;  // k == 1
  Point normal_;     // k == 2 inside 3D
  std::size_t drop_ = 0;
  std::size_t axis_ = 0;  // k == 1: coordinate used for the interval
  Rational lo_, hi_;
  std::vector<Point> polygon_;
  std::vector<Plane> planes_;
};

/// x in ch(S), closed and exact.
bool point_in_hull(const Point& x, std::span<const Point> S);

}  // namespace chlat
