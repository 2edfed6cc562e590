// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "chlat/point.hpp"

namespace chlat {

struct Segment {
  Point p;
  Point q;
};

struct Triangle {
  Point a;
  Point b;
  Point c;
};

/// Exact meet of two convex pieces. `Segment` carries its endpoints in
/// lexicographic order; `Higher` is only produced by segment_triangle_meet
/// and means the meet has dimension >= 1.
struct SegMeet {
  enum class Kind { Empty, Point, Segment, Higher };

  Kind kind = Kind::Empty;
  chlat::Point first;
  chlat::Point second;

  static SegMeet empty() { return {}; }
  static SegMeet point(chlat::Point p) { return {Kind::Point, std::move(p), {}}; }
  static SegMeet segment(chlat::Point a, chlat::Point b);
  static SegMeet higher() { return {Kind::Higher, {}, {}}; }

  bool is_point() const { return kind == Kind::Point; }
  friend bool operator==(const SegMeet&, const SegMeet&) = default;
};

/// Meet of two closed segments in 2D or 3D. Symmetric in its arguments.
/// Throws PreconditionError on degenerate segments or mixed dimensions.
SegMeet segment_meet(const Segment& s, const Segment& t);

/// Meet of a closed segment and a closed triangle in 3D: Empty, Point, or
/// Higher. Throws PreconditionError when the triangle is degenerate.
SegMeet segment_triangle_meet(const Segment& s, const Triangle& t);

}  // namespace chlat
