// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "chlat/point.hpp"

namespace chlat {

/// Sign of det(b - a, c - a) for 2D points: +1 counterclockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// a, b, c collinear (any dimension; repeated points count as collinear).
bool collinear(const Point& a, const Point& b, const Point& c);

/// a-b-c: pairwise distinct, collinear, b strictly inside segment ac.
bool between(const Point& a, const Point& b, const Point& c);

/// Side of x relative to the directed line ab (2D, a != b).
int half_plane_side(const Point& a, const Point& b, const Point& x);

/// d in the open region H+(ab, c) ∩ H+(ac, b) ∩ H-(bc, a).
/// Throws PreconditionError when a, b, c are collinear.
bool in_theta(const Point& a, const Point& b, const Point& c, const Point& d);

/// Dimension of the affine hull of a nonempty point set.
int affine_dimension(std::span<const Point> pts);

}  // namespace chlat
