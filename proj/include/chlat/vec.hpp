// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "chlat/point.hpp"

// Small exact vector helpers shared by the kernel modules. Vectors are
// plain Points interpreted as displacements.
namespace chlat::vec {

Point sub(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& s);
/// a + t (b - a)
Point lerp(const Point& a, const Point& b, const Rational& t);
Rational dot(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);  // 3D only
bool is_zero(const Point& a);
/// True iff a and b are linearly dependent (every 2x2 minor vanishes).
bool parallel(const Point& a, const Point& b);
/// Point with coordinate `drop` removed.
Point drop_coord(const Point& a, std::size_t drop);
/// Rank of a list of vectors, by exact elimination.
int rank(std::vector<Point> rows);

}  // namespace chlat::vec
