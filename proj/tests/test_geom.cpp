// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chlat/errors.hpp"
#include "chlat/hull.hpp"
#include "chlat/intersect.hpp"
#include "chlat/predicates.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chlat;
using testing::P;
using testing::Q;

TEST_CASE("rationals parse to canonical form") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("3/7") == frac(3, 7));
  CHECK(to_string(parse_rational("-6/14")) == "-3/7");
  CHECK(to_string(frac(4, -8)) == "-1/2");
  for (const char* bad : {"", "3/0", "abc", "1/2/3", "1.5", "+", "3/", "/3", " 3"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
  CHECK_THROWS_AS(frac(1, 0), PreconditionError);
}

TEST_CASE("orientation and betweenness") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == -1);
  CHECK(orientation(P(0, 0), P(1, 1), P(3, 3)) == 0);
  CHECK_THROWS_AS(orientation(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)), PreconditionError);

  CHECK(between(P(0, 0), P(1, 1), P(2, 2)));
  CHECK_FALSE(between(P(0, 0), P(2, 2), P(1, 1)));
  CHECK_FALSE(between(P(0, 0), P(0, 0), P(1, 1)));
  CHECK_FALSE(between(P(0, 0), P(1, 0), P(2, 1)));
  CHECK(between(P(0, 0, 0), P(1, 2, 3), P(2, 4, 6)));
  CHECK(collinear(P(0, 0, 0), P(1, 2, 3), P(-2, -4, -6)));
  CHECK_FALSE(collinear(P(0, 0, 0), P(1, 2, 3), P(2, 4, 5)));

  CHECK(half_plane_side(P(0, 0), P(1, 0), P(5, 2)) == 1);
  CHECK(half_plane_side(P(0, 0), P(1, 0), P(5, -2)) == -1);
  CHECK(half_plane_side(P(0, 0), P(1, 0), P(5, 0)) == 0);
}

TEST_CASE("in_theta is the open wedge beyond bc") {
  const Point a = P(0, 0), b = P(1, 0), c = P(0, 1);
  CHECK(in_theta(a, b, c, P(5, 5)));
  CHECK(in_theta(a, b, c, Point{Q("2/3"), Q("2/3")}));
  CHECK_FALSE(in_theta(a, b, c, Point{Q("1/2"), Q("1/2")}));  // on bc
  CHECK_FALSE(in_theta(a, b, c, Point{Q("1/4"), Q("1/4")}));  // inside the triangle
  CHECK_FALSE(in_theta(a, b, c, P(-1, 5)));
  CHECK_THROWS_AS(in_theta(a, P(1, 1), P(2, 2), P(3, 0)), PreconditionError);

  // d in Θ(a, b, c) implies that segments ad and bc cross.
  std::mt19937 rng(7);
  int hits = 0;
  for (int it = 0; it < 400; ++it) {
    auto pts = testing::random_points(rng, 2, 4, 4);
    if (collinear(pts[0], pts[1], pts[2])) continue;
    if (!in_theta(pts[0], pts[1], pts[2], pts[3])) continue;
    ++hits;
    CHECK(segment_meet({pts[0], pts[3]}, {pts[1], pts[2]}).is_point());
  }
  CHECK(hits > 10);
}

TEST_CASE("segment meets in the plane") {
  CHECK(segment_meet({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}) == SegMeet::point(P(1, 1)));
  CHECK(segment_meet({P(0, 0), P(1, 1)}, {P(1, 1), P(2, 0)}) == SegMeet::point(P(1, 1)));
  CHECK(segment_meet({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}) == SegMeet::empty());
  CHECK(segment_meet({P(0, 0), P(1, 0)}, {P(2, 1), P(2, -1)}) == SegMeet::empty());
  CHECK(segment_meet({P(0, 0), P(3, 0)}, {P(4, 0), P(2, 0)}) == SegMeet::segment(P(2, 0), P(3, 0)));
  CHECK(segment_meet({P(0, 0), P(2, 0)}, {P(2, 0), P(5, 0)}) == SegMeet::point(P(2, 0)));
  CHECK(segment_meet({P(0, 0), P(2, 0)}, {P(3, 0), P(5, 0)}) == SegMeet::empty());
  CHECK(segment_meet({P(0, 0), P(3, 1)}, {P(0, 1), P(3, 0)}) == SegMeet::point(Point{Q("3/2"), Q("1/2")}));
  CHECK_THROWS_AS(segment_meet({P(0, 0), P(0, 0)}, {P(0, 1), P(1, 1)}), PreconditionError);
}

TEST_CASE("segment meets in space") {
  CHECK(segment_meet({P(0, 0, 0), P(2, 2, 2)}, {P(0, 2, 2), P(2, 0, 0)}) == SegMeet::point(P(1, 1, 1)));
  CHECK(segment_meet({P(0, 0, 0), P(1, 0, 0)}, {P(0, 1, 1), P(0, 2, 1)}) == SegMeet::empty());  // skew
  CHECK(segment_meet({P(0, 0, 0), P(4, 0, 0)}, {P(1, 0, 0), P(2, 0, 0)}) ==
        SegMeet::segment(P(1, 0, 0), P(2, 0, 0)));
}

TEST_CASE("segment meet is symmetric and lies on both segments") {
  std::mt19937 rng(11);
  for (int it = 0; it < 500; ++it) {
    const std::size_t dim = it % 2 ? 3 : 2;
    auto p = testing::random_points(rng, dim, 4, 2);
    const SegMeet m1 = segment_meet({p[0], p[1]}, {p[2], p[3]});
    const SegMeet m2 = segment_meet({p[2], p[3]}, {p[1], p[0]});
    CHECK(m1 == m2);
    if (m1.is_point()) {
      CHECK(oracle::in_hull(m1.first, {p[0], p[1]}));
      CHECK(oracle::in_hull(m1.first, {p[2], p[3]}));
    }
  }
}

TEST_CASE("segment/triangle meets") {
  const Triangle t{P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)};
  CHECK(segment_triangle_meet({P(1, 1, -1), P(1, 1, 1)}, t) == SegMeet::point(P(1, 1, 0)));
  CHECK(segment_triangle_meet({P(5, 5, -1), P(5, 5, 1)}, t) == SegMeet::empty());
  CHECK(segment_triangle_meet({P(1, 1, 1), P(1, 1, 2)}, t) == SegMeet::empty());
  CHECK(segment_triangle_meet({P(0, 0, -1), P(0, 0, 1)}, t) == SegMeet::point(P(0, 0, 0)));
  CHECK(segment_triangle_meet({P(-1, 1, 0), P(5, 1, 0)}, t).kind == SegMeet::Kind::Higher);
  CHECK(segment_triangle_meet({P(-1, 1, 0), P(0, 1, 0)}, t) == SegMeet::point(P(0, 1, 0)));
  CHECK(segment_triangle_meet({P(-2, 1, 0), P(-1, 1, 0)}, t) == SegMeet::empty());
  CHECK(segment_triangle_meet({P(4, 4, 0), P(2, 2, 0)}, t) == SegMeet::point(P(2, 2, 0)));
  CHECK_THROWS_AS(segment_triangle_meet({P(0, 0, 1), P(0, 0, 2)}, {P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)}),
                  PreconditionError);
}

TEST_CASE("point meets of segment and triangle lie on both") {
  std::mt19937 rng(13);
  int points = 0;
  for (int it = 0; it < 600; ++it) {
    auto p = testing::random_points(rng, 3, 5, 2);
    if (collinear(p[2], p[3], p[4])) continue;
    const SegMeet m = segment_triangle_meet({p[0], p[1]}, {p[2], p[3], p[4]});
    if (!m.is_point()) continue;
    ++points;
    CHECK(oracle::in_hull(m.first, {p[0], p[1]}));
    CHECK(oracle::in_hull(m.first, {p[2], p[3], p[4]}));
  }
  CHECK(points > 20);
}

TEST_CASE("planar hull") {
  const std::vector<Point> pts{P(0, 0), P(2, 0), P(1, 0), P(2, 2), P(0, 2), P(1, 1), P(0, 1)};
  CHECK(convex_hull_2d(pts) == std::vector<Point>{P(0, 0), P(2, 0), P(2, 2), P(0, 2)});
  const std::vector<Point> line{P(3, 3), P(1, 1), P(2, 2)};
  CHECK(convex_hull_2d(line) == std::vector<Point>{P(1, 1), P(3, 3)});
  const std::vector<Point> one{P(1, 1)};
  CHECK(convex_hull_2d(one) == std::vector<Point>{P(1, 1)});
}

TEST_CASE("affine dimension") {
  const std::vector<Point> a{P(0, 0, 0)};
  const std::vector<Point> b{P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)};
  const std::vector<Point> c{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)};
  const std::vector<Point> d{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)};
  CHECK(affine_dimension(a) == 0);
  CHECK(affine_dimension(b) == 1);
  CHECK(affine_dimension(c) == 2);
  CHECK(affine_dimension(d) == 3);
}

TEST_CASE("point_in_hull agrees with the Carathéodory oracle") {
  std::mt19937 rng(2024);
  std::size_t violations = 0, inside = 0;
  for (int it = 0; it < 600; ++it) {
    const std::size_t dim = 2 + static_cast<std::size_t>(it % 2);
    const std::size_t k = 1 + static_cast<std::size_t>(it % 5);
    auto pts = testing::random_points(rng, dim, k + 1, 2);
    const Point x = pts.back();
    pts.pop_back();
    const bool got = point_in_hull(x, pts);
    if (got != oracle::in_hull(x, pts)) ++violations;
    inside += got;
  }
  CHECK(violations == 0);
  CHECK(inside > 20);
}
