// SPDX-License-Identifier: Apache-2.0
#include "chlat/intersect.hpp"

#include <algorithm>
#include <array>

#include "chlat/errors.hpp"
#include "chlat/predicates.hpp"
#include "chlat/vec.hpp"

namespace chlat {

SegMeet SegMeet::segment(chlat::Point a, chlat::Point b) {
  if (b < a) std::swap(a, b);
  return {Kind::Segment, std::move(a), std::move(b)};
}

namespace {

void check_segment(const Segment& s) {
  if (s.p.dim() != s.q.dim()) throw PreconditionError("segment endpoints differ in dimension");
  if (s.p == s.q) throw PreconditionError("degenerate segment at " + to_string(s.p));
}

// Index of the coordinate whose removal keeps a plane with normal `n`
// projected bijectively.
std::size_t dominant_axis(const Point& n) {
  for (std::size_t i = n.dim(); i-- > 0;)
    if (n[i] != 0) return i;
  return 0;
}

// Restrict [lo, hi] to the parameters t where f0 + t (f1 - f0) >= 0.
// Returns false when the interval becomes empty.
bool clip(const Rational& f0, const Rational& f1, Rational& lo, Rational& hi) {
  if (f0 >= 0 && f1 >= 0) return lo <= hi;
  if (f0 < 0 && f1 < 0) return false;
  const Rational t = f0 / (f0 - f1);
  if (f0 < 0) {
    lo = std::max(lo, t);
  } else {
    hi = std::min(hi, t);
  }
  return lo <= hi;
}

}  // namespace

SegMeet segment_meet(const Segment& s, const Segment& t) {
  check_segment(s);
  check_segment(t);
  if (s.p.dim() != t.p.dim()) throw PreconditionError("segments differ in dimension");
  const std::size_t d = s.p.dim();
  if (d < 2 || d > 3) throw PreconditionError("segment_meet needs dimension 2 or 3");

  const Point u = vec::sub(s.q, s.p);
  const Point v = vec::sub(t.q, t.p);
  const Point w = vec::sub(t.p, s.p);

  if (vec::parallel(u, v)) {
    if (!vec::parallel(u, w)) return SegMeet::empty();
    // Collinear: overlap of parameter intervals along s.
    const Rational uu = vec::dot(u, u);
    Rational a = vec::dot(w, u) / uu;
    Rational b = vec::dot(vec::sub(t.q, s.p), u) / uu;
    if (b < a) std::swap(a, b);
    const Rational lo = std::max(a, Rational(0));
    const Rational hi = std::min(b, Rational(1));
    if (lo > hi) return SegMeet::empty();
    if (lo == hi) return SegMeet::point(vec::lerp(s.p, s.q, lo));
    return SegMeet::segment(vec::lerp(s.p, s.q, lo), vec::lerp(s.p, s.q, hi));
  }

  if (d == 3 && vec::dot(w, vec::cross(u, v)) != 0) return SegMeet::empty();

  // Solve s.p + a u = t.p + b v on two coordinates with a nonzero minor.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Rational det = u[i] * v[j] - u[j] * v[i];
      if (det == 0) continue;
      const Rational a = (w[i] * v[j] - w[j] * v[i]) / det;
      const Rational b = (w[i] * u[j] - w[j] * u[i]) / det;
      if (a < 0 || a > 1 || b < 0 || b > 1) return SegMeet::empty();
      return SegMeet::point(vec::lerp(s.p, s.q, a));
    }
  }
  return SegMeet::empty();  // unreachable: non-parallel implies a nonzero minor
}

SegMeet segment_triangle_meet(const Segment& s, const Triangle& t) {
  check_segment(s);
  for (const Point* p : {&s.p, &s.q, &t.a, &t.b, &t.c}) {
    if (p->dim() != 3) throw PreconditionError("segment_triangle_meet needs 3D input");
  }
  const Point n = vec::cross(vec::sub(t.b, t.a), vec::sub(t.c, t.a));
  if (vec::is_zero(n)) throw PreconditionError("degenerate triangle");

  const std::size_t axis = dominant_axis(n);
  const std::array<Point, 3> tri{vec::drop_coord(t.a, axis), vec::drop_coord(t.b, axis),
                                 vec::drop_coord(t.c, axis)};
  const int turn = orientation(tri[0], tri[1], tri[2]);

  // Signed edge function of the projected triangle, >= 0 inside.
  auto edge = [&](std::size_t k, const Point& x) {
    const Point& a = tri[k];
    const Point& b = tri[(k + 1) % 3];
    const Rational det = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
    return turn > 0 ? det : Rational(-det);
  };

  const Rational d0 = vec::dot(n, vec::sub(s.p, t.a));
  const Rational d1 = vec::dot(n, vec::sub(s.q, t.a));

  if (d0 == 0 && d1 == 0) {
    // Coplanar: clip the segment against the three edges.
    const Point p0 = vec::drop_coord(s.p, axis);
    const Point p1 = vec::drop_coord(s.q, axis);
    Rational lo = 0;
    Rational hi = 1;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!clip(edge(k, p0), edge(k, p1), lo, hi)) return SegMeet::empty();
    }
    if (lo == hi) return SegMeet::point(vec::lerp(s.p, s.q, lo));
    return SegMeet::higher();
  }
  if ((d0 > 0 && d1 > 0) || (d0 < 0 && d1 < 0)) return SegMeet::empty();

  Point hit;
  if (d0 == 0) {
    hit = s.p;
  } else if (d1 == 0) {
    hit = s.q;
  } else {
    hit = vec::lerp(s.p, s.q, d0 / (d0 - d1));
  }
  const Point h = vec::drop_coord(hit, axis);
  for (std::size_t k = 0; k < 3; ++k) {
    if (edge(k, h) < 0) return SegMeet::empty();
  }
  return SegMeet::point(std::move(hit));
}

}  // namespace chlat
