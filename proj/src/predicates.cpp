// SPDX-License-Identifier: Apache-2.0
#include "chlat/predicates.hpp"

#include <utility>

#include "chlat/errors.hpp"
#include "chlat/vec.hpp"

namespace chlat {

namespace vec {

Point sub(const Point& a, const Point& b) {
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return Point(std::move(c));
}

Point add(const Point& a, const Point& b) {
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return Point(std::move(c));
}

Point scale(const Point& a, const Rational& s) {
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] * s;
  return Point(std::move(c));
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + t * (b[i] - a[i]);
  return Point(std::move(c));
}

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Point cross(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Point& a) {
  for (const auto& x : a.coords())
    if (x != 0) return false;
  return true;
}

bool parallel(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

Point drop_coord(const Point& a, std::size_t drop) {
  std::vector<Rational> c;
  c.reserve(a.dim() - 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != drop) c.push_back(a[i]);
  return Point(std::move(c));
}

int rank(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().dim();
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.coords().begin(), r.coords().end());
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace vec

int orientation(const Point& a, const Point& b, const Point& c) {
  if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2) {
    throw PreconditionError("orientation needs 2D points");
  }
  const Rational det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(det);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return vec::parallel(vec::sub(b, a), vec::sub(c, a));
}

bool between(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) return false;
  const Point u = vec::sub(c, a);
  const Point v = vec::sub(b, a);
  if (!vec::parallel(u, v)) return false;
  // b = a + t u with 0 < t < 1
  const Rational t = vec::dot(v, u) / vec::dot(u, u);
  return t > 0 && t < 1;
}

int half_plane_side(const Point& a, const Point& b, const Point& x) {
  if (a == b) throw PreconditionError("half_plane_side needs a != b");
  return orientation(a, b, x);
}

bool in_theta(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int abc = orientation(a, b, c);
  if (abc == 0) throw PreconditionError("in_theta needs non-collinear a, b, c");
  const int acb = -abc;
  const int bca = abc;
  return orientation(a, b, d) == abc && orientation(a, c, d) == acb &&
         orientation(b, c, d) == -bca;
}

int affine_dimension(std::span<const Point> pts) {
  if (pts.empty()) throw PreconditionError("affine_dimension of an empty set");
  std::vector<Point> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec::sub(pts[i], pts[0]));
  return vec::rank(std::move(diffs));
}

}  // namespace chlat
