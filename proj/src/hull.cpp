// SPDX-License-Identifier: Apache-2.0
#include "chlat/hull.hpp"

#include <algorithm>

#include "chlat/errors.hpp"
#include "chlat/predicates.hpp"
#include "chlat/vec.hpp"

namespace chlat {

std::vector<Point> convex_hull_2d(std::span<const Point> pts) {
  if (pts.empty()) throw PreconditionError("convex_hull_2d of an empty set");
  std::vector<Point> p(pts.begin(), pts.end());
  for (const auto& x : p)
    if (x.dim() != 2) throw PreconditionError("convex_hull_2d needs 2D points");
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;

  // Andrew's monotone chain, strict turns only.
  std::vector<Point> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

HullMembership::HullMembership(std::span<const Point> pts) {
  if (pts.empty()) return;
  const std::size_t d = pts.front().dim();
  origin_ = pts.front();
  k_ = affine_dimension(pts);

  if (k_ == 1) {
    for (const auto& p : pts) {
      if (p != origin_) {
        direction_ = vec::sub(p, origin_);
        break;
      }
    }
    while (direction_[axis_] == 0) ++axis_;
    lo_ = hi_ = origin_[axis_];
    for (const auto& p : pts) {
      lo_ = std::min(lo_, p[axis_]);
      hi_ = std::max(hi_, p[axis_]);
    }
  } else if (k_ == 2) {
    std::vector<Point> proj;
    proj.reserve(pts.size());
    if (d == 3) {
      // Normal from the first independent pair of differences.
      for (std::size_t i = 1; i < pts.size() && vec::is_zero(normal_); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          Point n = vec::cross(vec::sub(pts[i], origin_), vec::sub(pts[j], origin_));
          if (!vec::is_zero(n)) {
            normal_ = std::move(n);
            break;
          }
        }
      }
      drop_ = 2;
      while (normal_[drop_] == 0) --drop_;
      for (const auto& p : pts) proj.push_back(vec::drop_coord(p, drop_));
    } else {
      proj.assign(pts.begin(), pts.end());
    }
    polygon_ = convex_hull_2d(proj);
  } else if (k_ == 3) {
    // Supporting planes through non-collinear triples with every point on
    // one closed side; their intersection is the hull.
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          Point nrm = vec::cross(vec::sub(pts[j], pts[i]), vec::sub(pts[l], pts[i]));
          if (vec::is_zero(nrm)) continue;
          const Rational off = vec::dot(nrm, pts[i]);
          int side = 0;
          bool supporting = true;
          for (const auto& p : pts) {
            const int s = sgn(vec::dot(nrm, p) - off);
            if (s == 0) continue;
            if (side == 0) {
              side = s;
            } else if (s != side) {
              supporting = false;
              break;
            }
          }
          if (!supporting) continue;
          if (side < 0) {
            planes_.push_back({vec::scale(nrm, -1), -off});
          } else {
            planes_.push_back({std::move(nrm), off});
          }
        }
      }
    }
  }
}

bool HullMembership::in_affine_hull(const Point& x) const {
  switch (k_) {
    case 0:
      return x == origin_;
    case 1:
      return vec::parallel(vec::sub(x, origin_), direction_);
    case 2:
      return x.dim() == 2 || vec::dot(normal_, vec::sub(x, origin_)) == 0;
    default:
      return true;
  }
}

Point HullMembership::project(const Point& x) const {
  return (k_ == 2 && x.dim() == 3) ? vec::drop_coord(x, drop_) : x;
}

bool HullMembership::contains(const Point& x) const {
  if (k_ < 0) return false;
  if (x.dim() != origin_.dim()) throw PreconditionError("hull query dimension mismatch");
  if (!in_affine_hull(x)) return false;
  switch (k_) {
    case 0:
      return true;
    case 1:
      return x[axis_] >= lo_ && x[axis_] <= hi_;
    case 2: {
      const Point y = project(x);
      const std::size_t m = polygon_.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (orientation(polygon_[i], polygon_[(i + 1) % m], y) < 0) return false;
      }
      return true;
    }
    default:
      for (const auto& pl : planes_) {
        if (vec::dot(pl.normal, x) < pl.offset) return false;
      }
      return true;
  }
}

bool point_in_hull(const Point& x, std::span<const Point> S) {
  return HullMembership(S).contains(x);
}

}  // namespace chlat
