// SPDX-License-Identifier: Apache-2.0
#include "chlat/completion.hpp"

#include <map>
#include <set>

#include "chlat/errors.hpp"
#include "chlat/hull.hpp"
#include "chlat/intersect.hpp"
#include "chlat/predicates.hpp"

namespace chlat {

void Budget::validate() const {
  if (max_points == 0 || max_rounds == 0) throw PreconditionError("budget limits must be positive");
}

namespace {

using Found = std::map<Point, std::vector<std::size_t>>;

// Planar point in integer homogeneous form (X : Y : W), W > 0.
struct HPoint {
  mpz_class x, y, w;
};

HPoint homogenize(const Point& p) {
  HPoint h;
  mpz_lcm(h.w.get_mpz_t(), p[0].get_den_mpz_t(), p[1].get_den_mpz_t());
  h.x = p[0].get_num() * (h.w / p[0].get_den());
  h.y = p[1].get_num() * (h.w / p[1].get_den());
  return h;
}

// Line through two homogeneous points (their cross product).
HPoint join(const HPoint& a, const HPoint& b) {
  return {a.y * b.w - a.w * b.y, a.w * b.x - a.x * b.w, a.x * b.y - a.y * b.x};
}

int side(const HPoint& line, const HPoint& p) {
  mpz_class s = line.x * p.x + line.y * p.y + line.w * p.w;
  return sgn(s);
}

// Segments (i, j), i < j, ordered by j then i, so that all segments with
// both endpoints below m come first: there are m (m - 1) / 2 of them.
std::vector<std::pair<std::size_t, std::size_t>> segments(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

// Records p if it is new; returns false once more than `limit` points are found.
bool record(const std::set<Point>& known, Found& found, Point p,
            std::vector<std::size_t> gens, std::size_t limit) {
  if (!known.contains(p)) found.emplace(std::move(p), std::move(gens));
  return found.size() <= limit;
}

// Proper crossings of segment pairs in which some endpoint has index
// >= first_new. Every other pair was examined in an earlier round.
bool discover_2d(const std::vector<Point>& pts, std::size_t first_new, const std::set<Point>& known,
                 std::size_t limit, Found& found) {
  const std::size_t n = pts.size();
  std::vector<HPoint> h;
  h.reserve(n);
  for (const auto& p : pts) h.push_back(homogenize(p));
  const auto segs = segments(n);
  std::vector<HPoint> lines;
  lines.reserve(segs.size());
  for (auto [i, j] : segs) lines.push_back(join(h[i], h[j]));

  const std::size_t old_segs = first_new * (first_new > 0 ? first_new - 1 : 0) / 2;
  for (std::size_t s = old_segs; s < segs.size(); ++s) {
    const auto [a, b] = segs[s];
    for (std::size_t t = 0; t < s; ++t) {
      const auto [c, d] = segs[t];
      if (c == a || c == b || d == a || d == b) continue;
      if (side(lines[s], h[c]) * side(lines[s], h[d]) >= 0) continue;
      if (side(lines[t], h[a]) * side(lines[t], h[b]) >= 0) continue;
      const HPoint m = join(lines[s], lines[t]);
      Rational x(m.x, m.w);
      Rational y(m.y, m.w);
      x.canonicalize();
      y.canonicalize();
      if (!record(known, found, Point{x, y}, {c, d, a, b}, limit)) return false;
    }
  }
  return true;
}

bool discover_3d(const std::vector<Point>& pts, std::size_t first_new, const std::set<Point>& known,
                 std::size_t limit, Found& found) {
  const std::size_t n = pts.size();
  const auto segs = segments(n);
  const std::size_t old_segs = first_new * (first_new > 0 ? first_new - 1 : 0) / 2;

  for (std::size_t s = old_segs; s < segs.size(); ++s) {
    const auto [a, b] = segs[s];
    for (std::size_t t = 0; t < s; ++t) {
      const auto [c, d] = segs[t];
      if (c == a || c == b || d == a || d == b) continue;
      SegMeet m = segment_meet({pts[c], pts[d]}, {pts[a], pts[b]});
      if (m.is_point() && !record(known, found, std::move(m.first), {c, d, a, b}, limit)) {
        return false;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (collinear(pts[i], pts[j], pts[l])) continue;
        const Triangle tri{pts[i], pts[j], pts[l]};
        for (std::size_t s = l < first_new ? old_segs : 0; s < segs.size(); ++s) {
          const auto [a, b] = segs[s];
          if (a == i || a == j || a == l || b == i || b == j || b == l) continue;
          SegMeet m = segment_triangle_meet({pts[a], pts[b]}, tri);
          if (m.is_point() && !record(known, found, std::move(m.first), {a, b, i, j, l}, limit)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool discover(const std::vector<Point>& pts, std::size_t dim, std::size_t first_new,
              std::size_t limit, Found& found) {
  const std::set<Point> known(pts.begin(), pts.end());
  return dim == 2 ? discover_2d(pts, first_new, known, limit, found)
                  : discover_3d(pts, first_new, known, limit, found);
}

void check_dim(const Configuration& X) {
  if (X.dim() != 2 && X.dim() != 3) {
    throw PreconditionError("completion needs dimension 2 or 3, got " + std::to_string(X.dim()));
  }
}

}  // namespace

std::vector<Point> completion_step(const Configuration& X) {
  check_dim(X);
  Found found;
  discover(X.points(), X.dim(), 0, static_cast<std::size_t>(-1), found);
  std::vector<Point> out;
  out.reserve(found.size());
  for (auto& [p, gens] : found) out.push_back(p);
  return out;
}

CompletionResult complete(const Configuration& X, const Budget& budget) {
  check_dim(X);
  budget.validate();
  CompletionResult result;
  std::vector<Point> pts = X.points();
  std::size_t first_new = 0;
  result.status = CompletionStatus::BudgetExceeded;

  while (result.rounds < budget.max_rounds) {
    ++result.rounds;
    const std::size_t limit = budget.max_points > pts.size() ? budget.max_points - pts.size() : 0;
    Found found;
    const bool within = discover(pts, X.dim(), first_new, limit, found);
    if (found.empty()) {
      result.status = CompletionStatus::Complete;
      break;
    }
    first_new = pts.size();
    // An aborted round keeps its first `limit` points, so |points| <= max_points.
    std::size_t kept = 0;
    for (auto& [p, gens] : found) {
      if (!within && kept++ == limit) break;
      pts.push_back(p);
      result.added.push_back(p);
      result.certificates.push_back({std::move(gens)});
    }
    if (!within) break;
  }
  result.points = Configuration(X.dim(), std::move(pts));
  return result;
}

std::optional<Point> replay(const Configuration& points, const Certificate& cert) {
  const auto& g = cert.generators;
  SegMeet m;
  if (g.size() == 4) {
    m = segment_meet({points[g[0]], points[g[1]]}, {points[g[2]], points[g[3]]});
  } else if (g.size() == 5) {
    m = segment_triangle_meet({points[g[0]], points[g[1]]},
                              {points[g[2]], points[g[3]], points[g[4]]});
  } else {
    throw PreconditionError("certificate needs 4 or 5 generators");
  }
  if (!m.is_point()) return std::nullopt;
  return m.first;
}

void V5Frame::validate() const {
  for (const Point* p : {&a, &b, &c, &d, &e}) {
    if (p->dim() != 2) throw PreconditionError("V5 frame needs 2D points");
  }
  if (!between(a, b, c) || !between(a, d, e) || collinear(a, b, d)) {
    throw PreconditionError("points are not in V5 form (a-b-c, a-d-e, not collinear)");
  }
}

Configuration V5Frame::configuration() const { return Configuration(2, {a, b, c, d, e}); }

std::vector<V5Frame> v5_descent(const V5Frame& v, std::size_t k) {
  v.validate();
  std::vector<V5Frame> out;
  out.reserve(k);
  V5Frame cur = v;
  for (std::size_t i = 0; i < k; ++i) {
    // Both meets are crossings of two cevians of a triangle, hence points.
    const SegMeet e1 = segment_meet({cur.c, cur.d}, {cur.b, cur.e});
    if (!e1.is_point()) throw PreconditionError("descent: cd and be do not cross");
    const SegMeet d1 = segment_meet({cur.a, e1.first}, {cur.b, cur.d});
    if (!d1.is_point()) throw PreconditionError("descent: ae' and bd do not cross");
    cur = V5Frame{cur.a, cur.b, cur.c, d1.first, e1.first};
    out.push_back(cur);
  }
  return out;
}

Configuration cross(const Configuration& X, const Point& c, const Rational& h) {
  if (X.dim() > 2) throw PreconditionError("cross lifts configurations of dimension <= 2");
  if (c.dim() != X.dim()) throw PreconditionError("cross point has the wrong dimension");
  if (h <= 0) throw PreconditionError("cross height must be positive");
  if (X.find(c) == X.size() && point_in_hull(c, X.points())) {
    throw PreconditionError("cross point must lie in X or outside ch(X)");
  }
  auto lift = [](const Point& p, const Rational& z) {
    std::vector<Rational> coords(p.coords().begin(), p.coords().end());
    coords.push_back(z);
    return Point(std::move(coords));
  };
  std::vector<Point> pts;
  pts.reserve(X.size() + 2);
  for (const auto& p : X.points()) pts.push_back(lift(p, 0));
  pts.push_back(lift(c, h));
  pts.push_back(lift(c, -h));
  return Configuration(X.dim() + 1, std::move(pts));
}

}  // namespace chlat
