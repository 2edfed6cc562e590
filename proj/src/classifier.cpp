// SPDX-License-Identifier: Apache-2.0
#include "chlat/classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "chlat/completion.hpp"
#include "chlat/errors.hpp"
#include "chlat/predicates.hpp"
#include "chlat/vec.hpp"

namespace chlat {

std::string pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::V5: return "V5";
    case PatternKind::BPosition: return "B-position";
    case PatternKind::GeneralPosition: return "general-position";
  }
  return "?";
}

namespace {

// Collinearity and betweenness of all index triples of a planar point list.
class Incidence {
 public:
  explicit Incidence(const std::vector<Point>& pts) : pts_(&pts), n_(pts.size()) {
    col_.assign(n_ * n_ * n_, 0);
    bt_.assign(n_ * n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          if (!collinear(pts[i], pts[j], pts[k])) continue;
          for (auto [a, b, c] : {std::array{i, j, k}, std::array{i, k, j}, std::array{j, i, k},
                                 std::array{j, k, i}, std::array{k, i, j}, std::array{k, j, i}}) {
            col_[at(a, b, c)] = 1;
            if (between(pts[a], pts[b], pts[c])) bt_[at(a, b, c)] = 1;
          }
        }
      }
    }
  }

  bool col(std::size_t a, std::size_t b, std::size_t c) const { return col_[at(a, b, c)]; }
  // b strictly between a and c
  bool bt(std::size_t a, std::size_t b, std::size_t c) const { return bt_[at(a, b, c)]; }
  int side(std::size_t a, std::size_t b, std::size_t x) const {
    return orientation((*pts_)[a], (*pts_)[b], (*pts_)[x]);
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t at(std::size_t a, std::size_t b, std::size_t c) const { return (a * n_ + b) * n_ + c; }
  const std::vector<Point>* pts_;
  std::size_t n_;
  std::vector<std::uint8_t> col_, bt_;
};

using Labels = std::array<std::size_t, 5>;

std::optional<Labels> match_v5(const Incidence& I, const Labels& s) {
  for (std::size_t ia = 0; ia < 5; ++ia) {
    const std::size_t a = s[ia];
    for (std::size_t ib = 0; ib < 5; ++ib) {
      for (std::size_t ic = 0; ic < 5; ++ic) {
        if (ib == ia || ic == ia || ic == ib || !I.bt(a, s[ib], s[ic])) continue;
        std::array<std::size_t, 2> rest{};
        std::size_t r = 0;
        for (std::size_t t = 0; t < 5; ++t)
          if (t != ia && t != ib && t != ic) rest[r++] = s[t];
        for (auto [d, e] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}}) {
          if (I.bt(a, d, e) && !I.col(a, s[ib], d)) return Labels{a, s[ib], s[ic], d, e};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Labels> match_b(const Incidence& I, const Labels& s) {
  for (std::size_t ia = 0; ia < 5; ++ia) {
    for (std::size_t ib = 0; ib < 5; ++ib) {
      for (std::size_t ic = 0; ic < 5; ++ic) {
        if (ib == ia || ic == ia || ic == ib) continue;
        const std::size_t a = s[ia], b = s[ib], c = s[ic];
        if (!I.bt(a, b, c)) continue;
        std::array<std::size_t, 2> rest{};
        std::size_t r = 0;
        for (std::size_t t = 0; t < 5; ++t)
          if (t != ia && t != ib && t != ic) rest[r++] = s[t];
        const std::size_t d = rest[0], e = rest[1];
        const int sd = I.side(a, c, d);
        if (sd != 0 && I.side(a, c, e) == sd && !I.col(d, e, b)) return Labels{a, b, c, d, e};
      }
    }
  }
  return std::nullopt;
}

std::optional<Labels> match_gp(const Incidence& I, const Labels& s) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        if (I.col(s[i], s[j], s[k])) return std::nullopt;
  return s;
}

using Matcher = std::optional<Labels> (*)(const Incidence&, const Labels&);

// First 5-subset in lexicographic order whose largest index is >= min_top.
std::optional<Labels> scan(const Incidence& I, Matcher match, std::size_t min_top = 0) {
  const std::size_t n = I.size();
  if (n < 5) return std::nullopt;
  Labels s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = std::max(s[3] + 1, min_top); s[4] < n; ++s[4])
            if (auto w = match(I, s)) return w;
  return std::nullopt;
}

std::optional<PatternWitness> scan_all(const Incidence& I, std::size_t min_top = 0) {
  const std::pair<PatternKind, Matcher> order[] = {{PatternKind::V5, match_v5},
                                                   {PatternKind::BPosition, match_b},
                                                   {PatternKind::GeneralPosition, match_gp}};
  for (auto [kind, match] : order) {
    if (auto w = scan(I, match, min_top)) return PatternWitness{kind, *w, {}};
  }
  return std::nullopt;
}

void require_planar(const Configuration& X) {
  if (X.dim() != 2) throw PreconditionError("pattern search needs planar input");
}

std::optional<PatternWitness> find_one(const Configuration& X, PatternKind kind, Matcher m) {
  require_planar(X);
  Incidence I(X.points());
  if (auto w = scan(I, m)) return PatternWitness{kind, *w, {}};
  return std::nullopt;
}

// Points of a collinear set ordered along their line.
std::vector<std::size_t> order_on_line(const Configuration& X, std::vector<std::size_t> idx) {
  if (idx.size() < 2) return idx;
  const Point u = vec::sub(X[idx[1]], X[idx[0]]);
  std::vector<std::pair<Rational, std::size_t>> keyed;
  for (std::size_t i : idx) keyed.emplace_back(vec::dot(vec::sub(X[i], X[idx[0]]), u), i);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = keyed[i].second;
  return idx;
}

std::optional<Verdict> accept(const Configuration& X, FamilySpec spec, std::vector<std::size_t> map) {
  ConfigMap m{X, realize(spec), std::move(map)};
  if (!is_isomorphism(m)) return std::nullopt;
  Verdict v;
  v.finite = true;
  v.label = spec;
  v.embedding = std::move(m);
  return v;
}

std::optional<Verdict> try_axis(const Configuration& X, const IndexSet& axis) {
  const std::size_t n = X.size();
  std::vector<std::size_t> off;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (k < axis.size() && axis[k] == i) {
      ++k;
    } else {
      off.push_back(i);
    }
  }
  std::vector<std::size_t> line = order_on_line(X, axis);
  const int m = static_cast<int>(line.size());
  std::vector<std::size_t> map(n);

  if (off.size() == 1 && m >= 2) {
    for (std::size_t i = 0; i < line.size(); ++i) map[line[i]] = i;
    map[off[0]] = line.size();
    return accept(X, FamilySpec::T(m), std::move(map));
  }
  if (off.size() != 2) return std::nullopt;

  const Point& a0 = X[line.front()];
  const Point& a1 = X[line.back()];
  const Point& s = X[off[0]];
  const Point& t = X[off[1]];
  const Point u = vec::sub(a1, a0);
  auto area = [&](const Point& p) {
    const Point w = vec::sub(p, a0);
    return Rational(u[0] * w[1] - u[1] * w[0]);
  };
  const Rational as = area(s), at = area(t);
  if (sgn(as) * sgn(at) >= 0) return std::nullopt;
  // Meet of the line st with the axis line, as a parameter along u.
  const Point c = vec::lerp(s, t, as / (as - at));
  const Rational tc = vec::dot(vec::sub(c, a0), u);

  std::vector<std::size_t> below, above;
  std::optional<std::size_t> centre;
  for (std::size_t i : line) {
    const Rational ti = vec::dot(vec::sub(X[i], a0), u);
    if (ti < tc) {
      below.push_back(i);
    } else if (ti > tc) {
      above.push_back(i);
    } else {
      centre = i;
    }
  }
  if (below.size() > above.size()) {
    std::swap(below, above);
    std::reverse(below.begin(), below.end());
    std::reverse(above.begin(), above.end());
  }
  const int p = static_cast<int>(below.size());
  const int q = static_cast<int>(above.size());
  if (p + q < 2) return std::nullopt;

  // Canonical order: a_1..a_p (far to near), [centre], b_1..b_q, s, s'.
  std::size_t k = 0;
  for (std::size_t i : below) map[i] = k++;
  if (centre) map[*centre] = k++;
  for (std::size_t i : above) map[i] = k++;
  map[off[0]] = k++;
  map[off[1]] = k++;
  return accept(X, centre ? FamilySpec::D(p, q) : FamilySpec::I(p, q), std::move(map));
}

// Maximal collinear subsets with at least three points, largest first.
std::vector<IndexSet> collinear_sets(const Configuration& X) {
  const std::size_t n = X.size();
  std::set<IndexSet> lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IndexSet line{i, j};
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && collinear(X[i], X[j], X[k])) line.push_back(k);
      if (line.size() < 3) continue;
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  std::vector<IndexSet> out(lines.begin(), lines.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const IndexSet& a, const IndexSet& b) { return a.size() > b.size(); });
  return out;
}

std::optional<Verdict> structural(const Configuration& X) {
  const std::size_t n = X.size();
  if (X.affine_dim() <= 1) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const std::vector<std::size_t> line = order_on_line(X, idx);
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[line[i]] = i;
    return accept(X, FamilySpec::L(static_cast<int>(n)), std::move(map));
  }
  std::vector<IndexSet> axes = collinear_sets(X);
  if (n <= 4) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) axes.push_back({i, j});
  }
  for (const IndexSet& axis : axes) {
    if (auto v = try_axis(X, axis)) return v;
  }
  if (n == 6) {
    if (auto m = equivalent(X, realize(FamilySpec::S6()))) {
      Verdict v;
      v.finite = true;
      v.label = FamilySpec::S6();
      v.embedding = std::move(m);
      return v;
    }
  }
  return std::nullopt;
}

// Stages of the completion larger than this are not searched for patterns.
constexpr std::size_t kDerivedScanLimit = 48;

}  // namespace

bool verify_witness(const PatternWitness& w, const std::vector<Point>& points) {
  for (std::size_t i : w.indices)
    if (i >= points.size()) return false;
  std::set<std::size_t> distinct(w.indices.begin(), w.indices.end());
  if (distinct.size() != 5) return false;
  const auto& [a, b, c, d, e] = w.indices;
  const auto& P = points;
  switch (w.kind) {
    case PatternKind::V5:
      return between(P[a], P[b], P[c]) && between(P[a], P[d], P[e]) && !collinear(P[a], P[b], P[d]);
    case PatternKind::BPosition: {
      const int sd = half_plane_side(P[a], P[c], P[d]);
      return between(P[a], P[b], P[c]) && sd != 0 && half_plane_side(P[a], P[c], P[e]) == sd &&
             !collinear(P[d], P[e], P[b]);
    }
    case PatternKind::GeneralPosition:
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
          for (std::size_t k = j + 1; k < 5; ++k)
            if (collinear(P[w.indices[i]], P[w.indices[j]], P[w.indices[k]])) return false;
      return true;
  }
  return false;
}

std::optional<PatternWitness> has_v5(const Configuration& X) {
  return find_one(X, PatternKind::V5, match_v5);
}

std::optional<PatternWitness> in_b_position(const Configuration& X) {
  return find_one(X, PatternKind::BPosition, match_b);
}

std::optional<PatternWitness> has_general_position_5(const Configuration& X) {
  return find_one(X, PatternKind::GeneralPosition, match_gp);
}

Verdict recognize_family(const Configuration& X) {
  if (X.empty()) throw PreconditionError("cannot classify an empty configuration");
  if (X.dim() > 2) throw PreconditionError("3D classification undecided");
  if (auto v = structural(X)) return *v;

  Verdict v;
  if (auto w = scan_all(Incidence(X.points()))) {
    v.witness = std::move(w);
    return v;
  }

  // The pattern only appears among derived points: search each completion
  // stage, restricted to 5-subsets that use a point of the newest round.
  std::vector<Point> pts = X.points();
  std::size_t first_new = pts.size();
  while (pts.size() <= kDerivedScanLimit) {
    const std::vector<Point> step = completion_step(Configuration(2, pts));
    if (step.empty()) break;
    first_new = pts.size();
    pts.insert(pts.end(), step.begin(), step.end());
    if (pts.size() > kDerivedScanLimit) break;
    if (auto w = scan_all(Incidence(pts), first_new)) {
      w->derived.assign(pts.begin() + static_cast<std::ptrdiff_t>(X.size()), pts.end());
      v.witness = std::move(w);
      return v;
    }
  }
  throw std::logic_error("no family match and no forbidden pattern found for a " +
                         std::to_string(X.size()) + "-point configuration");
}

bool check_second_characterization(const Configuration& X) {
  require_planar(X);
  if (!completion_step(X).empty()) throw PreconditionError("configuration is not complete");
  return recognize_family(X).finite == !has_v5(X).has_value();
}

}  // namespace chlat
