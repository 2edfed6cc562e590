// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "chlat/point.hpp"
#include "chlat/rational.hpp"

namespace testing {

using chlat::Configuration;
using chlat::Point;
using chlat::Rational;

inline Rational Q(const std::string& s) { return chlat::parse_rational(s); }

inline Point P(long x, long y) { return Point{Rational(x), Rational(y)}; }
inline Point P(long x, long y, long z) { return Point{Rational(x), Rational(y), Rational(z)}; }

inline Configuration planar(std::vector<Point> pts) { return Configuration(2, std::move(pts)); }

// k distinct points of the grid {0, 1/4, ..., 1}^2.
inline Configuration grid_sample(std::mt19937& rng, std::size_t k) {
  std::vector<int> cells(25);
  for (int i = 0; i < 25; ++i) cells[static_cast<std::size_t>(i)] = i;
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) {
    pts.push_back(Point{chlat::frac(cells[i] % 5, 4), chlat::frac(cells[i] / 5, 4)});
  }
  return planar(std::move(pts));
}

// k distinct integer points of {-r..r}^dim.
inline std::vector<Point> random_points(std::mt19937& rng, std::size_t dim, std::size_t k, int r) {
  std::uniform_int_distribution<int> coord(-r, r);
  std::vector<Point> pts;
  while (pts.size() < k) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i) c.emplace_back(coord(rng));
    Point p(std::move(c));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return pts;
}

inline Configuration pentagon() { return planar({P(0, 0), P(2, 0), P(3, 2), P(1, 3), P(-1, 2)}); }

}  // namespace testing
