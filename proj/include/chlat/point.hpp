// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chlat/rational.hpp"

namespace chlat {

/// A point of R^d with exact coordinates, d in {1, 2, 3} for every
/// Configuration (cross() briefly needs d + 1).
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; shorter points first.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

/// "(1/2, 3)".
std::string to_string(const Point& p);

/// Sorted, duplicate-free list of point indices.
using IndexSet = std::vector<std::size_t>;

/// A finite set of pairwise distinct points of a common ambient dimension,
/// labelled by their position 0..n-1.
class Configuration {
 public:
  Configuration() = default;
  /// Throws PreconditionError on dimension mismatch or repeated points.
  Configuration(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  /// Dimension of the affine hull; -1 for the empty configuration.
  int affine_dim() const { return affine_dim_; }

  /// Points at the given indices, in index order.
  std::vector<Point> select(const IndexSet& indices) const;
  /// The induced configuration on `indices`, relabelled 0..k-1 in index order.
  Configuration subset(const IndexSet& indices) const;
  /// Index of `p`, or size() when absent.
  std::size_t find(const Point& p) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  int affine_dim_ = -1;
};

}  // namespace chlat
