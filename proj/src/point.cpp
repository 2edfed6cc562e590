// SPDX-License-Identifier: Apache-2.0
#include "chlat/point.hpp"

#include <algorithm>

#include "chlat/errors.hpp"
#include "chlat/predicates.hpp"

namespace chlat {

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

Configuration::Configuration(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.dim() != dim_) {
      throw PreconditionError("point " + to_string(p) + " has dimension " +
                              std::to_string(p.dim()) + ", expected " + std::to_string(dim_));
    }
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw PreconditionError("repeated point " + to_string(*dup));
  }
  affine_dim_ = points_.empty() ? -1 : affine_dimension(points_);
}

std::vector<Point> Configuration::select(const IndexSet& indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(points_.at(i));
  return out;
}

Configuration Configuration::subset(const IndexSet& indices) const {
  return Configuration(dim_, select(indices));
}

std::size_t Configuration::find(const Point& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(it - points_.begin());
}

}  // namespace chlat
