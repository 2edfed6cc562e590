// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chlat/point.hpp"

namespace chlat {

/// Termination guard for completions that may not reach a fixed point.
struct Budget {
  std::size_t max_points = 512;
  std::size_t max_rounds = 64;

  void validate() const;
};

enum class CompletionStatus { Complete, BudgetExceeded };

/// Generators of an added point, as indices into CompletionResult::points:
/// {a, b, c, d} for ab ∧ cd, or {a, b, c, d, e} for ab ∧ cde.
struct Certificate {
  std::vector<std::size_t> generators;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Complete;
  Configuration points;             // original points first, then `added`
  std::vector<Point> added;         // discovery order: by round, sorted within a round
  std::vector<Certificate> certificates;  // parallel to `added`
  std::size_t rounds = 0;           // rounds executed, including the final empty one
};

/// New single-point meets of X: proper segment crossings in 2D, plus
/// point-type segment/triangle meets in 3D. Sorted lexicographically.
std::vector<Point> completion_step(const Configuration& X);

/// Iterates completion_step to a fixed point or until the budget runs out.
CompletionResult complete(const Configuration& X, const Budget& budget = {});

/// Recomputes the meet a certificate names; returns the point it produces,
/// or nothing when the generators do not meet in a single point.
std::optional<Point> replay(const Configuration& points, const Certificate& cert);

/// Labelled V5 configuration: a-b-c and a-d-e, not all collinear.
struct V5Frame {
  Point a, b, c, d, e;

  /// Throws PreconditionError unless the labels satisfy the V5 pattern.
  void validate() const;
  Configuration configuration() const;
};

/// Applies (a, b, c, d, e) -> (a, b, c, d', e') k times, where
/// e' = cd ∧ be and d' = ae' ∧ bd. Each output is again a V5 frame and the
/// e points form a strict chain e - e' - e'' - ... - b.
std::vector<V5Frame> v5_descent(const V5Frame& v, std::size_t k);

/// X embedded in the hyperplane x_{d+1} = 0 plus (c, h) and (c, -h).
/// Requires dim(X) <= 2, h > 0 and c in X or c outside ch(X).
Configuration cross(const Configuration& X, const Point& c, const Rational& h = 1);

}  // namespace chlat
