// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chlat/configuration.hpp"
#include "chlat/families.hpp"

namespace chlat {

enum class PatternKind { V5, BPosition, GeneralPosition };

std::string pattern_name(PatternKind kind);

/// Five labelled points forming a forbidden pattern:
///  - V5:              a-b-c and a-d-e, not all collinear;
///  - BPosition:       a-b-c, e on the open side of line ac containing d,
///                     and d, e, b not collinear;
///  - GeneralPosition: no three of the five collinear.
///
/// Indices below |X| refer to X; index |X| + i refers to derived[i], a point
/// of the completion of X.
struct PatternWitness {
  PatternKind kind = PatternKind::V5;
  std::array<std::size_t, 5> indices{};
  std::vector<Point> derived;
};

/// Re-checks the defining predicates of w on `points`.
bool verify_witness(const PatternWitness& w, const std::vector<Point>& points);

/// First witness in lexicographic order of (sorted) 5-subsets.
std::optional<PatternWitness> has_v5(const Configuration& X);
std::optional<PatternWitness> in_b_position(const Configuration& X);
std::optional<PatternWitness> has_general_position_5(const Configuration& X);

/// finite ⟹ label and embedding (X into realize(*label), an isomorphism);
/// infinite ⟹ witness.
struct Verdict {
  bool finite = false;
  std::optional<FamilySpec> label;
  std::optional<ConfigMap> embedding;
  std::optional<PatternWitness> witness;
};

/// Exact finiteness decision for configurations of dimension <= 2: X is
/// finitely completable iff it is equivalent to L_n, T_n, D(p,q), I(p,q) or
/// S6. Otherwise a forbidden pattern is returned, searched in X and then in
/// successive completion rounds. Throws PreconditionError for 3D input.
Verdict recognize_family(const Configuration& X);

/// recognize_family(X).finite == !has_v5(X) for a complete planar X.
/// Throws PreconditionError when X is not complete.
bool check_second_characterization(const Configuration& X);

}  // namespace chlat
