// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chlat/point.hpp"

namespace chlat {

/// Relative convex hull Rch_X(A) = ch(A) ∩ X.
IndexSet rch(const Configuration& X, const IndexSet& A);

/// Points x whose removal leaves a relatively convex set.
IndexSet rext(const Configuration& X);

using Mask = std::uint64_t;

Mask to_mask(const IndexSet& s);
IndexSet from_mask(Mask m);

/// Memoized Rch over bitmask-encoded subsets, for configurations of at most
/// 64 points. Not thread-safe: one instance per search.
class RelativeHull {
 public:
  explicit RelativeHull(const Configuration& X);

  Mask close(Mask a) const;
  const Configuration& config() const { return *X_; }
  std::size_t size() const { return X_->size(); }
  Mask full() const { return full_; }

 private:
  const Configuration* X_;
  Mask full_;
  mutable std::unordered_map<Mask, Mask> cache_;
};

/// A total map between the index sets of two configurations.
struct ConfigMap {
  Configuration source;
  Configuration target;
  std::vector<std::size_t> map;  // source index -> target index

  /// f(A) as a sorted index set.
  IndexSet image(const IndexSet& A) const;
};

/// f(Rch_X(A)) = Rch_Y(f(A)) for every A ⊆ X. Subsets larger than
/// max(affine dims) + 1 are implied by Carathéodory and not probed.
bool is_morphism(const ConfigMap& m);

/// Bijective morphism whose inverse is a morphism.
bool is_isomorphism(const ConfigMap& m);

/// f(Rch_X(A)) ⊆ Rch_Y(f(A)) for every A: the map preserves hull
/// membership without requiring images of hulls to be relatively convex.
bool is_hull_monotone(const ConfigMap& m);

/// A witnessing isomorphism X -> Y, if any.
std::optional<ConfigMap> equivalent(const Configuration& X, const Configuration& Y);

/// Number of automorphisms of X. Throws GuardExceeded for |X| > guard.
std::size_t automorphism_count(const Configuration& X, std::size_t guard = 12);

/// Z ≡ X[S] for some |Z|-subset S of X; the witness maps Z into X.
std::optional<ConfigMap> is_subconfiguration(const Configuration& Z, const Configuration& X);

/// Number of |Z|-subsets S of X with X[S] ≡ Z.
std::size_t count_subconfigs(const Configuration& X, const Configuration& Z);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

}  // namespace chlat
