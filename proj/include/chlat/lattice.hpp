// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chlat/configuration.hpp"

namespace chlat {

/// A finite lattice of subsets of {0..universe-1} ordered by inclusion.
/// Elements are sorted by (size, lexicographic); covers are (lower, upper)
/// element indices, sorted.
struct LatticeDiagram {
  std::size_t universe = 0;
  std::vector<IndexSet> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::string meta;

  std::size_t size() const { return elements.size(); }
};

/// Sorts the elements and recomputes the covers as the transitive reduction
/// of inclusion.
LatticeDiagram make_diagram(std::size_t universe, std::vector<IndexSet> elements, std::string meta);

/// All relatively convex subsets of a complete X, including ∅. Throws
/// PreconditionError if X is not complete and GuardExceeded for |X| > guard.
LatticeDiagram enumerate_rlat(const Configuration& X, std::size_t guard = 12);

/// Every element is the join of the atoms below it, and the atoms are
/// exactly the singletons.
bool is_atomistic(const LatticeDiagram& D);

struct RefLattice {
  enum class Kind { Subword, Chain, Product };
  Kind kind = Kind::Chain;
  std::size_t n = 1;  // Subword length or Chain size
  std::shared_ptr<const RefLattice> left, right;

  static RefLattice subword(std::size_t n) { return {Kind::Subword, n, nullptr, nullptr}; }
  static RefLattice chain(std::size_t k) { return {Kind::Chain, k, nullptr, nullptr}; }
  static RefLattice product(RefLattice a, RefLattice b);
  std::string name() const;
};

/// Subword(n): the factors [i, j) of a word of n distinct letters plus ∅.
/// Chain(k): k elements. Product: componentwise order, with elements encoded
/// as disjoint unions over the concatenated universes.
LatticeDiagram build_ref(const RefLattice& kind);

/// An order isomorphism A -> B as an element map, if one exists. Throws
/// GuardExceeded when either side has more than `guard` elements.
std::optional<std::vector<std::size_t>> lattice_isomorphic(const LatticeDiagram& A,
                                                           const LatticeDiagram& B,
                                                           std::size_t guard = 4096);

struct CrossBound {
  std::size_t size_x = 0;
  std::size_t size_xc = 0;
  bool ok = false;
};

/// |Lat(X * c)| <= 4 |Lat(X)| for a complete planar X that is finite.
CrossBound cross_bound_check(const Configuration& X, const Point& c);

/// Graphviz digraph: one node per element labelled by its index set, one edge
/// per cover, bottom to top.
std::string to_dot(const LatticeDiagram& D);

}  // namespace chlat
