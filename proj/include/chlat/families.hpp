// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "chlat/point.hpp"

namespace chlat {

enum class FamilyTag { L, T, D, I, S6, LplusL, TplusL };

/// A named family member.
///
///  - L(n):        n >= 1 collinear points.
///  - T(n):        n >= 2 collinear axis points plus one star point.
///  - D(p, q):     axis a_1..a_p, c, b_1..b_q plus stars s, s' with ss'
///                 crossing the axis at the centre c; (p, q) not in
///                 {(0,0), (1,0), (0,1)}.
///  - I(p, q):     D(p, q) without its centre.
///  - S6:          the sporadic six-point pinwheel.
///  - LplusL(p,q): L_p and L_q on two skew lines of R^3, p, q >= 2.
///  - TplusL(p,q): T_p in a plane plus L_q on a line in one open half-space,
///                 not parallel to the axis; p >= 2, q >= 2. The line of the
///                 realization passes through the axis point a_2.
struct FamilySpec {
  FamilyTag tag = FamilyTag::L;
  int n = 0;
  int p = 0;
  int q = 0;

  static FamilySpec L(int n) { return {FamilyTag::L, n, 0, 0}; }
  static FamilySpec T(int n) { return {FamilyTag::T, n, 0, 0}; }
  static FamilySpec D(int p, int q) { return {FamilyTag::D, 0, p, q}; }
  static FamilySpec I(int p, int q) { return {FamilyTag::I, 0, p, q}; }
  static FamilySpec S6() { return {FamilyTag::S6, 0, 0, 0}; }
  static FamilySpec LplusL(int p, int q) { return {FamilyTag::LplusL, 0, p, q}; }
  static FamilySpec TplusL(int p, int q) { return {FamilyTag::TplusL, 0, p, q}; }

  /// Throws PreconditionError naming the violated parameter range.
  void validate() const;
  /// D and I are symmetric in (p, q): the normal form has p <= q.
  FamilySpec normalized() const;
  /// Number of points of the realization.
  std::size_t size() const;
  /// "L4", "T3", "D(2,3)", "I(0,2)", "S6", "LplusL(2,2)", ...
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string tag_name(FamilyTag tag);
/// Inverse of tag_name; throws ParseError.
FamilyTag parse_tag(const std::string& name);

/// Canonical small-integer realization.
///
/// Point order: L and T list the axis (i, 0) for i = 0.. first, then the
/// star (0, 1). D lists a_1..a_p = (-p, 0)..(-1, 0), the centre (0, 0),
/// b_1..b_q = (1, 0)..(q, 0), then s = (0, 1), s' = (0, -1); I is the same
/// without the centre. S6 is (0,0), (1,0), (2,0), (0,1), (0,-1), (-1,2).
Configuration realize(const FamilySpec& spec);

struct CatalogEntry {
  std::string name;
  Configuration config;
};

/// One representative for every planar configuration class of size n,
/// 1 <= n <= 5 (1, 1, 2, 4 and 12 classes).
std::vector<CatalogEntry> catalog(int n);

/// Looks a catalog class up by name ("T2", "I02", "R'", ...); throws
/// PreconditionError for unknown names.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace chlat
