// SPDX-License-Identifier: Apache-2.0
#include "chlat/families.hpp"

#include "chlat/errors.hpp"

namespace chlat {

namespace {

Point p2(long x, long y) { return Point{Rational(x), Rational(y)}; }
Point p3(long x, long y, long z) { return Point{Rational(x), Rational(y), Rational(z)}; }

Configuration planar(std::vector<Point> pts) { return Configuration(2, std::move(pts)); }

}  // namespace

std::string tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::L: return "L";
    case FamilyTag::T: return "T";
    case FamilyTag::D: return "D";
    case FamilyTag::I: return "I";
    case FamilyTag::S6: return "S6";
    case FamilyTag::LplusL: return "LplusL";
    case FamilyTag::TplusL: return "TplusL";
  }
  return "?";
}

FamilyTag parse_tag(const std::string& name) {
  for (auto t : {FamilyTag::L, FamilyTag::T, FamilyTag::D, FamilyTag::I, FamilyTag::S6,
                 FamilyTag::LplusL, FamilyTag::TplusL}) {
    if (tag_name(t) == name) return t;
  }
  throw ParseError("unknown family '" + name + "'");
}

void FamilySpec::validate() const {
  switch (tag) {
    case FamilyTag::L:
      if (n < 1) throw PreconditionError("L_n needs n > 0");
      return;
    case FamilyTag::T:
      if (n < 2) throw PreconditionError("T_n needs n > 1 axis points");
      return;
    case FamilyTag::D:
    case FamilyTag::I:
      if (p < 0 || q < 0) throw PreconditionError("p and q must be nonnegative");
      if (p + q < 2) {
        throw PreconditionError(tag_name(tag) + "_{p,q} needs (p,q) not in {(0,0),(1,0),(0,1)}");
      }
      return;
    case FamilyTag::S6:
      return;
    case FamilyTag::LplusL:
    case FamilyTag::TplusL:
      if (p < 2 || q < 2) throw PreconditionError(tag_name(tag) + " needs p >= 2 and q >= 2");
      return;
  }
}

FamilySpec FamilySpec::normalized() const {
  FamilySpec s = *this;
  if ((tag == FamilyTag::D || tag == FamilyTag::I) && s.p > s.q) std::swap(s.p, s.q);
  return s;
}

std::size_t FamilySpec::size() const {
  switch (tag) {
    case FamilyTag::L: return static_cast<std::size_t>(n);
    case FamilyTag::T: return static_cast<std::size_t>(n + 1);
    case FamilyTag::D: return static_cast<std::size_t>(p + q + 3);
    case FamilyTag::I: return static_cast<std::size_t>(p + q + 2);
    case FamilyTag::S6: return 6;
    case FamilyTag::LplusL: return static_cast<std::size_t>(p + q);
    case FamilyTag::TplusL: return static_cast<std::size_t>(p + 1 + q);
  }
  return 0;
}

std::string FamilySpec::name() const {
  switch (tag) {
    case FamilyTag::L:
    case FamilyTag::T:
      return tag_name(tag) + std::to_string(n);
    case FamilyTag::S6:
      return "S6";
    default:
      return tag_name(tag) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
}

Configuration realize(const FamilySpec& spec) {
  spec.validate();
  std::vector<Point> pts;
  switch (spec.tag) {
    case FamilyTag::L:
      for (int i = 0; i < spec.n; ++i) pts.push_back(p2(i, 0));
      return planar(std::move(pts));
    case FamilyTag::T:
      for (int i = 0; i < spec.n; ++i) pts.push_back(p2(i, 0));
      pts.push_back(p2(0, 1));
      return planar(std::move(pts));
    case FamilyTag::D:
    case FamilyTag::I:
      for (int i = -spec.p; i <= spec.q; ++i) {
        if (i == 0 && spec.tag == FamilyTag::I) continue;
        pts.push_back(p2(i, 0));
      }
      pts.push_back(p2(0, 1));
      pts.push_back(p2(0, -1));
      return planar(std::move(pts));
    case FamilyTag::S6:
      return planar({p2(0, 0), p2(1, 0), p2(2, 0), p2(0, 1), p2(0, -1), p2(-1, 2)});
    case FamilyTag::LplusL:
      // x-axis and the line {(0, t, 1)}: skew.
      for (int i = 0; i < spec.p; ++i) pts.push_back(p3(i, 0, 0));
      for (int j = 0; j < spec.q; ++j) pts.push_back(p3(0, j, 1));
      return Configuration(3, std::move(pts));
    case FamilyTag::TplusL:
      for (int i = 0; i < spec.p; ++i) pts.push_back(p3(i, 0, 0));
      pts.push_back(p3(0, 1, 0));
      // The line {(1 + t, t, t)} meets the plane z = 0 in the axis point (1, 0, 0).
      for (int j = 1; j <= spec.q; ++j) pts.push_back(p3(1 + j, j, j));
      return Configuration(3, std::move(pts));
  }
  throw PreconditionError("unknown family");
}

std::vector<CatalogEntry> catalog(int n) {
  switch (n) {
    case 1:
      return {{"L1", planar({p2(0, 0)})}};
    case 2:
      return {{"L2", planar({p2(0, 0), p2(1, 0)})}};
    case 3:
      return {{"L3", realize(FamilySpec::L(3))}, {"T2", realize(FamilySpec::T(2))}};
    case 4:
      return {{"L4", realize(FamilySpec::L(4))},
              {"T3", realize(FamilySpec::T(3))},
              {"I02", realize(FamilySpec::I(0, 2))},
              {"I11", realize(FamilySpec::I(1, 1))}};
    case 5:
      return {
          {"L5", realize(FamilySpec::L(5))},
          {"T4", realize(FamilySpec::T(4))},
          // a-b-c and a-d-e
          {"V5", planar({p2(0, 0), p2(1, 0), p2(2, 0), p2(0, 1), p2(0, 2)})},
          {"D02", realize(FamilySpec::D(0, 2))},
          // a-b-c with d, e on one side of ac, acde in convex position
          {"R", planar({p2(0, 0), p2(1, 0), p2(2, 0), p2(2, 1), p2(0, 2)})},
          {"I03", realize(FamilySpec::I(0, 3))},
          // convex quadrilateral plus one interior point, no three collinear
          {"G", planar({p2(0, 0), p2(4, 0), p2(4, 4), p2(0, 4), p2(1, 2)})},
          // a-b-c with d, e on one side of ac and e inside triangle bcd
          {"R'", planar({p2(0, 0), p2(2, 0), p2(4, 0), p2(2, 4), p2(3, 1)})},
          {"D11", realize(FamilySpec::D(1, 1))},
          {"I12", realize(FamilySpec::I(1, 2))},
          // triangle plus two interior points, no three collinear
          {"G'", planar({p2(0, 0), p2(6, 0), p2(0, 6), p2(1, 2), p2(2, 1)})},
          // convex pentagon
          {"P5", planar({p2(0, 0), p2(2, 0), p2(3, 2), p2(1, 3), p2(-1, 2)})},
      };
    default:
      throw PreconditionError("catalog covers sizes 1..5, got " + std::to_string(n));
  }
}

CatalogEntry catalog_entry(const std::string& name) {
  for (int n = 1; n <= 5; ++n) {
    for (auto& e : catalog(n))
      if (e.name == name) return e;
  }
  throw PreconditionError("unknown catalog class '" + name + "'");
}

}  // namespace chlat
