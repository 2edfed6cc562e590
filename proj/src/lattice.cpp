// SPDX-License-Identifier: Apache-2.0
#include "chlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "chlat/classifier.hpp"
#include "chlat/completion.hpp"
#include "chlat/errors.hpp"

namespace chlat {

namespace {

bool by_size_then_lex(const IndexSet& a, const IndexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<Mask> masks_of(const LatticeDiagram& D) {
  std::vector<Mask> out;
  out.reserve(D.size());
  for (const auto& e : D.elements) out.push_back(to_mask(e));
  return out;
}

std::string set_label(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

LatticeDiagram make_diagram(std::size_t universe, std::vector<IndexSet> elements, std::string meta) {
  if (universe > 64) throw GuardExceeded("diagrams support universes of at most 64 points");
  std::sort(elements.begin(), elements.end(), by_size_then_lex);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  LatticeDiagram D{universe, std::move(elements), {}, std::move(meta)};
  const std::vector<Mask> m = masks_of(D);
  // Elements are sorted by size, so any element strictly between a and b
  // precedes b; b covers a iff no cover of a found so far lies below b.
  for (std::size_t a = 0; a < m.size(); ++a) {
    std::vector<std::size_t> up;
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m[b] == m[a] || !subset_of(m[a], m[b])) continue;
      const bool blocked =
          std::any_of(up.begin(), up.end(), [&](std::size_t c) { return subset_of(m[c], m[b]); });
      if (!blocked) up.push_back(b);
    }
    for (std::size_t b : up) D.covers.emplace_back(a, b);
  }
  return D;
}

LatticeDiagram enumerate_rlat(const Configuration& X, std::size_t guard) {
  if (X.size() > guard) {
    throw GuardExceeded("lattice enumeration guard: " + std::to_string(X.size()) + " > " +
                        std::to_string(guard) + " points");
  }
  if (X.dim() >= 2 && !completion_step(X).empty()) {
    throw PreconditionError("lattice enumeration needs a complete configuration");
  }
  const RelativeHull hull(X);
  const std::size_t n = X.size();
  std::vector<IndexSet> elements;
  // NextClosure: closed sets in lectic order, element i weighted 2^i.
  Mask A = hull.close(0);
  elements.push_back(from_mask(A));
  while (true) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const Mask bit = Mask{1} << i;
      if (A & bit) continue;
      const Mask below = bit - 1;
      const Mask B = hull.close((A & below) | bit);
      if ((B & below) == (A & below)) {
        A = B;
        elements.push_back(from_mask(A));
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return make_diagram(n, std::move(elements), "RLat of " + std::to_string(n) + " points");
}

bool is_atomistic(const LatticeDiagram& D) {
  if (D.elements.empty() || !D.elements.front().empty()) return false;
  const std::vector<Mask> m = masks_of(D);
  std::vector<Mask> atoms;
  for (auto [lo, hi] : D.covers)
    if (lo == 0) atoms.push_back(m[hi]);
  for (Mask a : atoms)
    if (std::popcount(a) != 1) return false;
  Mask atom_union = 0;
  for (Mask a : atoms) atom_union |= a;
  if (std::popcount(atom_union) != static_cast<int>(D.universe)) return false;
  for (Mask e : m) {
    Mask u = 0;
    for (Mask a : atoms)
      if (subset_of(a, e)) u |= a;
    // Join of the atoms below e: the least element containing their union.
    Mask join = ~Mask{0};
    bool any = false;
    for (Mask f : m) {
      if (subset_of(u, f)) {
        join &= f;
        any = true;
      }
    }
    if (!any || join != e) return false;
  }
  return true;
}

RefLattice RefLattice::product(RefLattice a, RefLattice b) {
  return {Kind::Product, 0, std::make_shared<const RefLattice>(std::move(a)),
          std::make_shared<const RefLattice>(std::move(b))};
}

std::string RefLattice::name() const {
  switch (kind) {
    case Kind::Subword: return "W" + std::to_string(n);
    case Kind::Chain: return "C" + std::to_string(n);
    case Kind::Product: return left->name() + " x " + right->name();
  }
  return "?";
}

LatticeDiagram build_ref(const RefLattice& kind) {
  std::vector<IndexSet> elements;
  std::size_t universe = 0;
  switch (kind.kind) {
    case RefLattice::Kind::Subword:
      if (kind.n < 1) throw PreconditionError("Subword needs n >= 1");
      universe = kind.n;
      elements.push_back({});
      for (std::size_t i = 0; i < kind.n; ++i) {
        for (std::size_t j = i + 1; j <= kind.n; ++j) {
          IndexSet f;
          for (std::size_t k = i; k < j; ++k) f.push_back(k);
          elements.push_back(std::move(f));
        }
      }
      break;
    case RefLattice::Kind::Chain:
      if (kind.n < 1) throw PreconditionError("Chain needs k >= 1");
      universe = kind.n - 1;
      for (std::size_t i = 0; i < kind.n; ++i) {
        IndexSet f;
        for (std::size_t k = 0; k < i; ++k) f.push_back(k);
        elements.push_back(std::move(f));
      }
      break;
    case RefLattice::Kind::Product: {
      const LatticeDiagram a = build_ref(*kind.left);
      const LatticeDiagram b = build_ref(*kind.right);
      universe = a.universe + b.universe;
      for (const auto& x : a.elements) {
        for (const auto& y : b.elements) {
          IndexSet f = x;
          for (auto k : y) f.push_back(k + a.universe);
          elements.push_back(std::move(f));
        }
      }
      break;
    }
  }
  return make_diagram(universe, std::move(elements), kind.name());
}

namespace {

struct Shape {
  std::vector<std::vector<std::size_t>> up, down;
  std::vector<std::size_t> height;
};

Shape shape_of(const LatticeDiagram& D) {
  Shape s;
  s.up.resize(D.size());
  s.down.resize(D.size());
  s.height.assign(D.size(), 0);
  for (auto [lo, hi] : D.covers) {
    s.up[lo].push_back(hi);
    s.down[hi].push_back(lo);
  }
  for (auto& v : s.up) std::sort(v.begin(), v.end());
  // Covers go from smaller to larger sets, i.e. forward in element order.
  for (std::size_t e = 0; e < D.size(); ++e)
    for (std::size_t lo : s.down[e]) s.height[e] = std::max(s.height[e], s.height[lo] + 1);
  return s;
}

// Joint colour refinement of both diagrams; colours are comparable across them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Shape& a, const Shape& b) {
  using Key = std::vector<std::size_t>;
  std::vector<std::size_t> ca(a.height.size()), cb(b.height.size());
  auto initial = [](const Shape& s, std::size_t e) {
    return Key{s.height[e], s.up[e].size(), s.down[e].size()};
  };
  auto recolour = [](auto&& key_of, std::vector<std::size_t>& ca, std::vector<std::size_t>& cb) {
    std::map<Key, std::size_t> ids;
    std::vector<Key> ka, kb;
    for (std::size_t e = 0; e < ca.size(); ++e) ka.push_back(key_of(0, e));
    for (std::size_t e = 0; e < cb.size(); ++e) kb.push_back(key_of(1, e));
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t e = 0; e < ca.size(); ++e) ca[e] = ids[ka[e]];
    for (std::size_t e = 0; e < cb.size(); ++e) cb[e] = ids[kb[e]];
    return next;
  };
  std::size_t classes = recolour(
      [&](int side, std::size_t e) { return initial(side ? b : a, e); }, ca, cb);
  while (true) {
    const auto pa = ca, pb = cb;
    const std::size_t next = recolour(
        [&](int side, std::size_t e) {
          const Shape& s = side ? b : a;
          const auto& c = side ? pb : pa;
          Key k{c[e]};
          Key up, down;
          for (auto x : s.up[e]) up.push_back(c[x]);
          for (auto x : s.down[e]) down.push_back(c[x]);
          std::sort(up.begin(), up.end());
          std::sort(down.begin(), down.end());
          k.push_back(up.size());
          k.insert(k.end(), up.begin(), up.end());
          k.insert(k.end(), down.begin(), down.end());
          return k;
        },
        ca, cb);
    if (next == classes) break;
    classes = next;
  }
  return {ca, cb};
}

class LatticeIso {
 public:
  LatticeIso(const Shape& a, const Shape& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    f_.assign(ca_.size(), kUnset);
    inv_.assign(cb_.size(), kUnset);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return f_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  static bool has(const std::vector<std::size_t>& sorted, std::size_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }

  // Cover relations between e and every mapped element agree under f.
  bool consistent(std::size_t e, std::size_t img) const {
    for (std::size_t lo : a_.down[e]) {
      if (f_[lo] != kUnset && !has(b_.up[f_[lo]], img)) return false;
    }
    for (std::size_t lo : b_.down[img]) {
      if (inv_[lo] != kUnset && !has(a_.up[inv_[lo]], e)) return false;
    }
    return true;
  }

  bool extend(std::size_t e) {
    if (e == f_.size()) return true;
    std::vector<std::size_t> candidates;
    if (!a_.down[e].empty()) {
      candidates = b_.up[f_[a_.down[e].front()]];
    } else {
      for (std::size_t x = 0; x < cb_.size(); ++x) candidates.push_back(x);
    }
    for (std::size_t img : candidates) {
      if (inv_[img] != kUnset || cb_[img] != ca_[e] || !consistent(e, img)) continue;
      f_[e] = img;
      inv_[img] = e;
      if (extend(e + 1)) return true;
      inv_[img] = kUnset;
      f_[e] = kUnset;
    }
    return false;
  }

  const Shape& a_;
  const Shape& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::size_t> f_, inv_;
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphic(const LatticeDiagram& A,
                                                           const LatticeDiagram& B,
                                                           std::size_t guard) {
  if (A.size() > guard || B.size() > guard) {
    throw GuardExceeded("lattice isomorphism guard: more than " + std::to_string(guard) +
                        " elements");
  }
  if (A.size() != B.size() || A.covers.size() != B.covers.size()) return std::nullopt;
  const Shape sa = shape_of(A), sb = shape_of(B);
  auto [ca, cb] = refine(sa, sb);
  auto histogram = [](std::vector<std::size_t> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(ca) != histogram(cb)) return std::nullopt;
  return LatticeIso(sa, sb, std::move(ca), std::move(cb)).run();
}

CrossBound cross_bound_check(const Configuration& X, const Point& c) {
  if (X.dim() != 2) throw PreconditionError("cross bound check needs a planar configuration");
  if (!recognize_family(X).finite) throw PreconditionError("cross bound check needs a finite X");
  CrossBound out;
  out.size_x = enumerate_rlat(X).size();
  const CompletionResult r = complete(cross(X, c));
  if (r.status != CompletionStatus::Complete) {
    throw PreconditionError("completion of X * c exceeded its budget");
  }
  out.size_xc = enumerate_rlat(r.points).size();
  out.ok = out.size_xc <= 4 * out.size_x;
  return out;
}

std::string to_dot(const LatticeDiagram& D) {
  std::ostringstream os;
  os << "// " << D.meta << "\n";
  os << "// elements: " << D.size() << ", atomistic: " << (is_atomistic(D) ? "true" : "false")
     << "\n";
  os << "digraph rlat {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t e = 0; e < D.size(); ++e)
    os << "  n" << e << " [label=\"" << set_label(D.elements[e]) << "\"];\n";
  for (auto [lo, hi] : D.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace chlat
