// SPDX-License-Identifier: Apache-2.0
#include "chlat/configuration.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <tuple>

#include "chlat/errors.hpp"
#include "chlat/hull.hpp"

namespace chlat {

IndexSet rch(const Configuration& X, const IndexSet& A) {
  if (A.empty()) return {};
  for (auto i : A)
    if (i >= X.size()) throw PreconditionError("rch: index out of range");
  const HullMembership hull(X.select(A));
  IndexSet out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (std::binary_search(A.begin(), A.end(), i) || hull.contains(X[i])) out.push_back(i);
  }
  return out;
}

IndexSet rext(const Configuration& X) {
  IndexSet out;
  for (std::size_t x = 0; x < X.size(); ++x) {
    IndexSet rest;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (i != x) rest.push_back(i);
    if (rch(X, rest) == rest) out.push_back(x);
  }
  return out;
}

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

IndexSet from_mask(Mask m) {
  IndexSet out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

RelativeHull::RelativeHull(const Configuration& X)
    : X_(&X), full_(X.size() == 64 ? ~Mask{0} : (Mask{1} << X.size()) - 1) {
  if (X.size() > 64) throw GuardExceeded("RelativeHull supports at most 64 points");
}

Mask RelativeHull::close(Mask a) const {
  if (std::popcount(a) <= 1) return a;
  if (auto it = cache_.find(a); it != cache_.end()) return it->second;
  const HullMembership hull(X_->select(from_mask(a)));
  Mask out = a;
  for (std::size_t i = 0; i < X_->size(); ++i) {
    const Mask bit = Mask{1} << i;
    if (!(out & bit) && hull.contains((*X_)[i])) out |= bit;
  }
  cache_.emplace(a, out);
  return out;
}

IndexSet ConfigMap::image(const IndexSet& A) const {
  IndexSet out;
  for (auto i : A) out.push_back(map.at(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Largest subset size that has to be probed: by Carathéodory every hull in
// affine dimension k is the union of hulls of (k + 1)-subsets.
std::size_t probe_size(const Configuration& X, const Configuration& Y) {
  const int k = std::max({X.affine_dim(), Y.affine_dim(), 0});
  return static_cast<std::size_t>(k) + 1;
}

void check_map(const ConfigMap& m) {
  if (m.map.size() != m.source.size()) throw PreconditionError("map is not total on the source");
  for (auto y : m.map)
    if (y >= m.target.size()) throw PreconditionError("map image out of range");
}

Mask map_mask(Mask a, const std::vector<std::size_t>& f) {
  Mask out = 0;
  while (a) {
    out |= Mask{1} << f[static_cast<std::size_t>(std::countr_zero(a))];
    a &= a - 1;
  }
  return out;
}

// Calls fn(mask) for every subset of {0..n-1} with 2 <= size <= max_size.
void for_small_subsets(std::size_t n, std::size_t max_size, const std::function<void(Mask)>& fn) {
  for (std::size_t k = 2; k <= std::min(max_size, n); ++k) {
    for (const auto& s : k_subsets(n, k)) fn(to_mask(s));
  }
}

enum class Relation { Equal, Subset };

bool check_relation(const ConfigMap& m, Relation rel) {
  check_map(m);
  if (m.source.size() > 64 || m.target.size() > 64) {
    throw GuardExceeded("morphism checks support at most 64 points");
  }
  const RelativeHull hx(m.source);
  const RelativeHull hy(m.target);
  const std::size_t probe = probe_size(m.source, m.target);
  bool ok = true;
  for_small_subsets(m.source.size(), probe, [&](Mask a) {
    if (!ok) return;
    const Mask lhs = map_mask(hx.close(a), m.map);
    const Mask rhs = hy.close(map_mask(a, m.map));
    ok = rel == Relation::Equal ? lhs == rhs : (lhs & ~rhs) == 0;
  });
  return ok;
}

// Backtracking search for Rch-preserving bijections X -> Y.
//
// Hull relations of all subsets up to the probe size are tabulated once per
// side; a partial assignment is extended only while every tabulated
// relation among assigned points agrees on both sides. Per-point invariants
// built from the same tables prune candidate images.
class IsoSearch {
 public:
  IsoSearch(const Configuration& X, const Configuration& Y)
      : X_(X), Y_(Y), hx_(X), hy_(Y), n_(X.size()), probe_(probe_size(X, Y)) {
    tabulate(hx_, rel_x_);
    tabulate(hy_, rel_y_);
    sig_x_ = signatures(hx_, rel_x_, degree_x_, rext_x_);
    sig_y_ = signatures(hy_, rel_y_, degree_y_, rext_y_);
  }

  bool compatible() const {
    if (X_.size() != Y_.size()) return false;
    auto a = sig_x_;
    auto b = sig_y_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Enumerates isomorphisms; `visit` returns false to stop.
  void run(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (!compatible()) return;
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    // Most constrained first: rarest signature class.
    std::vector<std::size_t> class_size(n_);
    for (std::size_t i = 0; i < n_; ++i)
      class_size[i] = static_cast<std::size_t>(std::count(sig_x_.begin(), sig_x_.end(), sig_x_[i]));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto a, auto b) { return class_size[a] < class_size[b]; });
    candidates_.assign(n_, {});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j)
        if (sig_x_[i] == sig_y_[j]) candidates_[i].push_back(j);
      std::stable_sort(candidates_[i].begin(), candidates_[i].end(), [&](auto a, auto b) {
        return std::tie(degree_y_[a], rext_y_[a]) > std::tie(degree_y_[b], rext_y_[b]);
      });
    }
    image_.assign(n_, n_);
    visit_ = &visit;
    stopped_ = false;
    extend(0, 0);
  }

 private:
  using Table = std::unordered_map<Mask, Mask>;

  void tabulate(const RelativeHull& h, Table& t) {
    for_small_subsets(n_, probe_, [&](Mask a) { t.emplace(a, h.close(a)); });
  }

  // Rext flag, then per subset size s: how often the point lies strictly
  // inside Rch of an s-subset, and how often it belongs to an s-subset
  // that is not relatively convex.
  std::vector<std::vector<long>> signatures(const RelativeHull& h, const Table& t,
                                            std::vector<long>& degree,
                                            std::vector<long>& rext_flag) {
    std::vector<std::vector<long>> sig(n_, std::vector<long>(1 + 2 * probe_, 0));
    degree.assign(n_, 0);
    rext_flag.assign(n_, 0);
    for (std::size_t p = 0; p < n_; ++p) {
      const Mask rest = h.full() & ~(Mask{1} << p);
      rext_flag[p] = h.close(rest) == rest ? 1 : 0;
      sig[p][0] = rext_flag[p];
    }
    for (const auto& [a, closed] : t) {
      const auto s = static_cast<std::size_t>(std::popcount(a));
      const Mask inner = closed & ~a;
      for (std::size_t p = 0; p < n_; ++p) {
        const Mask bit = Mask{1} << p;
        if (inner & bit) ++sig[p][2 * s - 1];
        if ((a & bit) && inner) ++sig[p][2 * s];
        if (s == 2 && ((inner & bit) || ((a & bit) && inner))) ++degree[p];
      }
    }
    return sig;
  }

  bool consistent(std::size_t depth) const {
    // Points assigned so far: order_[0..depth].
    const std::size_t x = order_[depth];
    Mask dom = 0;
    for (std::size_t i = 0; i <= depth; ++i) dom |= Mask{1} << order_[i];
    const Mask cod = map_mask(dom, image_);
    const Mask xbit = Mask{1} << x;
    const std::size_t ybit_index = image_[x];
    bool ok = true;
    // Subsets of the earlier points, of size 1..probe-1 (with x) and 2..probe (without x).
    std::vector<std::size_t> earlier(order_.begin(), order_.begin() + depth);
    for (std::size_t k = 1; k <= std::min(probe_, earlier.size()) && ok; ++k) {
      for (const auto& pick : k_subsets(earlier.size(), k)) {
        Mask b = 0;
        for (auto i : pick) b |= Mask{1} << earlier[i];
        const Mask fb = map_mask(b, image_);
        if (k + 1 <= probe_) {
          const Mask bx = b | xbit;
          const Mask lhs = map_mask(rel_x_.at(bx) & dom, image_);
          const Mask rhs = rel_y_.at(fb | (Mask{1} << ybit_index)) & cod;
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (k >= 2) {
          const bool in_x = (rel_x_.at(b) & xbit) != 0;
          const bool in_y = (rel_y_.at(fb) & (Mask{1} << ybit_index)) != 0;
          if (in_x != in_y) {
            ok = false;
            break;
          }
        }
      }
    }
    return ok;
  }

  void extend(std::size_t depth, Mask used) {
    if (stopped_) return;
    if (depth == n_) {
      if (!(*visit_)(image_)) stopped_ = true;
      return;
    }
    const std::size_t x = order_[depth];
    for (auto y : candidates_[x]) {
      if (used & (Mask{1} << y)) continue;
      image_[x] = y;
      if (consistent(depth)) extend(depth + 1, used | (Mask{1} << y));
      if (stopped_) return;
    }
    image_[x] = n_;
  }

  const Configuration& X_;
  const Configuration& Y_;
  RelativeHull hx_;
  RelativeHull hy_;
  std::size_t n_;
  std::size_t probe_;
  Table rel_x_, rel_y_;
  std::vector<std::vector<long>> sig_x_, sig_y_;
  std::vector<long> degree_x_, degree_y_, rext_x_, rext_y_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

bool is_morphism(const ConfigMap& m) { return check_relation(m, Relation::Equal); }

bool is_hull_monotone(const ConfigMap& m) { return check_relation(m, Relation::Subset); }

bool is_isomorphism(const ConfigMap& m) {
  check_map(m);
  if (m.source.size() != m.target.size()) return false;
  std::vector<std::size_t> inverse(m.target.size(), m.target.size());
  for (std::size_t i = 0; i < m.map.size(); ++i) {
    if (inverse[m.map[i]] != m.target.size()) return false;
    inverse[m.map[i]] = i;
  }
  return is_morphism(m) && is_morphism(ConfigMap{m.target, m.source, inverse});
}

std::optional<ConfigMap> equivalent(const Configuration& X, const Configuration& Y) {
  if (X.size() != Y.size()) return std::nullopt;
  if (X.size() > 64) throw GuardExceeded("equivalent supports at most 64 points");
  std::optional<ConfigMap> found;
  IsoSearch search(X, Y);
  search.run([&](const std::vector<std::size_t>& f) {
    found = ConfigMap{X, Y, f};
    return false;
  });
  return found;
}

std::size_t automorphism_count(const Configuration& X, std::size_t guard) {
  if (X.size() > guard) {
    throw GuardExceeded("automorphism_count: " + std::to_string(X.size()) +
                        " points exceeds guard " + std::to_string(guard));
  }
  std::size_t count = 0;
  IsoSearch search(X, X);
  search.run([&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<ConfigMap> is_subconfiguration(const Configuration& Z, const Configuration& X) {
  if (Z.size() > X.size()) return std::nullopt;
  for (const auto& s : k_subsets(X.size(), Z.size())) {
    if (auto iso = equivalent(Z, X.subset(s))) {
      std::vector<std::size_t> into(Z.size());
      for (std::size_t i = 0; i < Z.size(); ++i) into[i] = s[iso->map[i]];
      return ConfigMap{Z, X, std::move(into)};
    }
  }
  return std::nullopt;
}

std::size_t count_subconfigs(const Configuration& X, const Configuration& Z) {
  if (Z.size() > X.size()) throw PreconditionError("pattern larger than configuration");
  std::size_t count = 0;
  for (const auto& s : k_subsets(X.size(), Z.size())) {
    if (equivalent(X.subset(s), Z)) ++count;
  }
  return count;
}

}  // namespace chlat
