// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chlat/classifier.hpp"
#include "chlat/completion.hpp"
#include "chlat/configuration.hpp"
#include "chlat/families.hpp"
#include "chlat/hull.hpp"
#include "chlat/lattice.hpp"
#include "chlat/predicates.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chlat;
using testing::P;
using testing::planar;

namespace {

// Collects violations of one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> all;
  for (int n = 1; n <= 5; ++n)
    for (auto& e : catalog(n)) all.push_back(std::move(e));
  return all;
}

// Complete configurations met in criteria 1-7, collected for criterion 12.
std::vector<std::pair<std::string, Configuration>>& complete_pool() {
  static std::vector<std::pair<std::string, Configuration>> pool;
  return pool;
}

void pool_if_complete(const std::string& name, const CompletionResult& r) {
  if (r.status == CompletionStatus::Complete) complete_pool().emplace_back(name, r.points);
}

void criterion1(Check& c) {
  const std::size_t expected[] = {1, 1, 2, 4, 12};
  for (int n = 1; n <= 5; ++n) {
    const auto entries = catalog(n);
    c.expect(entries.size() == expected[n - 1], "catalog(" + std::to_string(n) + ") size");
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        c.expect(!equivalent(entries[i].config, entries[j].config), entries[i].name + " ~ " + entries[j].name);
    for (const auto& e : entries) {
      for (int k = 1; k <= n; ++k) {
        std::size_t total = 0;
        for (const auto& z : catalog(k)) total += count_subconfigs(e.config, z.config);
        c.expect(total == binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k)),
                 "census identity for " + e.name + ", k=" + std::to_string(k));
      }
      pool_if_complete("catalog " + e.name, complete(e.config));
    }
  }
}

void criterion2(Check& c) {
  const auto r = complete(planar({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
  c.expect(r.status == CompletionStatus::Complete, "status");
  c.expect(r.added == std::vector<Point>{Point{frac(1, 2), frac(1, 2)}}, "added point");
  c.expect(equivalent(r.points, realize(FamilySpec::D(1, 1))).has_value(), "not equivalent to D(1,1)");
  pool_if_complete("square", r);
}

void criterion3(Check& c) {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const std::string name = FamilySpec::I(p, q).name();
      const auto r = complete(realize(FamilySpec::I(p, q)));
      c.expect(r.status == CompletionStatus::Complete && r.added == std::vector<Point>{P(0, 0)}, name + " centre");
      c.expect(equivalent(r.points, realize(FamilySpec::D(p, q))).has_value(), name + " not equivalent to D");
      pool_if_complete(name, r);
    }
  for (int q = 2; q <= 4; ++q) {
    const auto r = complete(realize(FamilySpec::I(0, q)));
    c.expect(r.status == CompletionStatus::Complete && r.added.empty(), FamilySpec::I(0, q).name());
    pool_if_complete(FamilySpec::I(0, q).name(), r);
  }
}

void criterion4(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Configuration X = realize(FamilySpec::L(static_cast<int>(n)));
    const auto D = enumerate_rlat(X);
    c.expect(D.size() == n * (n + 1) / 2 + 1, "size of Lat(L" + std::to_string(n) + ")");
    c.expect(lattice_isomorphic(D, build_ref(RefLattice::subword(n))).has_value(), "L" + std::to_string(n) + " vs W");
    pool_if_complete("L" + std::to_string(n), complete(X));
  }
}

void criterion5(Check& c) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Configuration X = realize(FamilySpec::T(static_cast<int>(n)));
    const auto D = enumerate_rlat(X);
    c.expect(D.size() == n * n + n + 2, "size of Lat(T" + std::to_string(n) + ")");
    const auto ref = build_ref(RefLattice::product(RefLattice::chain(2), RefLattice::subword(n)));
    c.expect(lattice_isomorphic(D, ref).has_value(), "T" + std::to_string(n) + " vs C2 x W");
    pool_if_complete("T" + std::to_string(n), complete(X));
  }
}

void criterion6(Check& c) {
  const auto d = complete(realize(FamilySpec::D(2, 3)));
  const auto i = complete(realize(FamilySpec::I(2, 3)));
  c.expect(d.status == CompletionStatus::Complete && i.status == CompletionStatus::Complete, "completion");
  c.expect(lattice_isomorphic(enumerate_rlat(d.points), enumerate_rlat(i.points)).has_value(), "not isomorphic");
  pool_if_complete("D(2,3)", d);
}

void criterion7(Check& c) {
  const Configuration S = realize(FamilySpec::S6());
  const auto r = complete(S);
  c.expect(r.status == CompletionStatus::Complete && r.added.empty(), "completion adds points");
  const auto v = recognize_family(S);
  c.expect(v.finite && v.label && *v.label == FamilySpec::S6(), "label");
  c.expect(automorphism_count(S) == 3, "automorphism count");
  c.expect(is_atomistic(enumerate_rlat(S)), "lattice not atomistic");
  pool_if_complete("S6", r);
}

void criterion8(Check& c) {
  const V5Frame frame{P(0, 0), P(2, 0), P(4, 0), P(1, 2), P(2, 4)};
  const Configuration X = frame.configuration();
  const auto v = recognize_family(X);
  c.expect(!v.finite && v.witness && v.witness->kind == PatternKind::V5, "no V5 witness");
  if (v.witness) c.expect(verify_witness(*v.witness, X.points()), "witness does not verify");
  c.expect(complete(X).status == CompletionStatus::BudgetExceeded, "completion finished");
  const auto frames = v5_descent(frame, 8);
  c.expect(frames.size() == 8, "frame count");
  std::set<Point> es;
  Point prev = frame.e;
  for (const auto& f : frames) {
    es.insert(f.e);
    c.expect(between(prev, f.e, frame.b), "chain " + to_string(prev) + " - " + to_string(f.e) + " - b");
    prev = f.e;
  }
  c.expect(es.size() == 8 && !es.contains(frame.e), "points not distinct");
}

void criterion9(Check& c) {
  const Configuration X = testing::pentagon();
  const auto v = recognize_family(X);
  c.expect(!v.finite && v.witness && v.witness->kind == PatternKind::GeneralPosition, "witness kind");
  c.expect(complete(X).status == CompletionStatus::BudgetExceeded, "completion finished");
}

void criterion10(Check& c) {
  const std::vector<std::pair<FamilySpec, std::vector<Point>>> cases = {
      {FamilySpec::L(3), {P(0, 0), P(1, 0), P(2, 0), P(5, 5)}},
      {FamilySpec::T(3), {P(0, 0), P(1, 0), P(2, 0), P(0, 1)}},
      {FamilySpec::D(1, 1), {P(0, 0), P(-1, 0), P(1, 0), P(0, 1)}},
  };
  for (const auto& [spec, centres] : cases) {
    const Configuration X = realize(spec);
    for (const auto& p : centres) {
      const std::string what = spec.name() + " * " + to_string(p);
      const auto b = cross_bound_check(X, p);
      c.expect(b.ok && b.size_xc <= 4 * b.size_x, what);
    }
  }
}

void criterion11(Check& c) {
  for (int n = 2; n <= 3; ++n) {
    const auto r = complete(realize(FamilySpec::LplusL(n, n)));
    c.expect(r.status == CompletionStatus::Complete && r.added.empty(), FamilySpec::LplusL(n, n).name());
  }
  c.expect(complete(realize(FamilySpec::TplusL(3, 2))).status == CompletionStatus::Complete, "TplusL(3,2)");
}

void criterion12(Check& c) {
  c.expect(!complete_pool().empty(), "no configurations collected");
  for (const auto& [name, X] : complete_pool()) {
    if (X.dim() != 2) continue;
    c.expect(check_second_characterization(X), name);
    c.expect(recognize_family(X).finite == !has_v5(X).has_value(), name + " (direct)");
  }
}

void criterion13(Check& c) {
  std::mt19937 rng(20240607);
  // Closure laws of rch.
  for (int it = 0; it < 150; ++it) {
    const Configuration X = testing::grid_sample(rng, 3 + rng() % 5);
    const std::uint64_t full = (std::uint64_t{1} << X.size()) - 1;
    const IndexSet A = oracle::from_bits(rng() & full), B = oracle::from_bits(rng() & full);
    const IndexSet hA = rch(X, A);
    c.expect(hA == oracle::rch(X, A), "rch vs oracle");
    c.expect(std::includes(hA.begin(), hA.end(), A.begin(), A.end()), "extensive");
    c.expect(rch(X, hA) == hA, "idempotent");
    IndexSet AB;
    std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(AB));
    const IndexSet hAB = rch(X, AB);
    c.expect(std::includes(hAB.begin(), hAB.end(), hA.begin(), hA.end()), "monotone");
  }
  // Morphisms preserve betweenness: b in [a, c] implies f(b) in Rch{f(a), f(c)}.
  std::size_t morphisms = 0;
  for (int it = 0; it < 3000; ++it) {
    const Configuration X = testing::grid_sample(rng, 3 + rng() % 2);
    const Configuration Y = testing::grid_sample(rng, 3 + rng() % 3);
    std::vector<std::size_t> f(X.size());
    for (auto& v : f) v = rng() % Y.size();
    const ConfigMap m{X, Y, f};
    if (!is_morphism(m)) continue;
    c.expect(oracle::morphism(X, Y, f), "morphism vs oracle");
    ++morphisms;
    for (std::size_t a = 0; a < X.size(); ++a)
      for (std::size_t b = 0; b < X.size(); ++b)
        for (std::size_t d = 0; d < X.size(); ++d) {
          if (a == b || b == d || a == d || !between(X[a], X[b], X[d])) continue;
          IndexSet ends{f[a], f[d]};
          std::sort(ends.begin(), ends.end());
          ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
          const IndexSet h = rch(Y, ends);
          c.expect(std::binary_search(h.begin(), h.end(), f[b]), "betweenness");
        }
  }
  c.expect(morphisms > 50, "too few morphisms sampled");
  // Classifier and engine agree on grid samples of up to 7 points.
  for (int it = 0; it < 1500; ++it) {
    const Configuration X = testing::grid_sample(rng, 1 + rng() % 7);
    const bool finite = recognize_family(X).finite;
    const bool done = complete(X).status == CompletionStatus::Complete;
    std::ostringstream os;
    for (const auto& p : X.points()) os << to_string(p) << ' ';
    c.expect(finite == done, "agreement on " + os.str());
  }
  // point_in_hull against the Caratheodory oracle, in 2D and 3D.
  for (int it = 0; it < 400; ++it) {
    const std::size_t dim = 2 + it % 2;
    const auto S = testing::random_points(rng, dim, 1 + rng() % 6, 3);
    const auto x = testing::random_points(rng, dim, 1, 3)[0];
    c.expect(point_in_hull(x, S) == oracle::in_hull(x, S), "point_in_hull " + to_string(x));
  }
}

void criterion14(Check& c) {
  std::vector<CatalogEntry> members;
  for (auto& e : full_catalog())
    if (complete(e.config).added.empty()) members.push_back(std::move(e));
  std::vector<LatticeDiagram> lats;
  for (const auto& e : members) lats.push_back(enumerate_rlat(e.config));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const bool eq = equivalent(members[i].config, members[j].config).has_value();
      const bool iso = lattice_isomorphic(lats[i], lats[j]).has_value();
      c.expect(eq == iso, members[i].name + " / " + members[j].name);
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"catalog census", criterion1},
      {"unit square completion", criterion2},
      {"I(p,q) completion", criterion3},
      {"Lat(L_n) is the subword lattice", criterion4},
      {"Lat(T_n) is C2 x subword lattice", criterion5},
      {"Lat(D(2,3)) isomorphic to Lat(I(2,3))", criterion6},
      {"S6", criterion7},
      {"V5 infinite and its descent chain", criterion8},
      {"convex pentagon", criterion9},
      {"cross operator bound", criterion10},
      {"spatial families", criterion11},
      {"second characterization", criterion12},
      {"property suites", criterion13},
      {"equivalence iff lattice isomorphism", criterion14},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    std::printf("%s criterion %zu: %s", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    if (!ok) {
      std::printf(" (%zu violations; first: %s)", c.failures.size(), c.failures.front().c_str());
      ++failed;
    }
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
