// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations. They use nothing from the library
// beyond Point/Configuration storage, so agreement is evidence.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "chlat/point.hpp"

namespace oracle {

using chlat::Configuration;
using chlat::IndexSet;
using chlat::Point;
using chlat::Rational;
using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces an augmented system; returns a solution or nothing. Free
// variables are set to zero.
inline std::optional<std::vector<Rational>> solve(Matrix m, std::size_t unknowns) {
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && row < m.size(); ++col) {
    std::size_t r = row;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][col] == 0) continue;
      const Rational f = m[k][col] / m[row][col];
      for (std::size_t c = col; c <= unknowns; ++c) m[k][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][unknowns] / m[r][pivot_col[r]];
  return x;
}

inline std::size_t rank(const std::vector<Point>& vs) {
  if (vs.empty()) return 0;
  Matrix m;
  for (const auto& v : vs) m.emplace_back(v.coords().begin(), v.coords().end());
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t k = r + 1; k < m.size(); ++k) {
      const Rational f = m[k][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline bool affinely_independent(const std::vector<Point>& T) {
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < T.size(); ++i) {
    std::vector<Rational> d;
    for (std::size_t k = 0; k < T[0].dim(); ++k) d.push_back(T[i][k] - T[0][k]);
    diffs.emplace_back(std::move(d));
  }
  return rank(diffs) == diffs.size();
}

// x is a convex combination of T (solved exactly as a linear system).
inline bool in_simplex(const Point& x, const std::vector<Point>& T) {
  const std::size_t d = x.dim(), k = T.size();
  Matrix m;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<Rational> row;
    for (const auto& t : T) row.push_back(t[r]);
    row.push_back(x[r]);
    m.push_back(std::move(row));
  }
  std::vector<Rational> ones(k, 1);
  ones.push_back(1);
  m.push_back(std::move(ones));
  const auto lambda = solve(std::move(m), k);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; });
}

// Carathéodory: x ∈ ch(S) iff x lies in a simplex spanned by at most d + 1
// affinely independent points of S.
inline bool in_hull(const Point& x, const std::vector<Point>& S) {
  const std::size_t n = S.size();
  const std::size_t kmax = std::min(n, x.dim() + 1);
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<Point> T;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) T.push_back(S[i]);
      if (affinely_independent(T) && in_simplex(x, T)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

inline IndexSet rch(const Configuration& X, const IndexSet& A) {
  std::vector<Point> S;
  for (auto i : A) S.push_back(X[i]);
  IndexSet out;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (std::binary_search(A.begin(), A.end(), i) || (!S.empty() && in_hull(X[i], S))) out.push_back(i);
  return out;
}

inline IndexSet from_bits(std::uint64_t m) {
  IndexSet s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

// Every relatively convex subset, by testing the whole power set.
inline std::set<IndexSet> rlat(const Configuration& X) {
  std::set<IndexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << X.size()); ++m) {
    const IndexSet A = from_bits(m);
    if (oracle::rch(X, A) == A) out.insert(A);
  }
  return out;
}

inline IndexSet image(const std::vector<std::size_t>& f, const IndexSet& A) {
  IndexSet out;
  for (auto i : A) out.push_back(f[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// f(Rch(A)) = Rch(f(A)) over every subset A.
inline bool morphism(const Configuration& X, const Configuration& Y, const std::vector<std::size_t>& f) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << X.size()); ++m) {
    const IndexSet A = from_bits(m);
    if (oracle::image(f, oracle::rch(X, A)) != oracle::rch(Y, oracle::image(f, A))) return false;
  }
  return true;
}

inline std::size_t automorphisms(const Configuration& X) {
  std::vector<std::size_t> f(X.size());
  std::iota(f.begin(), f.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<std::size_t> inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = i;
    if (morphism(X, X, f) && morphism(X, X, inv)) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

// Equivalence by trying every bijection.
inline bool equivalent(const Configuration& X, const Configuration& Y) {
  if (X.size() != Y.size()) return false;
  std::vector<std::size_t> f(X.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    std::vector<std::size_t> inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = i;
    if (morphism(X, Y, f) && morphism(Y, X, inv)) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Proper crossings of planar segments ab, cd, solved parametrically.
inline std::set<Point> crossings(const Configuration& X) {
  std::set<Point> out;
  const std::size_t n = X.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          if (c == a || c == b || d == a || d == b) continue;
          const Point &A = X[a], &B = X[b], &C = X[c], &D = X[d];
          const Rational ux = B[0] - A[0], uy = B[1] - A[1];
          const Rational vx = D[0] - C[0], vy = D[1] - C[1];
          const Rational det = ux * vy - uy * vx;
          if (det == 0) continue;
          const Rational wx = C[0] - A[0], wy = C[1] - A[1];
          const Rational s = (wx * vy - wy * vx) / det;
          const Rational t = (wx * uy - wy * ux) / det;
          if (s <= 0 || s >= 1 || t <= 0 || t >= 1) continue;
          Point p{A[0] + s * ux, A[1] + s * uy};
          if (X.find(p) == X.size()) out.insert(p);
        }
  return out;
}

inline std::size_t subword_count(std::size_t n) { return n * (n + 1) / 2 + 1; }

}  // namespace oracle
