#pragma once

// Brute-force reference implementations shared by the unit tests. They are
// deliberately naive so that they share no code paths with the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/polynomial.hpp"

namespace lapdom::reference {

/// Smallest dominating set size by enumerating subsets in size order.
inline std::size_t brute_force_gamma(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::size_t best = n;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (s >> v & 1) covered |= closed[v];
    }
    if (covered == full) best = size;
  }
  return best;
}

/// Maximum matching by trying every edge subset recursively.
inline std::size_t brute_force_matching(const Graph& g) {
  const auto edges = g.edges();
  std::vector<char> used(g.order(), 0);
  std::size_t best = 0;
  const auto go = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    best = std::max(best, size);
    if (size + (edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const Edge e = edges[j];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      self(self, j + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
  };
  go(go, 0, 0);
  return best;
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kUnreachable));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] != kUnreachable && d[k][j] != kUnreachable) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// Determinant of a rational matrix by Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// det(xI - M) by evaluating at x = 0..n and Lagrange interpolation.
inline std::vector<Rational> interpolated_char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> coeffs(n + 1, 0);
  std::vector<Rational> values;
  for (std::size_t x = 0; x <= n; ++x) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = Rational(static_cast<long>(-m(i, j)));
        if (i == j) a[i][j] += Rational(static_cast<long>(x));
      }
    }
    values.push_back(determinant(std::move(a)));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    // Basis polynomial prod_{j != i} (x - j) / (i - j), expanded ascending.
    std::vector<Rational> basis = {1};
    Rational scale = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(static_cast<long>(j));
      }
      basis = std::move(next);
      scale *= Rational(static_cast<long>(i) - static_cast<long>(j));
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += values[i] * basis[k] / scale;
  }
  return coeffs;
}

}  // namespace lapdom::reference
