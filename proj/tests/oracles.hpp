#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph container and are only fit for tiny inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "zforce/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const zforce::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) a[u][v] = 1;
  return a;
}

// Repeatedly scans every vertex until a full pass makes no change.
inline std::vector<bool> closure(const Matrix& a, std::vector<bool> black) {
  const int n = static_cast<int>(a.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (!black[u]) continue;
      int white = -1, count = 0;
      for (int v = 0; v < n; ++v)
        if (a[u][v] && !black[v]) {
          white = v;
          ++count;
        }
      if (count == 1) {
        black[white] = true;
        changed = true;
      }
    }
  }
  return black;
}

inline bool forces_all(const Matrix& a, std::uint64_t mask) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> black(n);
  for (int v = 0; v < n; ++v) black[v] = (mask >> v) & 1;
  auto out = closure(a, black);
  return std::all_of(out.begin(), out.end(), [](bool b) { return b; });
}

// Minimum over all 2^n subsets.
inline int zero_forcing_number(const zforce::Graph& g) {
  const Matrix a = adjacency(g);
  const int n = g.order();
  int best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < best && forces_all(a, mask)) best = size;
  }
  return best;
}

inline bool isomorphic(const zforce::Graph& g, const zforce::Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool connected_without(const zforce::Graph& g, const std::vector<zforce::Edge>& removed) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v) {
      if (seen[v] || !g.adjacent(u, v)) continue;
      const zforce::Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
      seen[v] = true;
      ++count;
      q.push(v);
    }
  }
  return count == n;
}

// Smallest number of edges (tried up to `cap`) whose removal disconnects g;
// returns cap + 1 when none of size <= cap does.
inline int edge_connectivity_upto(const zforce::Graph& g, int cap) {
  if (!connected_without(g, {})) return 0;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<zforce::Edge> removed;
      for (int i : pick) removed.push_back(edges[i]);
      if (!connected_without(g, removed)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return cap + 1;
}

// Exact rank of an integer matrix by fraction-free elimination.
inline int rank(Matrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
  int r = 0;
  __int128 prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline int nullity(const Matrix& m) { return static_cast<int>(m.size()) - rank(m); }

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const int n = static_cast<int>(x.size());
  Matrix out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (x[i][k])
        for (int j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

inline Matrix shift(Matrix m, int lambda) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= lambda;
  return m;
}

// graph6 straight from the format description, one bit at a time.
inline std::string graph6(const zforce::Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline int twin_sum(const zforce::Graph& g) {
  const int n = g.order();
  std::vector<bool> used(n, false);
  int total = 0;
  for (int u = 0; u < n; ++u) {
    if (used[u]) continue;
    int size = 1;
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (int w = 0; w < n && same; ++w)
        if (g.adjacent(u, w) != g.adjacent(v, w)) same = false;
      if (same) {
        used[v] = true;
        ++size;
      }
    }
    total += size - 1;
  }
  return total;
}

}  // namespace oracle
