#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's search engines: plain recursion over adjacency
// matrices, subset loops, and a separate graph6 decoder, so that agreement
// with the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

namespace oracles {

inline std::vector<std::vector<bool>> adjacency_matrix(const grundy::Graph& g) {
  std::vector<std::vector<bool>> a(g.n, std::vector<bool>(g.n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Longest legal sequence by exhaustive recursion, no memoization.
inline int naive_grundy(const grundy::Graph& g, grundy::Variant variant) {
  auto a = adjacency_matrix(g);
  int n = g.n;
  bool legal_closed = variant == grundy::Variant::Closed || variant == grundy::Variant::L;
  bool accum_closed = variant == grundy::Variant::Closed || variant == grundy::Variant::Z;

  std::vector<bool> covered(n, false), used(n, false);
  int best = 0;

  auto rec = [&](auto&& self, int depth) -> void {
    best = std::max(best, depth);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool fresh = false;
      for (int u = 0; u < n && !fresh; ++u)
        if ((a[v][u] || (legal_closed && u == v)) && !covered[u]) fresh = true;
      if (!fresh) continue;
      std::vector<int> added;
      for (int u = 0; u < n; ++u)
        if ((a[v][u] || (accum_closed && u == v)) && !covered[u]) {
          covered[u] = true;
          added.push_back(u);
        }
      used[v] = true;
      self(self, depth + 1);
      used[v] = false;
      for (int u : added) covered[u] = false;
    }
  };
  rec(rec, 0);
  return best;
}

// Maximum sum of step weights over all legal closed sequences.
template <class WeightFn>
long long naive_max_weighted_closed(const grundy::Graph& g, WeightFn weight) {
  auto a = adjacency_matrix(g);
  int n = g.n;
  std::vector<bool> cc(n, false), ou(n, false);
  long long best = 0;

  auto rec = [&](auto&& self, long long acc) -> void {
    best = std::max(best, acc);
    for (int v = 0; v < n; ++v) {
      bool fresh = !cc[v];
      for (int u = 0; u < n && !fresh; ++u)
        if (a[v][u] && !cc[u]) fresh = true;
      if (!fresh) continue;
      grundy::StepCategory cat;
      cat.self_new = !cc[v];
      cat.isolated = !ou[v];
      cat.nbr_new = false;
      for (int u = 0; u < n; ++u)
        if (a[v][u] && !cc[u]) cat.nbr_new = true;
      std::vector<int> added_cc, added_ou;
      for (int u = 0; u < n; ++u) {
        if ((a[v][u] || u == v) && !cc[u]) {
          cc[u] = true;
          added_cc.push_back(u);
        }
        if (a[v][u] && !ou[u]) {
          ou[u] = true;
          added_ou.push_back(u);
        }
      }
      self(self, acc + weight(cat));
      for (int u : added_cc) cc[u] = false;
      for (int u : added_ou) ou[u] = false;
    }
  };
  rec(rec, 0);
  return best;
}

// Maximum a(D) over all legal closed sequences (for the stats example).
inline int naive_max_isolated_steps(const grundy::Graph& g) {
  return static_cast<int>(naive_max_weighted_closed(
      g, [](grundy::StepCategory c) { return c.isolated ? 1 : 0; }));
}

// Minimum vertex cover by subset enumeration (n <= 20 or so).
inline int naive_min_vertex_cover(const grundy::Graph& g) {
  auto edges = g.edges();
  int best = g.n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (auto [u, v] : edges)
      if (!(mask & (std::uint32_t{1} << u)) && !(mask & (std::uint32_t{1} << v))) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

// Second, generation-independent enumerator: iterate every labeled graph,
// filter connected bipartite, deduplicate by minimum edge mask over all
// vertex permutations. Usable up to n = 6.
inline int count_connected_bipartite_bruteforce(int n) {
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<int> slot_of(n * n, -1);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = slots[i];
    slot_of[u * n + v] = slot_of[v * n + u] = i;
  }

  std::set<std::uint32_t> canon;
  std::vector<int> perm(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i)) {
        adj[slots[i].first].push_back(slots[i].second);
        adj[slots[i].second].push_back(slots[i].first);
      }
    // connectivity
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n) continue;
    // bipartite
    std::vector<int> color(n, -1);
    color[0] = 0;
    stack = {0};
    bool ok = true;
    while (!stack.empty() && ok) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    // canonical: minimum remapped mask over all permutations
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint32_t min_mask = mask;
    do {
      std::uint32_t remapped = 0;
      for (int i = 0; i < m; ++i)
        if (mask & (std::uint32_t{1} << i))
          remapped |= std::uint32_t{1}
                      << slot_of[perm[slots[i].first] * n + perm[slots[i].second]];
      min_mask = std::min(min_mask, remapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(min_mask);
  }
  return static_cast<int>(canon.size());
}

// Minimal standalone graph6 decoder (short form, n <= 62), for
// cross-checking the library parser.
inline std::vector<std::pair<int, int>> tiny_graph6_decode(const std::string& line,
                                                           int* n_out) {
  int n = line.at(0) - 63;
  *n_out = n;
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int byte = line.at(1 + bit / 6) - 63;
      if (byte & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
    }
  }
  return edges;
}

// Random labeled tree from a Pruefer sequence.
inline grundy::Graph random_tree(int n, std::mt19937& rng) {
  using grundy::Graph;
  if (n == 1) return Graph(1);
  if (n == 2) return grundy::path(2);
  std::vector<int> pruefer(n - 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int& x : pruefer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  Graph g(n);
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

// Random two-part edge partition; parts are returned as isolate-free
// graphs spanned by their edges (empty part -> empty graph).
inline std::pair<grundy::Graph, grundy::Graph> random_edge_bipartition(
    const grundy::Graph& g, std::mt19937& rng) {
  std::vector<std::pair<int, int>> e0, e1;
  std::bernoulli_distribution coin(0.5);
  for (auto e : g.edges()) (coin(rng) ? e0 : e1).push_back(e);
  return {grundy::subgraph_spanned_by_edges(g, e0),
          grundy::subgraph_spanned_by_edges(g, e1)};
}

}  // namespace oracles
