#pragma once

// Undirected loop-free graph stored as per-vertex open-neighborhood
// bitmasks, plus construction, graph6 ingestion and the open-twin
// reduction shared by the rest of the library.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

inline constexpr int kGraphCapacity = 512;

struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;       // adj[v] = open neighborhood N(v)
  std::vector<std::string> labels;  // empty, or one tag per vertex

  Graph() = default;
  explicit Graph(int vertices);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return adj[v].count(); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, ascending
  VertexSet closed_neighborhood(int v) const;
  bool has_isolated_vertex() const;

  // adjacency symmetry and the no-loop rule; throws std::logic_error on violation
  void check_invariants() const;
};

struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(const std::string& msg, std::size_t byte_offset);
  std::size_t offset;
};

// One line of graph6 text (an optional >>graph6<< prefix is skipped).
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);  // K_{1,n-1}, center at vertex 0

// The 8-vertex tree with two branch vertices carrying two leaves each;
// vertex 0 is the pendant "u" and vertex 1 its support "v".
Graph tree_t8();

// Repeatedly deletes one vertex of any pair with equal open neighborhoods
// until none remains. Higher index goes first, so results are deterministic.
Graph remove_open_twins(const Graph& g);

bool is_connected(const Graph& g);

// One side of a proper 2-coloring, or nullopt when an odd cycle exists.
std::optional<VertexSet> bipartition(const Graph& g);

// Subgraph induced by `keep`, vertices relabeled in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// The isolate-free graph spanned by the given edges (vertex set = endpoints).
Graph subgraph_spanned_by_edges(const Graph& g,
                                const std::vector<std::pair<int, int>>& es);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace grundy
