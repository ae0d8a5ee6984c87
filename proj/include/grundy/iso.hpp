#pragma once

// Canonical forms, isomorphism testing and small-graph enumeration.
// Brute-force over color-class-respecting permutations; meant for the
// desk-scale orders (n <= 9 or so) the rest of the library works at.

#include <cstdint>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Minimum adjacency encoding over all permutations consistent with the
// iterated degree refinement. Equal keys <=> isomorphic (same n).
std::vector<std::uint64_t> canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Every graph on n vertices, exactly once up to isomorphism (n <= 7).
std::vector<Graph> enumerate_all_graphs(int n);

// Every connected bipartite graph on n vertices, once up to isomorphism.
// Refuses n > 7; larger orders come in via graph6 files instead.
std::vector<Graph> enumerate_connected_bipartite(int n);

}  // namespace grundy
