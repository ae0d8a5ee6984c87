#pragma once

// Grundy edge-cover sequences on hypergraphs, the hypergraph product, and
// the incidence-bipartite reduction. rho_gr is kept as an implementation
// independent of the graph solver so the two can cross-check each other.

#include <iosfwd>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

namespace grundy {

struct Hypergraph {
  int ground = 0;                // ground-set size
  std::vector<VertexSet> edges;  // duplicates permitted, kept distinct
};

struct RhoResult {
  int value = 0;
  std::vector<int> witness_edges;  // indices into edges
  SearchStats stats;
};

// Longest sequence of hyperedges, each containing a ground element outside
// the union of its predecessors. Empty edges are never legal choices.
RhoResult rho_gr(const Hypergraph& h);

Hypergraph neighborhood_hypergraph(const Graph& g, bool closed);

// Ground m1*m2 with row-major indexing; one edge E1 x E2 per pair,
// empty factors included.
Hypergraph hypergraph_product(const Hypergraph& a, const Hypergraph& b);

// Vertices 0..m-1 are ground elements, m..m+k-1 the edges; ground v is
// adjacent to edge e iff v lies in e.
Graph incidence_bipartite(const Hypergraph& h);

// Text format: first line "m k", then k lines of space-separated ground
// indices; an empty line is an empty edge.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_text(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);

}  // namespace grundy
