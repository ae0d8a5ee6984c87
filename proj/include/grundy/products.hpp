#pragma once

// The four standard graph products with the row-major coordinate map
// (a,b) -> a*n_h + b, fixed so witness sequences are reproducible.

#include <string_view>
#include <utility>

#include "grundy/graph.hpp"

namespace grundy {

enum class ProductKind { Direct, Lexicographic, Strong, Cartesian };

std::string_view product_kind_name(ProductKind kind);
ProductKind product_kind_from_name(std::string_view name);

struct ProductGraph {
  Graph graph;
  int n_g = 0, n_h = 0;
  ProductKind kind = ProductKind::Direct;

  int index(int a, int b) const { return a * n_h + b; }
  std::pair<int, int> coords(int v) const { return {v / n_h, v % n_h}; }
};

ProductGraph direct_product(const Graph& g, const Graph& h);
ProductGraph lexicographic_product(const Graph& g, const Graph& h);
ProductGraph strong_product(const Graph& g, const Graph& h);
ProductGraph cartesian_product(const Graph& g, const Graph& h);
ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h);

// Coordinate slices: all (.,h) respectively all (g,.).
VertexSet g_layer(const ProductGraph& p, int h);
VertexSet h_layer(const ProductGraph& p, int g);

}  // namespace grundy
