#include "grundy/products.hpp"

#include <stdexcept>

namespace grundy {

std::string_view product_kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::Direct: return "direct";
    case ProductKind::Lexicographic: return "lexicographic";
    case ProductKind::Strong: return "strong";
    case ProductKind::Cartesian: return "cartesian";
  }
  return "?";
}

ProductKind product_kind_from_name(std::string_view name) {
  if (name == "direct") return ProductKind::Direct;
  if (name == "lexicographic" || name == "lex") return ProductKind::Lexicographic;
  if (name == "strong") return ProductKind::Strong;
  if (name == "cartesian") return ProductKind::Cartesian;
  throw std::invalid_argument("unknown product kind: " + std::string(name));
}

namespace {

std::string coord_label(const Graph& g, int v) {
  if (!g.labels.empty() && !g.labels[v].empty()) return g.labels[v];
  return std::to_string(v);
}

ProductGraph build(ProductKind kind, const Graph& g, const Graph& h) {
  if (g.n < 1 || h.n < 1) throw std::invalid_argument("product factors must be nonempty");
  ProductGraph p;
  p.kind = kind;
  p.n_g = g.n;
  p.n_h = h.n;
  p.graph = Graph(g.n * h.n);
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < h.n; ++b) {
      int v = p.index(a, b);
      for (int a2 = a; a2 < g.n; ++a2) {
        int b2first = (a2 == a) ? b + 1 : 0;
        for (int b2 = b2first; b2 < h.n; ++b2) {
          bool eg = g.has_edge(a, a2);
          bool eh = h.has_edge(b, b2);
          bool same_g = a == a2;
          bool same_h = b == b2;
          bool adjacent = false;
          switch (kind) {
            case ProductKind::Direct: adjacent = eg && eh; break;
            case ProductKind::Lexicographic: adjacent = eg || (same_g && eh); break;
            case ProductKind::Strong:
              adjacent = (eg && same_h) || (same_g && eh) || (eg && eh);
              break;
            case ProductKind::Cartesian:
              adjacent = (eg && same_h) || (same_g && eh);
              break;
          }
          if (adjacent) p.graph.add_edge(v, p.index(a2, b2));
        }
      }
    }
  }
  p.graph.labels.resize(p.graph.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < h.n; ++b)
      p.graph.labels[p.index(a, b)] = "(" + coord_label(g, a) + "," + coord_label(h, b) + ")";
  return p;
}

}  // namespace

ProductGraph direct_product(const Graph& g, const Graph& h) {
  return build(ProductKind::Direct, g, h);
}
ProductGraph lexicographic_product(const Graph& g, const Graph& h) {
  return build(ProductKind::Lexicographic, g, h);
}
ProductGraph strong_product(const Graph& g, const Graph& h) {
  return build(ProductKind::Strong, g, h);
}
ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  return build(ProductKind::Cartesian, g, h);
}
ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h) {
  return build(kind, g, h);
}

VertexSet g_layer(const ProductGraph& p, int h) {
  if (h < 0 || h >= p.n_h) throw std::invalid_argument("layer coordinate out of range");
  VertexSet s(p.graph.n);
  for (int a = 0; a < p.n_g; ++a) s.set(p.index(a, h));
  return s;
}

VertexSet h_layer(const ProductGraph& p, int g) {
  if (g < 0 || g >= p.n_g) throw std::invalid_argument("layer coordinate out of range");
  VertexSet s(p.graph.n);
  for (int b = 0; b < p.n_h; ++b) s.set(p.index(g, b));
  return s;
}

}  // namespace grundy
