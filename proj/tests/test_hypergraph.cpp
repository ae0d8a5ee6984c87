#include <doctest.h>

#include <iostream>
#include <set>

#include "grundy/hypergraph.hpp"
#include "grundy/iso.hpp"
#include "grundy/products.hpp"
#include "oracles.hpp"

using namespace grundy;

TEST_CASE("rho on hand-checked hypergraphs") {
  // open neighborhoods of P_4: sequence length equals the total invariant
  Hypergraph p4 = neighborhood_hypergraph(path(4), false);
  CHECK(rho_gr(p4).value == 4);

  Hypergraph single{2, {VertexSet::of(2, {0, 1})}};
  CHECK(rho_gr(single).value == 1);

  Hypergraph chain{3,
                   {VertexSet::of(3, {0}), VertexSet::of(3, {0, 1}),
                    VertexSet::of(3, {0, 1, 2})}};
  RhoResult r = rho_gr(chain);
  CHECK(r.value == 3);
  CHECK(r.witness_edges == std::vector<int>{0, 1, 2});

  Hypergraph empty_edges{3, {VertexSet(3), VertexSet(3)}};
  CHECK(rho_gr(empty_edges).value == 0);

  Hypergraph wide{70, {VertexSet(70)}};
  CHECK_THROWS_AS(rho_gr(wide), std::invalid_argument);
}

TEST_CASE("neighborhood hypergraphs") {
  Hypergraph open_k2 = neighborhood_hypergraph(path(2), false);
  CHECK(open_k2.edges == std::vector<VertexSet>{VertexSet::of(2, {1}),
                                                VertexSet::of(2, {0})});
  Hypergraph closed_k2 = neighborhood_hypergraph(path(2), true);
  CHECK(closed_k2.edges == std::vector<VertexSet>{VertexSet::of(2, {0, 1}),
                                                  VertexSet::of(2, {0, 1})});
  Hypergraph open_c5 = neighborhood_hypergraph(cycle(5), false);
  for (const VertexSet& e : open_c5.edges) CHECK(e.count() == 2);
}

TEST_CASE("hypergraph product") {
  Hypergraph a{2, {VertexSet::of(2, {0, 1})}};
  Hypergraph p = hypergraph_product(a, a);
  REQUIRE(p.edges.size() == 1);
  CHECK(p.ground == 4);
  CHECK(p.edges[0].count() == 4);

  // open neighborhoods multiply into the direct product's neighborhoods
  Graph g = path(3);
  Hypergraph prod = hypergraph_product(neighborhood_hypergraph(g, false),
                                       neighborhood_hypergraph(g, false));
  Hypergraph target = neighborhood_hypergraph(direct_product(g, g).graph, false);
  auto keyset = [](const Hypergraph& h) {
    std::multiset<std::vector<int>> s;
    for (const VertexSet& e : h.edges) s.insert(e.bits());
    return s;
  };
  CHECK(keyset(prod) == keyset(target));

  Hypergraph p3p2 = hypergraph_product(neighborhood_hypergraph(path(3), false),
                                       neighborhood_hypergraph(path(2), false));
  CHECK(rho_gr(p3p2).value == 4);
  // ... which is gamma_t(P_3 x P_2), confirmed by exhaustive recursion
  CHECK(oracles::naive_grundy(direct_product(path(3), path(2)).graph,
                              Variant::Total) == 4);
}

TEST_CASE("incidence bipartite graphs") {
  Hypergraph single{2, {VertexSet::of(2, {0, 1})}};
  CHECK(is_isomorphic(incidence_bipartite(single), path(3)));

  Hypergraph two{2, {VertexSet::of(2, {0}), VertexSet::of(2, {1})}};
  CHECK(is_isomorphic(incidence_bipartite(two), disjoint_union(path(2), path(2))));

  // C_4 has duplicated open neighborhoods, so its incidence graph is two
  // 4-cycles rather than one 8-cycle; the odd cycle has no twins.
  Hypergraph c4open = neighborhood_hypergraph(cycle(4), false);
  CHECK(is_isomorphic(incidence_bipartite(c4open), disjoint_union(cycle(4), cycle(4))));
  Hypergraph c5open = neighborhood_hypergraph(cycle(5), false);
  CHECK(is_isomorphic(incidence_bipartite(c5open), cycle(10)));
}

TEST_CASE("incidence reduction: total value splits into rho of the two sides") {
  // In the incidence bipartite graph, edge-vertices see their elements and
  // ground vertices see the edges containing them, so the total invariant
  // is rho of the hypergraph plus rho of its dual.
  auto dual = [](const Hypergraph& h) {
    Hypergraph d;
    d.ground = static_cast<int>(h.edges.size());
    for (int v = 0; v < h.ground; ++v) {
      VertexSet e(d.ground);
      for (int i = 0; i < d.ground; ++i)
        if (h.edges[i].test(v)) e.set(i);
      d.edges.push_back(std::move(e));
    }
    return d;
  };
  std::vector<Hypergraph> pool = {
      neighborhood_hypergraph(path(5), false),
      neighborhood_hypergraph(cycle(6), true),
      neighborhood_hypergraph(tree_t8(), false),
      {3, {VertexSet::of(3, {0}), VertexSet::of(3, {0, 1}), VertexSet::of(3, {0, 1, 2})}},
      {4, {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3}), VertexSet::of(4, {0, 1})}},
  };
  for (const Hypergraph& h : pool) {
    Graph b = incidence_bipartite(h);
    CHECK(solve(b, Variant::Total).value == rho_gr(h).value + rho_gr(dual(h)).value);
  }
}

TEST_CASE("oracle identity: rho of neighborhood hypergraphs equals the solver") {
  std::vector<Graph> pool = {path(7),  cycle(8),  complete(5),
                             star(7),  path(10),  cycle(10),
                             star(10), complete_bipartite(3, 4),
                             complete_bipartite(5, 5), tree_t8()};
  for (int n = 1; n <= 6; ++n)
    for (Graph& g : enumerate_all_graphs(n)) pool.push_back(std::move(g));
  for (const Graph& g : pool) {
    CHECK(rho_gr(neighborhood_hypergraph(g, false)).value ==
          solve(g, Variant::Total).value);
    CHECK(rho_gr(neighborhood_hypergraph(g, true)).value ==
          solve(g, Variant::Closed).value);
  }
}

TEST_CASE("hypergraph-level product conjecture check (finding, not assertion)") {
  std::vector<Graph> factors = {path(2), path(3), path(4), path(5),
                                cycle(4), cycle(6), star(4)};
  std::vector<std::string> findings;
  for (const Graph& g : factors) {
    for (const Graph& h : factors) {
      if (g.n * h.n > 30) continue;
      Hypergraph a = neighborhood_hypergraph(g, false);
      Hypergraph b = neighborhood_hypergraph(h, false);
      int lhs = rho_gr(hypergraph_product(a, b)).value;
      int rhs = rho_gr(a).value * rho_gr(b).value;
      if (lhs != rhs)
        findings.push_back(to_graph6(g) + " x " + to_graph6(h) + ": " +
                           std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
  }
  for (const std::string& f : findings)
    std::cerr << "rho product counterexample candidate: " << f << "\n";
  WARN(findings.empty());
}

TEST_CASE("hypergraph text format") {
  Hypergraph h{4, {VertexSet::of(4, {0, 2}), VertexSet(4), VertexSet::of(4, {1, 2, 3})}};
  std::string text = format_hypergraph(h);
  CHECK(text == "4 3\n0 2\n\n1 2 3\n");
  Hypergraph back = parse_hypergraph_text(text);
  CHECK(back.ground == 4);
  CHECK(back.edges == h.edges);

  CHECK_THROWS_AS(parse_hypergraph_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph_text("2 1\n5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph_text("2 2\n0\n"), std::invalid_argument);
}
