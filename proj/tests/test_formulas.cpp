#include <doctest.h>

#include "grundy/constructions.hpp"
#include "grundy/formulas.hpp"
#include "grundy/iso.hpp"
#include "grundy/solver.hpp"
#include "oracles.hpp"

using namespace grundy;

TEST_CASE("path and cycle base formulas") {
  CHECK(gamma_t_path(2) == 2);
  CHECK(gamma_t_path(6) == 6);
  CHECK(gamma_t_path(5) == 4);
  CHECK(gamma_t_cycle(6) == 4);
  CHECK(gamma_t_cycle(7) == 6);
  CHECK_THROWS_AS(gamma_t_path(1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_t_cycle(2), std::invalid_argument);
}

TEST_CASE("predict: exact formulas") {
  CHECK(predict(ProductKind::Direct, {Family::Path, 4}, {Family::Path, 6}).lower == 24);
  CHECK(predict(ProductKind::Direct, {Family::Path, 4}, {Family::Path, 6}).formula_exact());
  CHECK(predict(ProductKind::Lexicographic, {Family::Cycle, 5}, {Family::Cycle, 4}).lower ==
        5);
  BoundReport square = predict(ProductKind::Cartesian, {Family::Path, 4}, {Family::Path, 4});
  CHECK(square.formula_exact());
  CHECK(square.lower == 12);
}

TEST_CASE("predict: bracketing bounds") {
  BoundReport s = predict(ProductKind::Strong, {Family::Path, 3}, {Family::Path, 4});
  CHECK(s.lower == 8);
  CHECK(s.upper == 9);
  CHECK(s.status() == BoundStatus::SolverUnavailable);
  s.attach_exact(8);
  CHECK(s.status() == BoundStatus::Gap);
  CHECK_THROWS_AS(s.attach_exact(10), std::logic_error);

  BoundReport c = predict(ProductKind::Cartesian, {Family::Cycle, 3}, {Family::Cycle, 3});
  CHECK(c.lower == 3);
  CHECK(c.upper == 6);
}

TEST_CASE("predict refuses out-of-hypothesis parameters by name") {
  CHECK_THROWS_WITH_AS(predict(ProductKind::Lexicographic, {Family::Path, 2},
                               {Family::Path, 4}),
                       doctest::Contains("k odd or k even with k != 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(predict(ProductKind::Strong, {Family::Path, 2}, {Family::Path, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict(ProductKind::Direct, {Family::Cycle, 2}, {Family::Path, 4}),
                  std::invalid_argument);
}

TEST_CASE("vertex cover and independence numbers") {
  CHECK(vertex_cover_number(path(4)) == 2);
  CHECK(vertex_cover_number(cycle(6)) == 3);
  CHECK(independence_number(tree_t8()) == 5);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      int beta = vertex_cover_number(g);
      CHECK(beta == oracles::naive_min_vertex_cover(g));
      CHECK(independence_number(g) + beta == g.n);
    }
  }
  CHECK_THROWS_AS(vertex_cover_number(path(25)), SearchCapExceeded);
}

TEST_CASE("biclique cover and partition numbers") {
  CHECK(biclique_cover_number(complete_bipartite(3, 3)) == 1);
  CHECK(biclique_cover_number(path(4)) == 2);
  CHECK(biclique_cover_number(path(1)) == 0);
  CHECK(biclique_cover_number(complete(3)) == 2);

  // on trees, cover = partition = vertex cover number
  std::mt19937 rng(424242);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      Graph t = oracles::random_tree(n, rng);
      int beta = vertex_cover_number(t);
      CHECK(biclique_cover_number(t) == beta);
      CHECK(biclique_partition_number(t) == beta);
    }
  }

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      CHECK(biclique_cover_number(g) <= biclique_partition_number(g));

  CHECK_THROWS_AS(biclique_cover_number(complete(7)), SearchCapExceeded);
}

TEST_CASE("skew forcing closure and Z-") {
  // endpoints force inward along a path, starting from nothing
  CHECK(skew_forcing_closure(path(4), VertexSet(4)) == VertexSet::full(4));
  CHECK(skew_zero_forcing_number(path(4)) == 0);
  CHECK(skew_zero_forcing_number(cycle(6)) == 2);
  CHECK(skew_zero_forcing_number(complete_bipartite(3, 4)) == 5);
  CHECK(skew_zero_forcing_number(complete(1)) == 1);

  // consistency with the total invariant: gamma_t = n - Z-
  std::vector<Graph> pool = {path(4), cycle(6), complete_bipartite(3, 4), tree_t8(),
                             complete(4), star(6)};
  for (int n = 1; n <= 6; ++n)
    for (Graph& g : enumerate_all_graphs(n))
      if (is_connected(g)) pool.push_back(std::move(g));
  for (const Graph& g : pool)
    CHECK(solve(g, Variant::Total).value == g.n - skew_zero_forcing_number(g));

  CHECK_THROWS_AS(skew_zero_forcing_number(path(21)), SearchCapExceeded);
}

TEST_CASE("bc upper bound on the total invariant") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      if (g.edge_count() <= 16)
        CHECK(solve(g, Variant::Total).value <= 2 * biclique_cover_number(g));
}

TEST_CASE("lexicographic independence lower bound") {
  std::vector<std::pair<Graph, Graph>> pairs = {{path(4), path(2)},
                                                {cycle(5), path(3)},
                                                {tree_t8(), path(2)},
                                                {star(4), cycle(4)}};
  for (auto& [g, h] : pairs) {
    int lhs = solve(lexicographic_product(g, h).graph, Variant::Total).value;
    CHECK(lhs >= independence_number(g) * solve(h, Variant::Total).value);
  }
}

TEST_CASE("predictions agree with the solver on small products") {
  std::vector<FactorSpec> factors = {{Family::Path, 3},  {Family::Path, 4},
                                     {Family::Path, 5},  {Family::Cycle, 3},
                                     {Family::Cycle, 4}, {Family::Cycle, 5}};
  for (ProductKind kind : {ProductKind::Direct, ProductKind::Lexicographic,
                           ProductKind::Strong, ProductKind::Cartesian}) {
    for (FactorSpec fg : factors) {
      for (FactorSpec fh : factors) {
        BoundReport r;
        try {
          r = predict(kind, fg, fh);
        } catch (const std::invalid_argument&) {
          continue;  // outside the statement's hypotheses
        }
        Graph pg = build_factor(fg), ph = build_factor(fh);
        if (pg.n * ph.n > kDefaultSearchCap) continue;
        int exact = solve(make_product(kind, pg, ph).graph, Variant::Total).value;
        CAPTURE(product_kind_name(kind));
        CAPTURE(fg.size);
        CAPTURE(fh.size);
        CHECK(r.lower <= exact);
        CHECK(exact <= r.upper);
        r.attach_exact(exact);
        if (r.formula_exact()) CHECK(r.status() == BoundStatus::Tight);
      }
    }
  }
}
