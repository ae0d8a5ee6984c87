#include <doctest.h>

#include "grundy/iso.hpp"

using namespace grundy;

TEST_CASE("canonical keys identify isomorphic relabelings") {
  Graph a = path(4);
  Graph b(4);  // same path, vertices permuted
  b.add_edge(2, 0);
  b.add_edge(0, 3);
  b.add_edge(3, 1);
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(path(5), cycle(5)));
  CHECK_FALSE(is_isomorphic(star(4), path(4)));
  CHECK(is_isomorphic(complete_bipartite(2, 2), cycle(4)));
}

TEST_CASE("enumeration counts by order") {
  // 1, 2, 4, 11, 34, 156, 1044 graphs; 1, 1, 1, 3, 5, 17, 44 connected bipartite
  std::vector<std::size_t> all_expected = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_all_graphs(n).size() == all_expected[n - 1]);

  std::vector<std::size_t> bip_expected = {1, 1, 1, 3, 5, 17, 44};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_connected_bipartite(n).size() == bip_expected[n - 1]);
}

TEST_CASE("enumerated graphs are pairwise nonisomorphic at small n") {
  auto graphs = enumerate_all_graphs(5);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(is_isomorphic(graphs[i], graphs[j]));
}
