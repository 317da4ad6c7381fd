#include "doctest.h"
#include "toughtree/graph.hpp"
#include "toughtree/invariants.hpp"

using namespace toughtree;

TEST_CASE("constructors validate their input") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), std::invalid_argument);
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
  const Edge out[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
}

TEST_CASE("named families") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(path(6).edge_count() == 5);
  CHECK(cycle(6).edge_count() == 6);
  CHECK_THROWS(cycle(2));
  const Graph s = star(4);
  CHECK(s.order() == 5);
  CHECK(s.degree(0) == 4);
  CHECK(complete_bipartite(3, 4).edge_count() == 12);
}

TEST_CASE("adjacency is symmetric and rows agree with neighbors") {
  const Graph g = build_split_family({2, 3, 4});
  for (Vertex u = 0; u < g.order(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    CHECK(g.neighbors(u).size() == g.degree(u));
  }
}

TEST_CASE("multi-word rows above 64 vertices") {
  const Graph g = cycle(130);
  CHECK(g.edge_count() == 130);
  CHECK(g.adjacent(129, 0));
  CHECK(g.adjacent(64, 65));
  CHECK(g.degree(64) == 2);
  CHECK_FALSE(g.fits_word());
  CHECK(is_connected(g));
}

TEST_CASE("join and disjoint union") {
  const Graph u = disjoint_union(complete(3), path(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(component_count(u) == 2);
  const Graph j = join(empty_graph(2), empty_graph(3));
  CHECK(j == complete_bipartite(2, 3));
  CHECK(join(complete(2), complete(3)) == complete(5));
}

TEST_CASE("split family degrees and size") {
  const Graph g = build_split_family({3, 4, 5});
  CHECK(g.order() == 12);
  CHECK(g.edge_count() == 36);
  for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 11);
  for (Vertex v = 3; v < 7; ++v) CHECK(g.degree(v) == 6);
  for (Vertex v = 7; v < 12; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("extremal parameters") {
  const SplitFamilyParams p = extremal_params(3, 1, 12);
  CHECK(p == SplitFamilyParams{3, 4, 5});
  CHECK(extremal_params(4, 1, 19) == SplitFamilyParams{3, 8, 8});
  CHECK(extremal_params(3, 2, 21) == SplitFamilyParams{6, 7, 8});
  CHECK_THROWS(extremal_params(3, 1, 5));
}

TEST_CASE("split family recognition") {
  const SplitFamilyParams p{3, 4, 5};
  CHECK(match_split_family(build_split_family(p)) == p);

  // Relabelling does not matter.
  std::vector<Vertex> perm{11, 5, 0, 7, 3, 9, 1, 10, 2, 8, 6, 4};
  CHECK(match_split_family(build_split_family(p).relabeled(perm)) == p);

  CHECK(match_split_family(join(complete(2), empty_graph(4))) == SplitFamilyParams{2, 1, 3});
  CHECK_FALSE(match_split_family(cycle(8)));
  CHECK_FALSE(match_split_family(complete(6)));
  CHECK_FALSE(match_split_family(build_split_family({2, 3, 1})));
}

TEST_CASE("induced subgraph and relabel") {
  const Graph g = build_split_family({1, 2, 2});
  const Graph h = g.induced(std::vector<Vertex>{1, 2});
  CHECK(h == complete(2));
  CHECK_THROWS(g.induced(std::vector<Vertex>{1, 1}));
  const Graph r = path(3).relabeled(std::vector<Vertex>{2, 0, 1});
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));
}
