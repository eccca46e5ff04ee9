#include <stdexcept>

#include "doctest.h"
#include "gncg/graph.hpp"
#include "gncg/recognition.hpp"
#include "oracles.hpp"

using namespace gncg;

TEST_CASE("basic construction") {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.label(3) == "3");
  CHECK_THROWS(g.add_edge(2, 2));
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(SimpleGraph(std::vector<std::string>{"a", "a"}), std::invalid_argument);
}

TEST_CASE("edges are sorted pairs") {
  const Edge es[] = {{3, 1}, {0, 2}, {2, 1}};
  const auto g = SimpleGraph::from_edges(4, es);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
}

TEST_CASE("complement and induced") {
  const auto c5 = make::cycle(5);
  const auto cc = c5.complement();
  CHECK(cc.edge_count() == 5);
  CHECK(is_isomorphic(cc, c5));
  CHECK(cc.complement() == c5);

  const Vertex keep[] = {0, 1, 2};
  const auto p = c5.induced(keep);
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.label(2) == "2");

  Bits mask(5);
  mask.set(1);
  mask.set(3);
  CHECK(c5.induced(mask).edge_count() == 0);
}

TEST_CASE("components and degree sequence") {
  const SimpleGraph parts[] = {make::path(3), make::complete(2), make::empty(1)};
  const auto g = disjoint_union(parts);
  CHECK(g.vertex_count() == 6);
  CHECK(g.components().size() == 3);
  CHECK(g.degree_sequence() == std::vector<std::size_t>{2, 1, 1, 1, 1, 0});
  CHECK(g.label(3) == "1.0");
}

TEST_CASE("named graphs") {
  CHECK(make::complete(5).edge_count() == 10);
  CHECK(make::path(5).edge_count() == 4);
  CHECK(make::cycle(6).edge_count() == 6);
  CHECK(make::star(6).vertex_count() == 7);
  CHECK(make::star(6).degree(0) == 6);
  CHECK(make::complete_bipartite(2, 3).edge_count() == 6);
  const auto x = make::complete_minus_clique(8, 6);
  CHECK(x.edge_count() == 28 - 15);
  CHECK(make::complete_minus_clique(7, 6).degree_sequence() == std::vector<std::size_t>{6, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("complement is an involution on every labeled graph up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_labeled_graph(n, [](const SimpleGraph& g) {
      REQUIRE(g.complement().complement() == g);
      REQUIRE(g.edge_count() + g.complement().edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2);
    });
}
