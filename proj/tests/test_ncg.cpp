#include <algorithm>
#include <map>
#include <numeric>

#include <stdexcept>

#include "doctest.h"
#include "gncg/errors.hpp"
#include "gncg/ncg.hpp"
#include "gncg/numthy.hpp"
#include "gncg/recognition.hpp"
#include "oracles.hpp"

using namespace gncg;

namespace {

SubgroupRef first_of_order(const FiniteGroup& g, std::uint64_t order) {
  for (const auto& s : all_subgroups(g))
    if (s.order() == order) return s;
  throw std::logic_error("no subgroup of that order");
}

std::vector<std::size_t> component_sizes(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.components()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Z4 with the order-2 subgroup is a path centred on the involution") {
  const auto g = build_gncg_cyclic(4, 2);
  REQUIRE(g.graph.vertex_count() == 3);
  CHECK(is_isomorphic(g.graph, make::path(3)));
  CHECK(g.graph.degree(1) == 2);  // element 2
  CHECK(g.vertices[1].order == 2);
  CHECK(g.vertices[1].in_h);
  CHECK_FALSE(g.vertices[0].in_h);
}

TEST_CASE("Z4 with H = G is a triangle") {
  CHECK(build_gncg_cyclic(4, 4).graph.same_edges(make::complete(3)));
}

TEST_CASE("Z6 with H of order 2") {
  const auto g = build_gncg_cyclic(6, 2);
  // vertex v is element v + 1
  CHECK(g.graph.edges() == std::vector<Edge>{{0, 2}, {2, 4}});
  CHECK(g.graph.degree(1) == 0);
  CHECK(g.graph.degree(3) == 0);
}

TEST_CASE("trivial subgroup and foreign subgroup are rejected") {
  const auto z6 = FiniteGroup::cyclic(6);
  CHECK_THROWS_AS(build_gncg(z6, trivial_subgroup(z6)), std::invalid_argument);
  const auto z4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(build_gncg(z6, whole_group(z4)), std::invalid_argument);
  CHECK_THROWS_AS(build_gncg_cyclic(6, 1), std::invalid_argument);
}

TEST_CASE("adjacency matches the definition on catalog groups") {
  for (const auto& [name, grp] : named_catalog("all")) {
    if (grp.order() > 24) continue;
    for (const auto& h : all_subgroups(grp)) {
      if (h.is_trivial()) continue;
      const auto g = build_gncg(grp, h);
      REQUIRE(g.graph.vertex_count() == grp.order() - 1);
      for (Vertex a = 0; a < g.vertices.size(); ++a) {
        const ElementId x = a + 1;
        REQUIRE(g.vertices[a].element == x);
        REQUIRE(g.vertices[a].order == grp.element_order(x));
        REQUIRE(g.vertices[a].in_h == h.contains(x));
        for (Vertex b = a + 1; b < g.vertices.size(); ++b) {
          const ElementId y = b + 1;
          const bool want = std::gcd(grp.element_order(x), grp.element_order(y)) != 1 &&
                            (h.contains(x) || h.contains(y));
          REQUIRE(g.graph.adjacent(a, b) == want);
        }
      }
    }
  }
}

TEST_CASE("same-order vertices are twins") {
  // Cyclic: order decides membership, so equal order alone gives twins.
  for (std::uint64_t n = 3; n <= 60; ++n)
    for (auto h : numthy::divisors(n)) {
      if (h < 2) continue;
      const auto g = build_gncg_cyclic(n, h);
      for (Vertex a = 0; a < g.vertices.size(); ++a)
        for (Vertex b = a + 1; b < g.vertices.size(); ++b)
          if (g.vertices[a].order == g.vertices[b].order) {
            REQUIRE(g.graph.degree(a) == g.graph.degree(b));
            REQUIRE(oracle::twins_by_definition(g.graph, a, b));
          }
    }
  // General groups: equal order and equal membership.
  for (const auto& [name, grp] : named_catalog("all")) {
    if (grp.order() > 24) continue;
    for (const auto& h : all_subgroups(grp)) {
      if (h.is_trivial()) continue;
      const auto g = build_gncg(grp, h);
      for (Vertex a = 0; a < g.vertices.size(); ++a)
        for (Vertex b = a + 1; b < g.vertices.size(); ++b)
          if (g.vertices[a].order == g.vertices[b].order && g.vertices[a].in_h == g.vertices[b].in_h)
            REQUIRE(are_twins(g.graph, a, b));
    }
  }
}

TEST_CASE("dominance: an H-element beats a non-H element with the same prime set") {
  for (std::uint64_t n = 3; n <= 120; ++n)
    for (auto h : numthy::divisors(n)) {
      if (h < 2) continue;
      const auto g = build_gncg_cyclic(n, h);
      for (Vertex a = 0; a < g.vertices.size(); ++a)
        for (Vertex b = 0; b < g.vertices.size(); ++b) {
          const auto& x = g.vertices[a];
          const auto& y = g.vertices[b];
          if (x.in_h && !y.in_h && numthy::theta(x.order) == numthy::theta(y.order))
            REQUIRE(g.graph.degree(a) > g.graph.degree(b));
        }
    }
}

TEST_CASE("p-subgroup clique and biclique structure") {
  for (std::uint64_t n = 3; n <= 120; ++n)
    for (auto h : numthy::divisors(n)) {
      if (h < 2 || !numthy::is_prime_power(h)) continue;
      const auto g = build_gncg_cyclic(n, h);
      std::vector<Vertex> in, out;
      for (Vertex v = 0; v < g.vertices.size(); ++v) (g.vertices[v].in_h ? in : out).push_back(v);
      for (auto a : in)
        for (auto b : in)
          if (a != b) REQUIRE(g.graph.adjacent(a, b));
      for (auto a : out)
        for (auto b : out) REQUIRE_FALSE(g.graph.adjacent(a, b));
      if (numthy::is_prime_power(n) && h < n)
        for (auto a : in)
          for (auto b : out) REQUIRE(g.graph.adjacent(a, b));
    }
}

TEST_CASE("tagged coprime graph of Z6 with the order-3 subgroup") {
  const auto z6 = FiniteGroup::cyclic(6);
  const auto t = build_tagged_coprime(z6, cyclic_subgroup_of_order(z6, 3));
  CHECK(t.loops() == std::vector<Vertex>{0});
  for (Vertex v = 0; v < 6; ++v) CHECK(t.adjacent(0, v));
  std::vector<Edge> extra;
  for (Vertex a = 1; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (t.adjacent(a, b)) extra.push_back({a, b});
  CHECK(extra == std::vector<Edge>{{2, 3}, {3, 4}});
  std::vector<Vertex> tags;
  for (Vertex v = 0; v < 6; ++v)
    if (t.tagged(v)) tags.push_back(v);
  CHECK(tags == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("tagged coprime graph of a p-group is a looped star") {
  for (const char* name : {"Z8", "Z9", "Q8", "D4", "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z27"}) {
    const auto grp = catalog_group(name);
    for (const auto& h : all_subgroups(grp)) {
      const auto t = build_tagged_coprime(grp, h);
      CAPTURE(name);
      REQUIRE(t.loops() == std::vector<Vertex>{0});
      REQUIRE(t.edge_count() == grp.order());  // n-1 spokes plus the loop
      for (Vertex v = 1; v < grp.order(); ++v) REQUIRE(t.adjacent(0, v));
      REQUIRE(t.tags().count() == h.order());
      REQUIRE(t.tagged(0));
      if (h.is_whole_group())
        REQUIRE(recover_gncg(t).graph.same_edges(make::complete(grp.order() - 1)));
    }
  }
}

TEST_CASE("recovery round trip") {
  const auto z6 = FiniteGroup::cyclic(6);
  const auto h3 = cyclic_subgroup_of_order(z6, 3);
  CHECK(recover_gncg(build_tagged_coprime(z6, h3)) == build_gncg(z6, h3));
  CHECK(is_isomorphic(recover_gncg(build_tagged_coprime(FiniteGroup::cyclic(4), cyclic_subgroup_of_order(4, 2))).graph,
                      make::path(3)));
  for (const auto& [name, grp] : named_catalog("all")) {
    if (grp.order() > 64) continue;
    for (const auto& h : all_subgroups(grp)) {
      if (h.is_trivial()) continue;
      CAPTURE(name);
      REQUIRE(recover_gncg(build_tagged_coprime(grp, h)) == build_gncg(grp, h));
    }
  }
}

TEST_CASE("recovery rejects graphs without exactly one loop") {
  LoopedTaggedGraph none({{0, 1}, {1, 2}});
  CHECK_THROWS_AS(recover_gncg(none), MalformedInput);
  LoopedTaggedGraph two({{0, 1}, {1, 1}});
  two.join(0, 0);
  two.join(1, 1);
  CHECK_THROWS_AS(recover_gncg(two), MalformedInput);
}

TEST_CASE("categorical product") {
  const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  const auto t2 = build_tagged_coprime(z2, whole_group(z2));
  const auto t3 = build_tagged_coprime(z3, whole_group(z3));
  const auto p = categorical_product(t2, t3);
  const FiniteGroup fs[] = {z2, z3};
  const auto z2z3 = FiniteGroup::direct_product(fs);
  CHECK(p == build_tagged_coprime(z2z3, whole_group(z2z3)));
  CHECK(p.loops() == std::vector<Vertex>{0});

  // Z6 itself: match through element orders, which pair up under the bijection.
  const auto z6 = FiniteGroup::cyclic(6);
  const auto t6 = build_tagged_coprime(z6, whole_group(z6));
  std::vector<std::uint64_t> orders_p, orders_6;
  for (const auto& v : p.vertices()) orders_p.push_back(v.order);
  for (const auto& v : t6.vertices()) orders_6.push_back(v.order);
  std::sort(orders_p.begin(), orders_p.end());
  std::sort(orders_6.begin(), orders_6.end());
  CHECK(orders_p == orders_6);
  CHECK(p.edge_count() == t6.edge_count());

  // A single looped tagged vertex is a unit.
  LoopedTaggedGraph unit({{0, 1}});
  unit.join(0, 0);
  unit.tag(0);
  const auto z4 = FiniteGroup::cyclic(4);
  const auto t4 = build_tagged_coprime(z4, cyclic_subgroup_of_order(z4, 2));
  const auto q = categorical_product(unit, t4);
  for (Vertex a = 0; a < 4; ++a) {
    CHECK(q.tagged(a) == t4.tagged(a));
    for (Vertex b = 0; b < 4; ++b) CHECK(q.adjacent(a, b) == t4.adjacent(a, b));
  }
}

TEST_CASE("EPPO predictions") {
  const auto s3 = symmetric_group(3);
  for (const auto& h : all_subgroups(s3)) {
    if (h.is_trivial()) continue;
    const auto pred = eppo_prediction(s3, h);
    CHECK(is_isomorphic(pred.graph, build_gncg(s3, h).graph));
  }
  const auto pred = eppo_prediction(s3, first_of_order(s3, 2));
  CHECK(component_sizes(pred.graph) == std::vector<std::size_t>{1, 1, 3});
  REQUIRE(pred.parts.size() == 2);
  CHECK(pred.parts[0].n_p == 3);
  CHECK(pred.parts[0].m_p == 2);
  CHECK(pred.parts[1].n_p == 2);
  CHECK(pred.parts[1].m_p == 2);

  const auto z8 = FiniteGroup::cyclic(8);
  CHECK(is_isomorphic(eppo_prediction(z8, cyclic_subgroup_of_order(z8, 2)).graph, make::star(6)));

  const auto a4 = alternating_group(4);
  const auto sylow3 = eppo_prediction(a4, first_of_order(a4, 3));
  CHECK(sylow3.parts[0].n_p == 3);
  CHECK(sylow3.parts[0].m_p == 3);
  CHECK(sylow3.parts[1].n_p == 8);
  CHECK(sylow3.parts[1].m_p == 6);

  const auto z9 = FiniteGroup::cyclic(9);
  CHECK(is_isomorphic(eppo_prediction(z9, cyclic_subgroup_of_order(z9, 3)).graph,
                      make::complete_minus_clique(8, 6)));

  CHECK_THROWS_AS(eppo_prediction(FiniteGroup::cyclic(6), whole_group(FiniteGroup::cyclic(6))),
                  std::invalid_argument);
}

TEST_CASE("GK graphs") {
  const auto z6 = gk_graph(FiniteGroup::cyclic(6));
  CHECK(z6.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(z6.graph.edge_count() == 1);
  CHECK(gk_graph(symmetric_group(3)).graph.edge_count() == 0);
  CHECK(gk_graph(FiniteGroup::cyclic(30)).graph.same_edges(make::complete(3)));
  CHECK(gk_graph(alternating_group(4)).graph.edge_count() == 0);
  CHECK(gk_graph(symmetric_group(4)).graph.edge_count() == 0);
}

TEST_CASE("commuting graphs") {
  const auto s3 = symmetric_group(3);
  const auto c = commuting_graph(s3);
  CHECK(c.vertex_count() == 5);
  CHECK(component_sizes(c) == std::vector<std::size_t>{1, 1, 1, 2});
  for (const auto& comp : c.components())
    if (comp.size() == 2)
      for (auto v : comp) CHECK(s3.element_order(std::stoul(c.label(v))) == 3);

  CHECK(commuting_graph(FiniteGroup::cyclic(12)).vertex_count() == 0);

  const auto a4 = alternating_group(4);
  const auto ca = commuting_graph(a4);
  CHECK(component_sizes(ca) == std::vector<std::size_t>{2, 2, 2, 2, 3});
  for (const auto& comp : ca.components())
    if (comp.size() == 3)
      for (auto v : comp) CHECK(a4.element_order(std::stoul(ca.label(v))) == 2);
}
