#include "gncg/ncg.hpp"

#include <numeric>
#include <stdexcept>

#include "gncg/errors.hpp"
#include "gncg/numthy.hpp"

namespace gncg {

std::vector<std::uint64_t> NcGraph::orders_of(std::span<const Vertex> vs) const {
  std::vector<std::uint64_t> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(vertices.at(v).order);
  return out;
}

namespace {

void check_same_group(const FiniteGroup& g, const SubgroupRef& h) {
  if (h.group().order() != g.order() || h.group().name() != g.name())
    throw std::invalid_argument("subgroup does not belong to group " + g.name());
}

}  // namespace

NcGraph build_gncg(const FiniteGroup& g, const SubgroupRef& h) {
  check_same_group(g, h);
  if (g.order() < 2) throw std::invalid_argument("the group must have at least two elements");
  if (h.is_trivial()) throw std::invalid_argument("H must not be the trivial subgroup");

  NcGraph out;
  out.group_order = g.order();
  out.subgroup_order = h.order();
  out.group_name = g.name();
  out.source = h;
  std::vector<std::string> labels;
  for (ElementId x = 1; x < g.order(); ++x) {
    out.vertices.push_back({x, g.element_order(x), h.contains(x)});
    labels.push_back(std::to_string(x));
  }
  out.graph = SimpleGraph(std::move(labels));
  const auto& vs = out.vertices;
  for (Vertex a = 0; a < vs.size(); ++a)
    for (Vertex b = a + 1; b < vs.size(); ++b)
      if ((vs[a].in_h || vs[b].in_h) && std::gcd(vs[a].order, vs[b].order) != 1)
        out.graph.add_edge(a, b);
  return out;
}

NcGraph build_gncg_cyclic(std::uint64_t n, std::uint64_t h) {
  return build_gncg(cyclic_subgroup_of_order(n, h));
}

// ---------------------------------------------------------------------------

LoopedTaggedGraph::LoopedTaggedGraph(std::vector<TaggedVertex> vertices)
    : vertices_(std::move(vertices)),
      adj_(vertices_.size(), Bits(vertices_.size())),
      tags_(vertices_.size()) {}

void LoopedTaggedGraph::join(Vertex u, Vertex v) {
  adj_.at(u).set(v);
  adj_.at(v).set(u);
}

std::vector<Vertex> LoopedTaggedGraph::loops() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (has_loop(v)) out.push_back(v);
  return out;
}

std::size_t LoopedTaggedGraph::edge_count() const {
  std::size_t twice = 0, loops = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    twice += adj_[v].count();
    if (has_loop(v)) ++loops;
  }
  return (twice - loops) / 2 + loops;
}

LoopedTaggedGraph build_tagged_coprime(const FiniteGroup& g, const SubgroupRef& h) {
  check_same_group(g, h);
  std::vector<TaggedVertex> vs;
  for (ElementId x = 0; x < g.order(); ++x) vs.push_back({x, g.element_order(x)});
  LoopedTaggedGraph t(vs);
  for (Vertex a = 0; a < vs.size(); ++a) {
    if (h.contains(static_cast<ElementId>(a))) t.tag(a);
    for (Vertex b = a; b < vs.size(); ++b)
      if (std::gcd(vs[a].order, vs[b].order) == 1) t.join(a, b);
  }
  return t;
}

LoopedTaggedGraph categorical_product(const LoopedTaggedGraph& t1, const LoopedTaggedGraph& t2) {
  const std::size_t n1 = t1.vertex_count(), n2 = t2.vertex_count();
  std::vector<TaggedVertex> vs;
  vs.reserve(n1 * n2);
  for (const auto& a : t1.vertices())
    for (const auto& b : t2.vertices())
      vs.push_back({static_cast<ElementId>(a.element * n2 + b.element), std::lcm(a.order, b.order)});
  LoopedTaggedGraph p(std::move(vs));
  for (Vertex v = 0; v < n1; ++v)
    for (Vertex x = 0; x < n2; ++x) {
      const Vertex vx = v * n2 + x;
      if (t1.tagged(v) && t2.tagged(x)) p.tag(vx);
      for (Vertex w = 0; w < n1; ++w) {
        if (!t1.adjacent(v, w)) continue;
        for (Vertex y = 0; y < n2; ++y)
          if (t2.adjacent(x, y)) p.join(vx, w * n2 + y);
      }
    }
  return p;
}

NcGraph recover_gncg(const LoopedTaggedGraph& t) {
  const auto loops = t.loops();
  if (loops.size() != 1)
    throw MalformedInput("expected exactly one looped vertex, found " + std::to_string(loops.size()));
  const Vertex identity = loops.front();

  NcGraph out;
  out.group_order = t.vertex_count();
  out.subgroup_order = t.tags().count();
  std::vector<Vertex> kept;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (v == identity) continue;
    kept.push_back(v);
    out.vertices.push_back({t.vertices()[v].element, t.vertices()[v].order, t.tagged(v)});
    labels.push_back(std::to_string(t.vertices()[v].element));
  }
  // Join untagged pairs, forget tags, complement.
  out.graph = SimpleGraph(std::move(labels));
  for (Vertex a = 0; a < kept.size(); ++a)
    for (Vertex b = a + 1; b < kept.size(); ++b) {
      const bool joined =
          t.adjacent(kept[a], kept[b]) || (!t.tagged(kept[a]) && !t.tagged(kept[b]));
      if (!joined) out.graph.add_edge(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------

EppoPrediction eppo_prediction(const FiniteGroup& g, const SubgroupRef& h) {
  check_same_group(g, h);
  if (!is_eppo(g)) throw std::invalid_argument(g.name() + " is not an EPPO group");
  EppoPrediction pred;
  std::vector<SimpleGraph> pieces;
  std::size_t missing = 0;
  for (const auto& [p, e] : numthy::factorize(g.order())) {
    EppoPart part{p, 0, 0};
    for (ElementId x = 1; x < g.order(); ++x) {
      if (g.element_order(x) % p != 0) continue;  // prime-power orders: p | |x| means p-element
      ++part.n_p;
      if (!h.contains(x)) ++part.m_p;
    }
    if (part.m_p > 0) ++missing;
    pieces.push_back(make::complete_minus_clique(part.n_p, part.m_p));
    pred.parts.push_back(part);
  }
  pred.graph = disjoint_union(pieces);
  pred.corollary_connected = missing <= 1;
  return pred;
}

GkGraph gk_graph(const FiniteGroup& g) {
  GkGraph gk;
  for (const auto& pp : numthy::factorize(g.order())) gk.primes.push_back(pp.prime);
  std::vector<std::string> labels;
  for (auto p : gk.primes) labels.push_back(std::to_string(p));
  gk.graph = SimpleGraph(std::move(labels));
  for (Vertex i = 0; i < gk.primes.size(); ++i)
    for (Vertex j = i + 1; j < gk.primes.size(); ++j) {
      const auto pq = gk.primes[i] * gk.primes[j];
      for (ElementId x = 1; x < g.order(); ++x)
        if (g.element_order(x) % pq == 0) {
          gk.graph.add_edge(i, j);
          break;
        }
    }
  return gk;
}

SimpleGraph commuting_graph(const FiniteGroup& g) {
  const SubgroupRef z = centre(g);
  std::vector<ElementId> elems;
  std::vector<std::string> labels;
  for (ElementId x = 0; x < g.order(); ++x)
    if (!z.contains(x)) {
      elems.push_back(x);
      labels.push_back(std::to_string(x));
    }
  SimpleGraph cg(std::move(labels));
  for (Vertex a = 0; a < elems.size(); ++a)
    for (Vertex b = a + 1; b < elems.size(); ++b)
      if (g.multiply(elems[a], elems[b]) == g.multiply(elems[b], elems[a])) cg.add_edge(a, b);
  return cg;
}

}  // namespace gncg
