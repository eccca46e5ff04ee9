#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gncg/graph.hpp"
#include "gncg/groups.hpp"

namespace gncg {

struct VertexInfo {
  ElementId element;
  std::uint64_t order;
  bool in_h;
  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

/// Generalized non-coprime graph: vertices are the non-identity elements in
/// index order, a ~ b iff gcd(|a|,|b|) != 1 and a or b lies in H.
struct NcGraph {
  SimpleGraph graph;  // vertex labels are element indices
  std::vector<VertexInfo> vertices;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::string group_name;
  std::optional<SubgroupRef> source;

  /// Orders of the given graph vertices, e.g. for witness reports.
  std::vector<std::uint64_t> orders_of(std::span<const Vertex> vs) const;

  friend bool operator==(const NcGraph& a, const NcGraph& b) {
    return a.graph == b.graph && a.vertices == b.vertices && a.group_order == b.group_order &&
           a.subgroup_order == b.subgroup_order;
  }
};

/// Throws std::invalid_argument for the trivial subgroup, a subgroup of a
/// different group, or |G| < 2.
NcGraph build_gncg(const FiniteGroup& g, const SubgroupRef& h);
inline NcGraph build_gncg(const SubgroupRef& h) { return build_gncg(h.group(), h); }
/// Gamma_{Z_n, Z_h}.
NcGraph build_gncg_cyclic(std::uint64_t n, std::uint64_t h);

struct TaggedVertex {
  ElementId element;
  std::uint64_t order;
  friend bool operator==(const TaggedVertex&, const TaggedVertex&) = default;
};

/// Graph allowing loops, with a tagged vertex subset.
class LoopedTaggedGraph {
 public:
  LoopedTaggedGraph() = default;
  explicit LoopedTaggedGraph(std::vector<TaggedVertex> vertices);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<TaggedVertex>& vertices() const { return vertices_; }
  void join(Vertex u, Vertex v);  // u == v puts a loop
  void tag(Vertex v) { tags_.set(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  bool has_loop(Vertex v) const { return adj_[v].test(v); }
  bool tagged(Vertex v) const { return tags_.test(v); }
  const Bits& tags() const { return tags_; }
  std::vector<Vertex> loops() const;
  std::size_t edge_count() const;  // loops count once

  friend bool operator==(const LoopedTaggedGraph&, const LoopedTaggedGraph&) = default;

 private:
  std::vector<TaggedVertex> vertices_;
  std::vector<Bits> adj_;
  Bits tags_;
};

/// Coprime graph on all of G (loop at the identity only), tagged with H.
LoopedTaggedGraph build_tagged_coprime(const FiniteGroup& g, const SubgroupRef& h);

/// (v,x) ~ (w,y) iff v ~ w and x ~ y; vertex (v,x) has index v*|t2| + x and
/// the product is tagged on the Cartesian product of the tag sets. Vertex
/// labels combine as the direct-product element with lcm order.
LoopedTaggedGraph categorical_product(const LoopedTaggedGraph& t1, const LoopedTaggedGraph& t2);

/// Delete the looped vertex, join every untagged pair, drop the tags and
/// complement. Throws MalformedInput unless exactly one vertex has a loop.
NcGraph recover_gncg(const LoopedTaggedGraph& t);

struct EppoPart {
  std::uint64_t prime;
  std::size_t n_p;  // |Omega_p(G)|
  std::size_t m_p;  // |Omega_p(G) \ Omega_p(H)|
};

struct EppoPrediction {
  std::vector<EppoPart> parts;
  SimpleGraph graph;  // disjoint union of X(n_p, m_p)
  /// H contains Omega_p(G) for every prime divisor but at most one.
  bool corollary_connected = false;
};

/// Throws std::invalid_argument for non-EPPO groups.
EppoPrediction eppo_prediction(const FiniteGroup& g, const SubgroupRef& h);

struct GkGraph {
  std::vector<std::uint64_t> primes;  // vertex i is primes[i]
  SimpleGraph graph;
};

/// p ~ q iff pq divides some element order (equivalently, some element has order pq).
GkGraph gk_graph(const FiniteGroup& g);

/// Non-central elements (labels are element indices), joined when they commute.
SimpleGraph commuting_graph(const FiniteGroup& g);

}  // namespace gncg
