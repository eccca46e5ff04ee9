#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gncg {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with a bitset adjacency matrix.
/// Every vertex carries an opaque, unique label.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  /// Throws std::invalid_argument on duplicate labels.
  explicit SimpleGraph(std::vector<std::string> labels);

  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const;

  /// Loops are rejected.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bits& neighbours(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  SimpleGraph complement() const;
  /// Induced subgraph; vertex i of the result is vs[i] (labels carried over).
  SimpleGraph induced(std::span<const Vertex> vs) const;
  SimpleGraph induced(const Bits& mask) const;

  std::vector<std::vector<Vertex>> components() const;
  /// Degrees sorted in non-increasing order.
  std::vector<std::size_t> degree_sequence() const;

  /// Mask with every vertex set; handy for set algebra on neighbourhoods.
  Bits all_vertices() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

  /// Same adjacency, ignoring labels.
  bool same_edges(const SimpleGraph& other) const { return rows_ == other.rows_; }

 private:
  std::vector<Bits> rows_;
  std::vector<std::string> labels_;
};

SimpleGraph disjoint_union(std::span<const SimpleGraph> parts);

/// Small named graphs, mostly for tests and predictions.
namespace make {
SimpleGraph empty(std::size_t n);
SimpleGraph complete(std::size_t n);
SimpleGraph path(std::size_t n);
SimpleGraph cycle(std::size_t n);
SimpleGraph star(std::size_t leaves);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
/// K_n with the edges among its first m vertices removed.
SimpleGraph complete_minus_clique(std::size_t n, std::size_t m);
}  // namespace make

}  // namespace gncg
