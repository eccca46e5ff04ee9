#include "gncg/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gncg {

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n) : SimpleGraph(index_labels(n)) {}

SimpleGraph::SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw std::invalid_argument("vertex labels must be unique");
  rows_.assign(labels_.size(), Bits(labels_.size()));
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
  rows_[u].set(v);
  rows_[v].set(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (auto v = rows_[u].find_next(u); v != Bits::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(labels_);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    c.rows_[v] = ~rows_[v];
    c.rows_[v].reset(v);
  }
  return c;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vs) const {
  std::vector<std::string> labels;
  labels.reserve(vs.size());
  for (Vertex v : vs) labels.push_back(labels_.at(v));
  SimpleGraph sub(std::move(labels));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) sub.add_edge(i, j);
  return sub;
}

SimpleGraph SimpleGraph::induced(const Bits& mask) const {
  std::vector<Vertex> vs;
  for (auto v = mask.find_first(); v != Bits::npos; v = mask.find_next(v)) vs.push_back(v);
  return induced(vs);
}

std::vector<std::vector<Vertex>> SimpleGraph::components() const {
  std::vector<std::vector<Vertex>> out;
  Bits seen(vertex_count());
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (seen.test(s)) continue;
    std::vector<Vertex> comp{s};
    seen.set(s);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Bits fresh = rows_[comp[i]] - seen;
      for (auto v = fresh.find_first(); v != Bits::npos; v = fresh.find_next(v)) comp.push_back(v);
      seen |= fresh;
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> SimpleGraph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(vertex_count());
  for (const auto& r : rows_) seq.push_back(r.count());
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

Bits SimpleGraph::all_vertices() const {
  Bits b(vertex_count());
  b.set();
  return b;
}

SimpleGraph disjoint_union(std::span<const SimpleGraph> parts) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& l : parts[k].labels()) labels.push_back(std::to_string(k) + "." + l);
  SimpleGraph g(std::move(labels));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& [u, v] : p.edges()) g.add_edge(offset + u, offset + v);
    offset += p.vertex_count();
  }
  return g;
}

namespace make {

SimpleGraph empty(std::size_t n) { return SimpleGraph(n); }

SimpleGraph complete(std::size_t n) { return complete_minus_clique(n, 0); }

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_minus_clique(std::size_t n, std::size_t m) {
  if (m > n) throw std::invalid_argument("removed clique larger than the graph");
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = std::max(u + 1, m); v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace make

}  // namespace gncg
