#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "gncg/graph.hpp"

namespace gncg {

inline constexpr std::size_t kMaxHoleSearchVertices = 48;
inline constexpr std::size_t kMaxIsomorphismVertices = 64;

bool is_connected(const SimpleGraph& g);

struct ShapeFlags {
  bool star = false;
  bool path = false;
  bool cycle = false;
  bool complete = false;
  bool complete_bipartite = false;
  bool triangle_free = false;
  bool unicyclic = false;  // |E| - |V| + #components == 1
  bool eulerian = false;   // connected, every degree even
};

/// Textbook shape predicates decided by direct checks.
ShapeFlags classify_shape(const SimpleGraph& g);

std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g);

/// Degree-sequence splittance test.
bool is_split(const SimpleGraph& g);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const SimpleGraph& g);

/// Claw as {centre, leaf, leaf, leaf}, or nothing.
std::optional<std::array<Vertex, 4>> find_claw(const SimpleGraph& g);
inline bool is_claw_free(const SimpleGraph& g) { return !find_claw(g).has_value(); }

// ---------------------------------------------------------------------------
// Twin reduction

enum class TwinKind { Open, Closed };

struct ReductionStep {
  Vertex kept;
  Vertex removed;
  TwinKind kind;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // vertex ids refer to the input graph
  SimpleGraph reduced;               // induced on `survivors`, labels kept
  std::vector<Vertex> survivors;     // reduced vertex i is input vertex survivors[i]
  std::vector<Vertex> representative;  // input vertex -> surviving input vertex
};

/// Vertices with the same neighbours apart from each other.
bool are_twins(const SimpleGraph& g, Vertex u, Vertex v);

/// Removes twins until none remain. When a pair is collapsed the
/// higher-indexed vertex is the one removed, so traces are reproducible.
ReductionTrace twin_reduce(const SimpleGraph& g);

/// Twin reduction that picks a uniformly random twin pair at every step and
/// removes a random member of it. Quadratic per step; intended for small graphs.
ReductionTrace twin_reduce_random(const SimpleGraph& g, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Odd holes and perfectness

/// True when v can lie on no induced odd cycle of length >= 5 and on no
/// complement of one: degree or codegree below 2, a clique neighbourhood, or
/// an edgeless non-neighbourhood.
bool is_prunable(const SimpleGraph& g, Vertex v);

struct PruneResult {
  SimpleGraph graph;
  std::vector<Vertex> survivors;  // pruned vertex i is input vertex survivors[i]
};

/// Deletes prunable vertices, lowest index first, until none is left.
PruneResult hole_prune_trace(const SimpleGraph& g);
inline SimpleGraph hole_prune(const SimpleGraph& g) { return hole_prune_trace(g).graph; }

enum class HoleKind { Hole, Antihole };

struct OddHoleWitness {
  std::vector<Vertex> cycle;  // consecutive vertices of the cycle (in the complement for antiholes)
  HoleKind kind;
};

/// Induced odd cycle of length >= 5 in g, by induced-path extension.
std::optional<std::vector<Vertex>> find_odd_hole(const SimpleGraph& g);

/// Odd hole in g, else odd hole in the complement. Throws CostGuardError
/// above `guard` vertices.
std::optional<OddHoleWitness> find_odd_hole_or_antihole(const SimpleGraph& g,
                                                        std::size_t guard = kMaxHoleSearchVertices);

/// True when `order` lists the vertices of an induced cycle of g in cyclic order.
bool is_induced_cycle(const SimpleGraph& g, std::span<const Vertex> order);

struct PerfectVerdict {
  bool perfect = true;
  std::optional<OddHoleWitness> witness;  // in input-graph vertex ids
  std::size_t reduced_vertices = 0;       // after twin reduction
  std::size_t searched_vertices = 0;      // after pruning
};

/// Twin-reduce, prune, then search for an odd hole or antihole.
PerfectVerdict perfect_verdict(const SimpleGraph& g, std::size_t guard = kMaxHoleSearchVertices);
inline bool is_perfect(const SimpleGraph& g, std::size_t guard = kMaxHoleSearchVertices) {
  return perfect_verdict(g, guard).perfect;
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Bijection a -> b preserving adjacency, or nothing. Throws CostGuardError
/// when either graph exceeds `guard` vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                                    std::size_t guard = kMaxIsomorphismVertices);
inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                          std::size_t guard = kMaxIsomorphismVertices) {
  return find_isomorphism(a, b, guard).has_value();
}

}  // namespace gncg
