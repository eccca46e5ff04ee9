#include "gncg/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gncg/errors.hpp"

namespace gncg {

bool is_connected(const SimpleGraph& g) { return g.components().size() <= 1; }

std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const Bits& nu = g.neighbours(u);
    for (auto v = nu.find_next(u); v != Bits::npos; v = nu.find_next(v)) {
      const auto w = (nu & g.neighbours(v)).find_next(v);
      if (w != Bits::npos) return std::array<Vertex, 3>{u, v, w};
    }
  }
  return std::nullopt;
}

namespace {

// Two-colouring of a connected graph; returns the size of colour class 0, or
// nothing when an odd cycle is present.
std::optional<std::size_t> bipartition_size(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::size_t zeros = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    ++zeros;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const Bits& nu = g.neighbours(u);
      for (auto v = nu.find_first(); v != Bits::npos; v = nu.find_next(v)) {
        if (colour[v] == colour[u]) return std::nullopt;
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          if (colour[v] == 0) ++zeros;
          stack.push_back(v);
        }
      }
    }
  }
  return zeros;
}

}  // namespace

ShapeFlags classify_shape(const SimpleGraph& g) {
  ShapeFlags f;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t comps = g.components().size();
  const bool connected = comps <= 1;
  std::size_t max_deg = 0;
  bool all_even = true, all_two = n > 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    max_deg = std::max(max_deg, d);
    all_even = all_even && d % 2 == 0;
    all_two = all_two && d == 2;
  }
  const bool tree = connected && n > 0 && m + 1 == n;

  f.star = tree && n >= 2 && max_deg == n - 1;
  f.path = tree && max_deg <= 2;
  f.cycle = connected && n >= 3 && all_two;
  f.complete = m == n * (n - 1) / 2;
  f.triangle_free = !find_triangle(g).has_value();
  if (connected && n >= 2) {
    if (const auto a = bipartition_size(g)) f.complete_bipartite = m == *a * (n - *a);
  }
  f.unicyclic = m + comps == n + 1;
  f.eulerian = connected && m > 0 && all_even;
  return f;
}

bool is_split(const SimpleGraph& g) {
  const auto d = g.degree_sequence();
  const std::size_t n = d.size();
  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (d[i - 1] + 1 >= i) m = i;
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += d[i];
  return head == m * (m - 1) + tail;
}

bool is_chordal(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0), pos(n, 0);
  std::vector<Vertex> order(n);
  Bits numbered(n);
  for (std::size_t i = n; i-- > 0;) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v)
      if (!numbered.test(v) && (best == n || weight[v] > weight[best])) best = v;
    numbered.set(best);
    order[i] = best;
    pos[best] = i;
    const Bits fresh = g.neighbours(best) - numbered;
    for (auto w = fresh.find_first(); w != Bits::npos; w = fresh.find_next(w)) ++weight[w];
  }
  // order[0..n) is a perfect elimination ordering iff g is chordal.
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    Bits later(n);
    for (auto w = g.neighbours(v).find_first(); w != Bits::npos; w = g.neighbours(v).find_next(w))
      if (pos[w] > i) later.set(w);
    if (later.none()) continue;
    Vertex parent = n;
    for (auto w = later.find_first(); w != Bits::npos; w = later.find_next(w))
      if (parent == n || pos[w] < pos[parent]) parent = w;
    later.reset(parent);
    if (!later.is_subset_of(g.neighbours(parent))) return false;
  }
  return true;
}

std::optional<std::array<Vertex, 4>> find_claw(const SimpleGraph& g) {
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    const Bits& nb = g.neighbours(c);
    if (nb.count() < 3) continue;
    for (auto a = nb.find_first(); a != Bits::npos; a = nb.find_next(a)) {
      const Bits apart = nb - g.neighbours(a);
      for (auto b = apart.find_next(a); b != Bits::npos; b = apart.find_next(b)) {
        const Bits third = apart - g.neighbours(b);
        const auto x = third.find_next(b);
        if (x != Bits::npos) return std::array<Vertex, 4>{c, a, b, x};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Twin reduction

namespace {

bool twins_within(const SimpleGraph& g, const Bits& alive, Vertex u, Vertex v) {
  Bits diff = g.neighbours(u) ^ g.neighbours(v);
  diff &= alive;
  diff.reset(u);
  diff.reset(v);
  return diff.none();
}

ReductionTrace finish_trace(const SimpleGraph& g, const Bits& alive, std::vector<ReductionStep> steps,
                            std::vector<Vertex> rep) {
  ReductionTrace t;
  t.steps = std::move(steps);
  for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) t.survivors.push_back(v);
  t.reduced = g.induced(t.survivors);
  for (Vertex v = 0; v < rep.size(); ++v) {
    Vertex r = v;
    while (!alive.test(r)) r = rep[r];
    rep[v] = r;
  }
  t.representative = std::move(rep);
  return t;
}

}  // namespace

bool are_twins(const SimpleGraph& g, Vertex u, Vertex v) {
  return u != v && twins_within(g, g.all_vertices(), u, v);
}

ReductionTrace twin_reduce(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  Bits alive = g.all_vertices();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), Vertex{0});
  std::vector<ReductionStep> steps;

  // Each sweep keys every surviving vertex by its open and closed
  // neighbourhood. Keys go stale as vertices disappear, so a match is always
  // re-checked; pairs missed that way are caught by the next sweep.
  for (bool changed = true; changed;) {
    changed = false;
    std::unordered_map<Bits, Vertex> open_seen, closed_seen;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
      Bits open = g.neighbours(v) & alive;
      Bits closed = open;
      closed.set(v);
      Vertex partner = n;
      if (auto it = open_seen.find(open); it != open_seen.end() && alive.test(it->second) &&
                                          twins_within(g, alive, it->second, v))
        partner = it->second;
      else if (auto jt = closed_seen.find(closed); jt != closed_seen.end() && alive.test(jt->second) &&
                                                   twins_within(g, alive, jt->second, v))
        partner = jt->second;

      if (partner != n) {
        alive.reset(v);
        rep[v] = partner;
        steps.push_back({partner, v, g.adjacent(partner, v) ? TwinKind::Closed : TwinKind::Open});
        changed = true;
        continue;
      }
      open_seen.emplace(std::move(open), v);
      closed_seen.emplace(std::move(closed), v);
    }
  }
  return finish_trace(g, alive, std::move(steps), std::move(rep));
}

ReductionTrace twin_reduce_random(const SimpleGraph& g, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  Bits alive = g.all_vertices();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), Vertex{0});
  std::vector<ReductionStep> steps;
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto u = alive.find_first(); u != Bits::npos; u = alive.find_next(u))
      for (auto v = alive.find_next(u); v != Bits::npos; v = alive.find_next(v))
        if (twins_within(g, alive, u, v)) pairs.emplace_back(u, v);
    if (pairs.empty()) break;
    auto [kept, removed] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(kept, removed);
    alive.reset(removed);
    rep[removed] = kept;
    steps.push_back({kept, removed, g.adjacent(kept, removed) ? TwinKind::Closed : TwinKind::Open});
  }
  return finish_trace(g, alive, std::move(steps), std::move(rep));
}

// ---------------------------------------------------------------------------
// Pruning

namespace {

bool prunable_within(const SimpleGraph& g, const Bits& alive, Vertex v) {
  const Bits nb = g.neighbours(v) & alive;
  const std::size_t deg = nb.count();
  const std::size_t codeg = alive.count() - 1 - deg;
  if (deg < 2 || codeg < 2) return true;

  bool clique = true;
  for (auto u = nb.find_first(); u != Bits::npos && clique; u = nb.find_next(u)) {
    Bits rest = nb;
    rest.reset(u);
    clique = rest.is_subset_of(g.neighbours(u));
  }
  if (clique) return true;

  Bits non = alive - nb;
  non.reset(v);
  for (auto u = non.find_first(); u != Bits::npos; u = non.find_next(u))
    if (g.neighbours(u).intersects(non)) return false;
  return true;
}

}  // namespace

bool is_prunable(const SimpleGraph& g, Vertex v) { return prunable_within(g, g.all_vertices(), v); }

PruneResult hole_prune_trace(const SimpleGraph& g) {
  Bits alive = g.all_vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
      if (prunable_within(g, alive, v)) {
        alive.reset(v);
        changed = true;
      }
    }
  }
  PruneResult r;
  for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) r.survivors.push_back(v);
  r.graph = g.induced(r.survivors);
  return r;
}

// ---------------------------------------------------------------------------
// Odd holes

namespace {

struct HoleSearch {
  const SimpleGraph& g;
  Vertex start = 0;
  Bits allowed;  // vertices above `start`
  std::vector<Vertex> path;
  Bits on_path;

  // path = v0..vk with k >= 1; `interior` = union of N(v1)..N(v_{k-1}).
  bool extend(const Bits& interior) {
    const Vertex last = path.back();
    Bits cand = g.neighbours(last) & allowed;
    cand -= on_path;
    cand -= interior;
    const std::size_t k = path.size() - 1;
    for (auto w = cand.find_first(); w != Bits::npos; w = cand.find_next(w)) {
      if (g.adjacent(w, start)) {
        const std::size_t len = k + 2;
        if (len >= 5 && len % 2 == 1) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      on_path.set(w);
      if (extend(interior | g.neighbours(last))) return true;
      on_path.reset(w);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_odd_hole(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    HoleSearch search{g, s, Bits(n), {}, Bits(n)};
    for (Vertex v = s + 1; v < n; ++v) search.allowed.set(v);
    const Bits first = g.neighbours(s) & search.allowed;
    for (auto v1 = first.find_first(); v1 != Bits::npos; v1 = first.find_next(v1)) {
      search.path = {s, v1};
      search.on_path.reset();
      search.on_path.set(s);
      search.on_path.set(v1);
      if (search.extend(Bits(n))) return search.path;
    }
  }
  return std::nullopt;
}

std::optional<OddHoleWitness> find_odd_hole_or_antihole(const SimpleGraph& g, std::size_t guard) {
  if (g.vertex_count() > guard)
    throw CostGuardError("odd-hole search limited to " + std::to_string(guard) + " vertices, got " +
                         std::to_string(g.vertex_count()));
  if (auto hole = find_odd_hole(g)) return OddHoleWitness{std::move(*hole), HoleKind::Hole};
  if (auto anti = find_odd_hole(g.complement()))
    return OddHoleWitness{std::move(*anti), HoleKind::Antihole};
  return std::nullopt;
}

bool is_induced_cycle(const SimpleGraph& g, std::span<const Vertex> order) {
  const std::size_t k = order.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (order[i] == order[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(order[i], order[j]) != consecutive) return false;
    }
  return true;
}

PerfectVerdict perfect_verdict(const SimpleGraph& g, std::size_t guard) {
  const ReductionTrace reduced = twin_reduce(g);
  const PruneResult pruned = hole_prune_trace(reduced.reduced);
  PerfectVerdict verdict;
  verdict.reduced_vertices = reduced.reduced.vertex_count();
  verdict.searched_vertices = pruned.graph.vertex_count();
  if (auto w = find_odd_hole_or_antihole(pruned.graph, guard)) {
    for (auto& v : w->cycle) v = reduced.survivors[pruned.survivors[v]];
    verdict.perfect = false;
    verdict.witness = std::move(w);
  }
  return verdict;
}

}  // namespace gncg
