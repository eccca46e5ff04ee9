#include <algorithm>
#include <map>

#include "gncg/errors.hpp"
#include "gncg/recognition.hpp"

namespace gncg {

namespace {

// Colour refinement run on both graphs with a shared palette, so equal
// colours mean equal refined signatures across the pair.
void refine(const SimpleGraph& a, const SimpleGraph& b, std::vector<std::size_t>& ca,
            std::vector<std::size_t>& cb) {
  ca.resize(a.vertex_count());
  cb.resize(b.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.vertex_count(); ++v) cb[v] = b.degree(v);

  const auto signature = [](const SimpleGraph& g, const std::vector<std::size_t>& c, Vertex v) {
    std::vector<std::size_t> sig{c[v]};
    const Bits& nb = g.neighbours(v);
    for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) sig.push_back(c[w]);
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };

  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> palette;
    std::vector<std::vector<std::size_t>> sa(ca.size()), sb(cb.size());
    for (Vertex v = 0; v < ca.size(); ++v) palette[sa[v] = signature(a, ca, v)] = 0;
    for (Vertex v = 0; v < cb.size(); ++v) palette[sb[v] = signature(b, cb, v)] = 0;
    std::size_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (Vertex v = 0; v < ca.size(); ++v) ca[v] = palette[sa[v]];
    for (Vertex v = 0; v < cb.size(); ++v) cb[v] = palette[sb[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
}

struct Matcher {
  const SimpleGraph& a;
  const SimpleGraph& b;
  const std::vector<std::size_t>& ca;
  const std::vector<std::size_t>& cb;
  std::vector<Vertex> order;    // a-vertices in matching order
  std::vector<Vertex> image;    // a -> b
  std::vector<bool> used;       // b-vertices taken

  bool consistent(std::size_t depth, Vertex y) const {
    const Vertex x = order[depth];
    for (std::size_t j = 0; j < depth; ++j)
      if (a.adjacent(x, order[j]) != b.adjacent(y, image[order[j]])) return false;
    return true;
  }

  bool match(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < b.vertex_count(); ++y) {
      if (used[y] || cb[y] != ca[x] || !consistent(depth, y)) continue;
      used[y] = true;
      image[x] = y;
      if (match(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                                    std::size_t guard) {
  if (a.vertex_count() > guard || b.vertex_count() > guard)
    throw CostGuardError("isomorphism test limited to " + std::to_string(guard) + " vertices");
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;

  std::vector<std::size_t> ca, cb;
  refine(a, b, ca, cb);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  std::map<std::size_t, std::size_t> class_size;
  for (auto c : ca) ++class_size[c];

  // Greedy order: prefer vertices tied to many already-ordered ones, then
  // small colour classes.
  Matcher m{a, b, ca, cb, {}, std::vector<Vertex>(n), std::vector<bool>(n, false)};
  std::vector<std::size_t> links(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links[v] > links[best] ||
          (links[v] == links[best] && class_size[ca[v]] < class_size[ca[best]]))
        best = v;
    }
    placed[best] = true;
    m.order.push_back(best);
    const Bits& nb = a.neighbours(best);
    for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) ++links[w];
  }

  if (!m.match(0)) return std::nullopt;
  return m.image;
}

}  // namespace gncg
