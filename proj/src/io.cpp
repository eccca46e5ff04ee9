#include "gncg/io.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "gncg/errors.hpp"

namespace gncg::io {

using Json = nlohmann::ordered_json;

namespace {

Json edge_list(const SimpleGraph& g, std::span<const std::uint64_t> ids) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
  for (const auto& [u, v] : g.edges()) es.emplace_back(std::min(ids[u], ids[v]), std::max(ids[u], ids[v]));
  std::sort(es.begin(), es.end());
  Json out = Json::array();
  for (const auto& [a, b] : es) out.push_back({a, b});
  return out;
}

std::vector<std::uint64_t> element_ids(const NcGraph& g) {
  std::vector<std::uint64_t> ids;
  for (const auto& v : g.vertices) ids.push_back(v.element);
  return ids;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_witness(const std::vector<std::uint64_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ";" : "") + std::to_string(w[i]);
  return out;
}

std::string dot_node(std::uint64_t id, std::uint64_t order, bool boxed) {
  return "  v" + std::to_string(id) + " [label=\"" + std::to_string(id) + ":" + std::to_string(order) +
         "\", shape=" + (boxed ? "box" : "ellipse") + "];\n";
}

template <class Id>
std::vector<std::size_t> by_id(std::size_t n, Id id) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return id(a) < id(b); });
  return idx;
}

}  // namespace

std::string graph_json(const NcGraph& g) {
  Json j;
  j["n"] = g.group_order;
  j["h"] = g.subgroup_order;
  j["vertices"] = Json::array();
  const auto ids = element_ids(g);
  for (auto i : by_id(ids.size(), [&](auto k) { return ids[k]; })) {
    const auto& v = g.vertices[i];
    j["vertices"].push_back({{"id", v.element}, {"order", v.order}, {"in_h", v.in_h}});
  }
  j["edges"] = edge_list(g.graph, ids);
  return j.dump(2) + "\n";
}

NcGraph load_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("graph JSON: ") + e.what());
  }
  try {
    NcGraph g;
    g.group_order = j.at("n").get<std::uint64_t>();
    g.subgroup_order = j.at("h").get<std::uint64_t>();
    std::map<std::uint64_t, Vertex> index;
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
      const auto id = v.at("id").get<std::uint64_t>();
      if (!index.emplace(id, g.vertices.size()).second)
        throw MalformedInput("graph JSON: duplicate vertex id " + std::to_string(id));
      g.vertices.push_back({static_cast<ElementId>(id), v.at("order").get<std::uint64_t>(),
                            v.at("in_h").get<bool>()});
      labels.push_back(std::to_string(id));
    }
    g.graph = SimpleGraph(std::move(labels));
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw MalformedInput("graph JSON: an edge needs two ends");
      const auto a = index.find(e[0].get<std::uint64_t>());
      const auto b = index.find(e[1].get<std::uint64_t>());
      if (a == index.end() || b == index.end() || a->second == b->second)
        throw MalformedInput("graph JSON: bad edge " + e.dump());
      g.graph.add_edge(a->second, b->second);
    }
    return g;
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("graph JSON: ") + e.what());
  }
}

std::string tagged_json(const LoopedTaggedGraph& t, std::uint64_t n, std::uint64_t h) {
  Json j;
  j["n"] = n;
  j["h"] = h;
  j["vertices"] = Json::array();
  const auto& vs = t.vertices();
  for (auto i : by_id(vs.size(), [&](auto k) { return vs[k].element; }))
    j["vertices"].push_back({{"id", vs[i].element}, {"order", vs[i].order}, {"in_h", t.tagged(i)}});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
  std::vector<std::uint64_t> loops;
  for (Vertex u = 0; u < vs.size(); ++u)
    for (Vertex v = u; v < vs.size(); ++v) {
      if (!t.adjacent(u, v)) continue;
      if (u == v)
        loops.push_back(vs[u].element);
      else
        es.emplace_back(std::min(vs[u].element, vs[v].element), std::max(vs[u].element, vs[v].element));
    }
  std::sort(es.begin(), es.end());
  std::sort(loops.begin(), loops.end());
  j["edges"] = Json::array();
  for (const auto& [a, b] : es) j["edges"].push_back({a, b});
  j["loops"] = loops;
  return j.dump(2) + "\n";
}

std::string plain_json(const SimpleGraph& g, std::uint64_t n, std::span<const std::uint64_t> ids,
                       std::span<const std::uint64_t> orders) {
  Json j;
  j["n"] = n;
  j["h"] = 0;
  j["vertices"] = Json::array();
  for (auto i : by_id(ids.size(), [&](auto k) { return ids[k]; }))
    j["vertices"].push_back({{"id", ids[i]}, {"order", orders[i]}, {"in_h", false}});
  j["edges"] = edge_list(g, ids);
  return j.dump(2) + "\n";
}

std::string graph_dot(const NcGraph& g) {
  std::string out = "graph gncg {\n";
  const auto ids = element_ids(g);
  for (auto i : by_id(ids.size(), [&](auto k) { return ids[k]; }))
    out += dot_node(ids[i], g.vertices[i].order, g.vertices[i].in_h);
  for (const auto& e : edge_list(g.graph, ids))
    out += "  v" + e[0].dump() + " -- v" + e[1].dump() + ";\n";
  return out + "}\n";
}

std::string tagged_dot(const LoopedTaggedGraph& t) {
  std::string out = "graph tagged_coprime {\n";
  const auto& vs = t.vertices();
  const auto order = by_id(vs.size(), [&](auto k) { return vs[k].element; });
  for (auto i : order) out += dot_node(vs[i].element, vs[i].order, t.tagged(i));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
  for (Vertex u = 0; u < vs.size(); ++u)
    for (Vertex v = u; v < vs.size(); ++v)
      if (t.adjacent(u, v))
        es.emplace_back(std::min(vs[u].element, vs[v].element), std::max(vs[u].element, vs[v].element));
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::string plain_dot(const SimpleGraph& g, std::span<const std::uint64_t> ids,
                      std::span<const std::uint64_t> orders) {
  std::string out = "graph g {\n";
  for (auto i : by_id(ids.size(), [&](auto k) { return ids[k]; })) out += dot_node(ids[i], orders[i], false);
  for (const auto& e : edge_list(g, ids)) out += "  v" + e[0].dump() + " -- v" + e[1].dump() + ";\n";
  return out + "}\n";
}

std::string report_csv(const harness::SweepReport& r) {
  std::ostringstream out;
  out << "n,h,group,subgroup,property,predicted,oracle,agree,witness\n";
  for (const auto& row : r.rows)
    out << row.n << ',' << row.h << ',' << csv_field(row.group) << ',' << csv_field(row.subgroup) << ','
        << csv_field(row.property) << ',' << csv_field(row.predicted) << ',' << csv_field(row.oracle)
        << ',' << row.agree() << ',' << join_witness(row.witness) << '\n';
  return out.str();
}

std::string report_json(const harness::SweepReport& r, bool with_timing) {
  Json j;
  j["title"] = r.title;
  j["config"] = Json::object();
  for (const auto& [k, v] : r.config) j["config"][k] = v;
  Json summary = Json::object();
  std::size_t total = 0;
  for (const auto& [prop, c] : r.counts()) {
    summary[prop] = {{"pass", c.pass},
                     {"fail", c.fail},
                     {"unclassified", c.unclassified},
                     {"skipped", c.skipped},
                     {"info", c.info}};
    total += c.total();
  }
  j["summary"] = {{"rows", total}, {"discrepancies", r.discrepancies().size()}, {"by_property", summary}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  j["rows"] = Json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"n", row.n},
                         {"h", row.h},
                         {"group", row.group},
                         {"subgroup", row.subgroup},
                         {"property", row.property},
                         {"predicted", row.predicted},
                         {"oracle", row.oracle},
                         {"outcome", harness::to_string(row.outcome)},
                         {"agree", row.agree()},
                         {"witness", row.witness}});
  return j.dump(2) + "\n";
}

}  // namespace gncg::io
