#include "gncg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gncg/closedform.hpp"
#include "gncg/errors.hpp"
#include "gncg/ncg.hpp"
#include "gncg/numthy.hpp"

namespace gncg::harness {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Unclassified:
      return "unclassified";
    case Outcome::Skipped:
      return "skipped";
    case Outcome::Info:
      return "info";
  }
  return {};
}

std::string ReportRow::agree() const {
  switch (outcome) {
    case Outcome::Pass:
      return "true";
    case Outcome::Fail:
      return "false";
    default:
      return "n/a";
  }
}

std::map<std::string, OutcomeCounts> SweepReport::counts() const {
  std::map<std::string, OutcomeCounts> out;
  for (const auto& r : rows) {
    const auto key = r.property.substr(0, r.property.find(':'));
    auto& c = out[key];
    switch (r.outcome) {
      case Outcome::Pass:
        ++c.pass;
        break;
      case Outcome::Fail:
        ++c.fail;
        break;
      case Outcome::Unclassified:
        ++c.unclassified;
        break;
      case Outcome::Skipped:
        ++c.skipped;
        break;
      case Outcome::Info:
        ++c.info;
        break;
    }
  }
  return out;
}

std::vector<ReportRow> SweepReport::discrepancies() const {
  std::vector<ReportRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [](const ReportRow& r) { return r.outcome == Outcome::Fail; });
  return out;
}

std::vector<ReportRow> SweepReport::unexpected(const std::set<std::string>& allowlist) const {
  std::vector<ReportRow> out;
  for (const auto& r : discrepancies())
    if (!allowlist.contains(r.property)) out.push_back(r);
  return out;
}

void SweepReport::append(const SweepReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  for (const auto& [k, v] : other.config) config[other.title + "." + k] = v;
  elapsed_seconds += other.elapsed_seconds;
}

std::set<std::string> default_allowlist() { return {"max_degree_paper"}; }

const std::vector<std::string>& cyclic_properties() {
  static const std::vector<std::string> props = {
      "degree",        "connected",          "eulerian",         "eulerian_corrected",
      "min_degree",    "max_degree_corrected", "max_degree_paper", "star",
      "path",          "cycle",              "triangle_free",    "triangle_free_corrected",
      "complete_bipartite", "complete",      "unicyclic",        "split",
      "split_corrected", "claw_free",        "chordal",          "perfect"};
  return props;
}

unsigned default_workers() {
  if (const char* env = std::getenv("GNCG_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

std::string yes_no(bool b) { return b ? "true" : "false"; }

ReportRow make_row(std::uint64_t n, std::uint64_t h, std::string group, std::string subgroup,
                   std::string property, std::string predicted, std::string oracle) {
  ReportRow r{n, h, std::move(group), std::move(subgroup), std::move(property),
              std::move(predicted), std::move(oracle), Outcome::Pass, {}};
  r.outcome = r.predicted == r.oracle ? Outcome::Pass : Outcome::Fail;
  return r;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.n, a.h, a.group, a.subgroup, a.property) <
           std::tie(b.n, b.h, b.group, b.subgroup, b.property);
  });
}

// Distinct vertices with the requested orders, in sequence.
std::optional<std::vector<Vertex>> representatives(const NcGraph& g,
                                                   std::span<const std::uint64_t> orders) {
  std::vector<Vertex> out;
  std::vector<bool> used(g.vertices.size(), false);
  for (auto ord : orders) {
    Vertex pick = g.vertices.size();
    for (Vertex v = 0; v < g.vertices.size(); ++v)
      if (!used[v] && g.vertices[v].order == ord) {
        pick = v;
        break;
      }
    if (pick == g.vertices.size()) return std::nullopt;
    used[pick] = true;
    out.push_back(pick);
  }
  return out;
}

template <class Better>
Vertex extreme_degree_vertex(const SimpleGraph& g, Better better) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (better(g.degree(v), g.degree(best))) best = v;
  return best;
}

}  // namespace

std::vector<ReportRow> evaluate_graph(const NcGraph& g, const closedform::PropertyPrediction* pred,
                                      const SweepConfig& cfg, const std::string& group,
                                      const std::string& sub) {
  const SimpleGraph& gr = g.graph;
  const std::uint64_t n = g.group_order, h = g.subgroup_order;
  const auto wanted = [&](const std::string& p) {
    return cfg.properties.empty() || cfg.properties.contains(p);
  };

  std::vector<ReportRow> rows;
  const auto add = [&](const std::string& prop, const std::string& predicted, const std::string& oracle,
                       std::vector<std::uint64_t> witness = {}) -> ReportRow& {
    rows.push_back(make_row(n, h, group, sub, prop, pred ? predicted : "n/a", oracle));
    if (!pred) rows.back().outcome = Outcome::Info;
    rows.back().witness = std::move(witness);
    return rows.back();
  };
  const auto failed = [&](const ReportRow& r) { return r.predicted != r.oracle; };
  const auto order_of = [&](Vertex v) { return g.vertices[v].order; };
  const auto flag = [&](bool closedform::PropertyPrediction::*f) { return pred ? yes_no(pred->*f) : ""; };

  if (wanted("degree")) {
    std::map<std::uint64_t, std::set<std::size_t>> seen;
    for (Vertex v = 0; v < gr.vertex_count(); ++v) seen[order_of(v)].insert(gr.degree(v));
    std::map<std::uint64_t, std::string> expected;
    if (pred)
      for (const auto& [d, deg] : pred->degree_by_order) expected[d] = std::to_string(deg);
    else
      for (const auto& [d, degs] : seen) expected[d] = "";
    for (const auto& [d, want] : expected) {
      const auto& degs = seen[d];
      const std::string oracle =
          degs.empty() ? "absent" : degs.size() == 1 ? std::to_string(*degs.begin()) : "mixed";
      auto& row = add("degree:" + std::to_string(d), want, oracle);
      if (pred && failed(row) && degs.size() == 1) row.witness = {d, *degs.begin()};
    }
  }

  const bool connected = is_connected(gr);
  if (wanted("connected")) {
    auto& row = add("connected", flag(&closedform::PropertyPrediction::connected), yes_no(connected));
    if (!connected) {
      // two vertices in different components
      const auto comps = gr.components();
      row.witness = {order_of(comps[0].front()), order_of(comps[1].front())};
    }
  }

  const ShapeFlags shape = classify_shape(gr);
  if (wanted("eulerian"))
    add("eulerian", flag(&closedform::PropertyPrediction::eulerian), yes_no(shape.eulerian));
  if (pred && wanted("eulerian_corrected"))
    add("eulerian_corrected", yes_no(pred->corrected.eulerian), yes_no(shape.eulerian));

  if (wanted("min_degree")) {
    const Vertex v = extreme_degree_vertex(gr, std::less<>());
    add("min_degree", pred ? std::to_string(pred->min_degree) : "", std::to_string(gr.degree(v)),
        {order_of(v), gr.degree(v)});
  }
  const Vertex top = extreme_degree_vertex(gr, std::greater<>());
  const std::vector<std::uint64_t> top_witness{order_of(top), gr.degree(top)};
  if (wanted("max_degree_corrected"))
    add("max_degree_corrected", pred ? std::to_string(pred->max_degree.corrected_value) : "",
        std::to_string(gr.degree(top)), top_witness);
  if (wanted("max_degree_paper"))
    add("max_degree_paper", pred ? std::to_string(pred->max_degree.paper_value) : "",
        std::to_string(gr.degree(top)), top_witness);

  using P = closedform::PropertyPrediction;
  if (wanted("star")) add("star", flag(&P::star), yes_no(shape.star));
  if (wanted("path")) add("path", flag(&P::path), yes_no(shape.path));
  if (wanted("cycle")) add("cycle", flag(&P::cycle), yes_no(shape.cycle));
  if (wanted("triangle_free")) {
    auto& row = add("triangle_free", flag(&P::triangle_free), yes_no(shape.triangle_free));
    if (pred && failed(row))
      if (auto t = find_triangle(gr)) row.witness = g.orders_of(*t);
  }
  if (pred && wanted("triangle_free_corrected"))
    add("triangle_free_corrected", yes_no(pred->corrected.triangle_free), yes_no(shape.triangle_free));
  if (wanted("complete_bipartite"))
    add("complete_bipartite", flag(&P::complete_bipartite), yes_no(shape.complete_bipartite));
  if (wanted("complete")) add("complete", flag(&P::complete), yes_no(shape.complete));
  if (wanted("unicyclic")) add("unicyclic", flag(&P::unicyclic), yes_no(shape.unicyclic));
  const bool split = is_split(gr);
  if (wanted("split")) add("split", flag(&P::split), yes_no(split));
  if (pred && wanted("split_corrected")) add("split_corrected", yes_no(pred->corrected.split), yes_no(split));
  if (wanted("claw_free")) {
    const auto claw = find_claw(gr);
    auto& row = add("claw_free", flag(&P::claw_free), yes_no(!claw));
    if (pred && failed(row) && claw) row.witness = g.orders_of(*claw);
  }
  if (wanted("chordal")) add("chordal", flag(&P::chordal), yes_no(is_chordal(gr)));

  if (wanted("perfect")) {
    const std::string predicted = pred ? closedform::to_string(pred->perfect) : "";
    try {
      const PerfectVerdict verdict = perfect_verdict(gr, cfg.perfect_guard);
      auto& row = add("perfect", predicted, yes_no(verdict.perfect));
      if (pred && pred->perfect == closedform::Tri::Unclassified) row.outcome = Outcome::Unclassified;
      if (verdict.witness) row.witness = g.orders_of(verdict.witness->cycle);
    } catch (const CostGuardError&) {
      auto& row = add("perfect", predicted, "skipped");
      row.outcome = Outcome::Skipped;
    }
  }
  return rows;
}

std::vector<ReportRow> evaluate_cyclic(std::uint64_t n, std::uint64_t h, const SweepConfig& cfg) {
  const closedform::CyclicInstance inst(n, h);
  const auto pred = closedform::classify_formula(inst);
  return evaluate_graph(build_gncg_cyclic(n, h), &pred, cfg, "Z" + std::to_string(n),
                        "Z" + std::to_string(h));
}

SweepReport sweep_cyclic(const SweepConfig& cfg) {
  if (cfg.max_n < 3) throw std::invalid_argument("sweep needs max_n >= 3");
  if (cfg.perfect_guard == 0 || cfg.workers == 0)
    throw std::invalid_argument("sweep guards and worker count must be positive");
  const auto start = Clock::now();

  std::set<std::pair<std::uint64_t, std::uint64_t>> instances;
  for (std::uint64_t n = 3; n <= cfg.max_n; ++n)
    for (auto h : numthy::divisors(n))
      if (h >= 2) instances.emplace(n, h);
  for (const auto& [n, h] : cfg.extra_instances) {
    closedform::CyclicInstance check(n, h);
    instances.emplace(n, h);
  }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> work(instances.begin(), instances.end());

  std::vector<std::vector<ReportRow>> results(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      try {
        results[i] = evaluate_cyclic(work[i].first, work[i].second, cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned threads = std::min<std::size_t>(cfg.workers, std::max<std::size_t>(1, work.size()));
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  report.title = "sweep_cyclic";
  report.config["max_n"] = std::to_string(cfg.max_n);
  report.config["perfect_guard"] = std::to_string(cfg.perfect_guard);
  std::string extras, props;
  for (const auto& [n, h] : cfg.extra_instances)
    extras += (extras.empty() ? "" : ";") + std::to_string(n) + "/" + std::to_string(h);
  for (const auto& p : cfg.properties) props += (props.empty() ? "" : ";") + p;
  report.config["extra_instances"] = extras;
  report.config["properties"] = props.empty() ? "all" : props;
  for (auto& rs : results)
    report.rows.insert(report.rows.end(), std::make_move_iterator(rs.begin()),
                       std::make_move_iterator(rs.end()));
  sort_rows(report.rows);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

bool verify_witness(const ReportRow& row) {
  if (row.witness.empty()) return true;
  if (row.group != "Z" + std::to_string(row.n) || row.n < 2) return false;
  return verify_witness(row, build_gncg_cyclic(row.n, row.h));
}

bool verify_witness(const ReportRow& row, const NcGraph& g) {
  if (row.witness.empty()) return true;
  const SimpleGraph& gr = g.graph;
  const auto& w = row.witness;
  const auto& p = row.property;

  if (p.starts_with("degree:") || p == "min_degree" || p.starts_with("max_degree")) {
    if (w.size() != 2) return false;
    const auto v = representatives(g, std::span(w.data(), 1));
    if (!v || gr.degree(v->front()) != w[1] || std::to_string(w[1]) != row.oracle) return false;
    if (p.starts_with("degree:")) return true;
    for (Vertex u = 0; u < gr.vertex_count(); ++u) {
      if (p == "min_degree" && gr.degree(u) < w[1]) return false;
      if (p != "min_degree" && gr.degree(u) > w[1]) return false;
    }
    return true;
  }
  const auto v = representatives(g, w);
  if (!v) return false;
  const auto& x = *v;
  if (p == "connected") {
    if (x.size() != 2) return false;
    for (const auto& c : gr.components())
      if (std::binary_search(c.begin(), c.end(), x[0])) return !std::binary_search(c.begin(), c.end(), x[1]);
    return false;
  }
  if (p == "claw_free") {
    return x.size() == 4 && gr.adjacent(x[0], x[1]) && gr.adjacent(x[0], x[2]) &&
           gr.adjacent(x[0], x[3]) && !gr.adjacent(x[1], x[2]) && !gr.adjacent(x[1], x[3]) &&
           !gr.adjacent(x[2], x[3]);
  }
  if (p == "triangle_free") {
    return x.size() == 3 && gr.adjacent(x[0], x[1]) && gr.adjacent(x[1], x[2]) &&
           gr.adjacent(x[0], x[2]);
  }
  if (p == "perfect") {
    if (x.size() < 5 || x.size() % 2 == 0) return false;
    return is_induced_cycle(gr, x) || is_induced_cycle(gr.complement(), x);
  }
  return false;
}

// ---------------------------------------------------------------------------

SweepReport verify_nilpotent(const GroupCatalog& catalog) {
  const auto start = Clock::now();
  SweepReport report;
  report.title = "verify_nilpotent";
  std::string names;
  for (const auto& e : catalog) names += (names.empty() ? "" : ";") + e.name;
  report.config["catalog"] = names;

  for (const auto& [name, g] : catalog) {
    const bool nilpotent = is_nilpotent(g);
    std::vector<SubgroupRef> subs;
    try {
      subs = all_subgroups(g);
    } catch (const CostGuardError&) {
      ReportRow r = make_row(g.order(), 0, name, "*", "nilpotent_iso", "isomorphic", "skipped");
      r.outcome = Outcome::Skipped;
      report.rows.push_back(r);
      continue;
    }
    bool mismatch = false;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      const auto& h = subs[k];
      if (h.order() < 2) continue;
      const NcGraph mine = build_gncg(g, h);
      const NcGraph model = build_gncg_cyclic(g.order(), h.order());
      const bool iso = is_isomorphic(mine.graph, model.graph);
      mismatch = mismatch || !iso;
      const std::string oracle = iso ? "isomorphic" : "not_isomorphic";
      if (nilpotent) {
        report.rows.push_back(make_row(g.order(), h.order(), name, std::to_string(k), "nilpotent_iso",
                                       "isomorphic", oracle));
      } else {
        ReportRow r = make_row(g.order(), h.order(), name, std::to_string(k), "nilpotent_iso_control",
                               "n/a", oracle);
        r.outcome = Outcome::Info;
        report.rows.push_back(r);
      }
    }
    if (!nilpotent)
      report.rows.push_back(make_row(g.order(), 0, name, "*", "negative_control", "mismatch",
                                     mismatch ? "mismatch" : "all_isomorphic"));
  }
  sort_rows(report.rows);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

namespace {

bool is_star_with_loop(const LoopedTaggedGraph& t, std::uint64_t h) {
  const std::size_t n = t.vertex_count();
  if (!t.has_loop(0) || !t.tagged(0) || t.tags().count() != h) return false;
  for (Vertex v = 1; v < n; ++v) {
    if (!t.adjacent(0, v)) return false;
    for (Vertex w = v; w < n; ++w)
      if (t.adjacent(v, w)) return false;
  }
  return true;
}

}  // namespace

ReportRow check_product_law(const SubgroupRef& h1, const SubgroupRef& h2) {
  const FiniteGroup& g1 = h1.group();
  const FiniteGroup& g2 = h2.group();
  if (std::gcd(g1.order(), g2.order()) != 1)
    throw std::invalid_argument("product law needs groups of coprime order");
  const FiniteGroup factors[] = {g1, g2};
  const FiniteGroup p = FiniteGroup::direct_product(factors);
  const SubgroupRef parts[] = {h1, h2};
  const SubgroupRef h = product_subgroup(p, parts);
  const bool equal = build_tagged_coprime(p, h) ==
                     categorical_product(build_tagged_coprime(g1, h1), build_tagged_coprime(g2, h2));
  return make_row(p.order(), h.order(), p.name(),
                  std::to_string(h1.order()) + "x" + std::to_string(h2.order()), "product_law",
                  "equal", equal ? "equal" : "different");
}

SweepReport verify_tagged(const GroupCatalog& catalog, std::uint64_t max_cyclic_n) {
  const auto start = Clock::now();
  SweepReport report;
  report.title = "verify_tagged";
  std::string names;
  for (const auto& e : catalog) names += (names.empty() ? "" : ";") + e.name;
  report.config["catalog"] = names;
  report.config["max_cyclic_n"] = std::to_string(max_cyclic_n);

  const auto roundtrip = [&](const std::string& name, const std::string& sub, const FiniteGroup& g,
                             const SubgroupRef& h) {
    const bool same = recover_gncg(build_tagged_coprime(g, h)) == build_gncg(g, h);
    report.rows.push_back(
        make_row(g.order(), h.order(), name, sub, "tagged_roundtrip", "equal", same ? "equal" : "different"));
  };
  const auto star = [&](const std::string& name, const std::string& sub, const FiniteGroup& g,
                        const SubgroupRef& h) {
    const bool ok = is_star_with_loop(build_tagged_coprime(g, h), h.order());
    report.rows.push_back(make_row(g.order(), h.order(), name, sub, "pgroup_star", "star_with_loop",
                                   ok ? "star_with_loop" : "other"));
  };

  std::vector<std::vector<SubgroupRef>> subgroup_lists;
  for (const auto& [name, g] : catalog) {
    subgroup_lists.push_back(all_subgroups(g));
    const auto& subs = subgroup_lists.back();
    const bool pgroup = numthy::omega(g.order()) == 1;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (subs[k].order() >= 2) roundtrip(name, std::to_string(k), g, subs[k]);
      if (pgroup) star(name, std::to_string(k), g, subs[k]);
    }
  }
  for (std::uint64_t n = 2; n <= max_cyclic_n; ++n) {
    const FiniteGroup zn = FiniteGroup::cyclic(n);
    for (auto h : numthy::divisors(n)) {
      const SubgroupRef sub = cyclic_subgroup_of_order(zn, h);
      if (h >= 2) roundtrip(zn.name(), "Z" + std::to_string(h), zn, sub);
      if (numthy::is_prime_power(n)) star(zn.name(), "Z" + std::to_string(h), zn, sub);
    }
  }
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      if (std::gcd(catalog[i].group.order(), catalog[j].group.order()) != 1) continue;
      for (const auto& h1 : subgroup_lists[i])
        for (const auto& h2 : subgroup_lists[j]) report.rows.push_back(check_product_law(h1, h2));
    }
  sort_rows(report.rows);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SweepReport verify_eppo(const GroupCatalog& catalog) {
  for (const auto& e : catalog)
    if (!is_eppo(e.group)) throw std::invalid_argument(e.name + " is not an EPPO group");
  const auto start = Clock::now();
  SweepReport report;
  report.title = "verify_eppo";
  std::string names;
  for (const auto& e : catalog) names += (names.empty() ? "" : ";") + e.name;
  report.config["catalog"] = names;

  for (const auto& [name, g] : catalog) {
    const auto subs = all_subgroups(g);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      const auto& h = subs[k];
      if (h.order() < 2) continue;
      const NcGraph built = build_gncg(g, h);
      const EppoPrediction pred = eppo_prediction(g, h);
      const auto sub = std::to_string(k);
      report.rows.push_back(make_row(g.order(), h.order(), name, sub, "eppo_iso", "isomorphic",
                                     is_isomorphic(built.graph, pred.graph) ? "isomorphic"
                                                                            : "not_isomorphic"));
      // Connectivity criterion, strict and ignoring isolated vertices.
      std::size_t big_components = 0;
      for (const auto& c : built.graph.components())
        if (c.size() > 1) ++big_components;
      ReportRow strict = make_row(g.order(), h.order(), name, sub, "eppo_corollary_strict",
                                  yes_no(pred.corollary_connected), yes_no(is_connected(built.graph)));
      ReportRow loose = make_row(g.order(), h.order(), name, sub, "eppo_corollary_nonisolated",
                                 yes_no(pred.corollary_connected), yes_no(big_components <= 1));
      strict.outcome = loose.outcome = Outcome::Info;
      report.rows.push_back(strict);
      report.rows.push_back(loose);
    }
  }
  sort_rows(report.rows);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SweepReport verify_gk(const GroupCatalog& catalog, std::uint64_t max_n) {
  const auto start = Clock::now();
  SweepReport report;
  report.title = "verify_gk";
  std::string names;
  for (const auto& e : catalog) names += (names.empty() ? "" : ";") + e.name;
  report.config["catalog"] = names;
  report.config["max_n"] = std::to_string(max_n);

  const auto check = [&](const std::string& name, const FiniteGroup& g) {
    const bool gk = is_connected(gk_graph(g).graph);
    const NcGraph gamma = build_gncg(g, whole_group(g));
    report.rows.push_back(make_row(g.order(), g.order(), name, "G", "gk_equiv", yes_no(gk),
                                   yes_no(is_connected(gamma.graph))));
    if (centre(g).is_trivial() && g.order() > 1) {
      const SimpleGraph cg = commuting_graph(g);
      report.rows.push_back(make_row(g.order(), g.order(), name, "G", "commuting_equiv", yes_no(gk),
                                     yes_no(is_connected(cg))));
    }
  };
  for (const auto& [name, g] : catalog) check(name, g);
  for (std::uint64_t n = 2; n <= max_n; ++n) check("Z" + std::to_string(n), FiniteGroup::cyclic(n));
  sort_rows(report.rows);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace gncg::harness
