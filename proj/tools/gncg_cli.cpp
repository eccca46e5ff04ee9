#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gncg/closedform.hpp"
#include "gncg/errors.hpp"
#include "gncg/harness.hpp"
#include "gncg/io.hpp"
#include "gncg/ncg.hpp"
#include "gncg/numthy.hpp"
#include "gncg/recognition.hpp"

using namespace gncg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitGuard = 2;
constexpr int kExitDiscrepancy = 3;

struct GroupSel {
  std::optional<std::uint64_t> cyclic;
  std::string table;
  std::string product;
  std::string catalog;
};

struct SubSel {
  std::optional<std::uint64_t> h;
  std::optional<std::size_t> index;
  bool all = false;
};

struct Options {
  GroupSel group;
  SubSel sub;
  std::string graph_kind = "gncg";
  std::string format;
  std::string out;
  std::size_t max_order = kMaxGroupOrder;
  std::size_t perfect_guard = kMaxHoleSearchVertices;
  // sweep / verify
  std::uint64_t max_n = 200;
  std::vector<std::string> extra;
  std::vector<std::string> properties;
  unsigned workers = 0;
  std::string theorem;
  std::uint64_t max_cyclic_n = 60;
  std::vector<std::string> allow{"max_degree_paper"};
  bool timing = false;
  bool prune = false;
};

void add_group_options(CLI::App* cmd, Options& o, bool subgroup_required) {
  auto* g = cmd->add_option_group("group", "exactly one group selector");
  g->add_option("--cyclic", o.group.cyclic, "cyclic group Z_N");
  g->add_option("--table", o.group.table, "multiplication table file");
  g->add_option("--product", o.group.product, "direct product, e.g. Z2xZ4 or Q8xZ3");
  g->add_option("--catalog", o.group.catalog, "built-in group name, e.g. S3, A4, D5, Q8");
  g->require_option(1);

  auto* s = cmd->add_option_group("subgroup", "subgroup selector");
  s->add_option("--h", o.sub.h, "subgroup order (first subgroup of that order)");
  s->add_option("--subgroup-index", o.sub.index, "index in the sorted subgroup list");
  s->add_flag("--all-subgroups", o.sub.all, "every subgroup of order >= 2");
  s->require_option(subgroup_required ? 1 : 0, 1);
  cmd->add_option("--max-order", o.max_order, "refuse groups larger than this")->capture_default_str();
}

FiniteGroup resolve_group(const Options& o) {
  const auto& s = o.group;
  if (s.cyclic) {
    if (*s.cyclic < 1) throw MalformedInput("--cyclic needs N >= 1");
    if (*s.cyclic > o.max_order) throw CostGuardError("group order exceeds --max-order");
    return FiniteGroup::cyclic(*s.cyclic);
  }
  FiniteGroup g = !s.table.empty()     ? load_table_file(s.table)
                  : !s.product.empty() ? catalog_group(s.product)
                                       : catalog_group(s.catalog);
  if (g.order() > o.max_order) throw CostGuardError("group order exceeds --max-order");
  return g;
}

// Label for report rows: cyclic subgroups by order, others by index.
struct Chosen {
  SubgroupRef h;
  std::string label;
};

std::vector<Chosen> resolve_subgroups(const FiniteGroup& g, const SubSel& s) {
  if (g.is_cyclic_model() && !s.all && !s.index) {
    if (!s.h || *s.h == 0 || g.order() % *s.h != 0)
      throw MalformedInput("--h must divide the group order");
    return {{cyclic_subgroup_of_order(g, *s.h), "Z" + std::to_string(*s.h)}};
  }
  const auto subs = all_subgroups(g);
  std::vector<Chosen> out;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const bool take = s.all ? subs[k].order() >= 2
                      : s.index ? k == *s.index
                                : subs[k].order() == *s.h && out.empty();
    if (take) out.push_back({subs[k], std::to_string(k)});
  }
  if (out.empty()) throw MalformedInput("no subgroup matches the selector");
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw MalformedInput("cannot write " + o.out);
  f << text;
}

std::vector<std::uint64_t> element_ids_of(const SimpleGraph& g) {
  std::vector<std::uint64_t> ids;
  for (const auto& l : g.labels()) ids.push_back(std::stoull(l));
  return ids;
}

int run_build(const Options& o) {
  const FiniteGroup g = resolve_group(o);
  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt != "json" && fmt != "dot") throw MalformedInput("build writes json or dot");
  const bool json = fmt == "json";
  std::string text;

  if (o.graph_kind == "gk") {
    const GkGraph gk = gk_graph(g);
    text = json ? io::plain_json(gk.graph, g.order(), gk.primes, gk.primes)
                : io::plain_dot(gk.graph, gk.primes, gk.primes);
    emit(o, text);
    return kExitOk;
  }
  if (o.graph_kind == "commuting") {
    const SimpleGraph cg = commuting_graph(g);
    const auto ids = element_ids_of(cg);
    std::vector<std::uint64_t> orders;
    for (auto x : ids) orders.push_back(g.element_order(static_cast<ElementId>(x)));
    text = json ? io::plain_json(cg, g.order(), ids, orders) : io::plain_dot(cg, ids, orders);
    emit(o, text);
    return kExitOk;
  }
  if (o.graph_kind != "gncg" && o.graph_kind != "coprime-tagged")
    throw MalformedInput("unknown graph kind " + o.graph_kind);
  if (!o.sub.h && !o.sub.index && !o.sub.all) throw MalformedInput("a subgroup selector is required");

  const auto chosen = resolve_subgroups(g, o.sub);
  std::vector<std::string> docs;
  for (const auto& c : chosen) {
    if (o.graph_kind == "gncg") {
      const NcGraph ncg = build_gncg(g, c.h);
      docs.push_back(json ? io::graph_json(ncg) : io::graph_dot(ncg));
    } else {
      const LoopedTaggedGraph t = build_tagged_coprime(g, c.h);
      docs.push_back(json ? io::tagged_json(t, g.order(), c.h.order()) : io::tagged_dot(t));
    }
  }
  if (json && docs.size() > 1) {
    text = "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      auto d = docs[i];
      d.pop_back();
      text += d + (i + 1 < docs.size() ? ",\n" : "\n");
    }
    text += "]\n";
  } else {
    for (const auto& d : docs) text += d;
  }
  emit(o, text);
  return kExitOk;
}

harness::SweepConfig sweep_config(const Options& o) {
  harness::SweepConfig cfg;
  cfg.max_n = o.max_n;
  cfg.perfect_guard = o.perfect_guard;
  cfg.workers = o.workers ? o.workers : harness::default_workers();
  cfg.properties.insert(o.properties.begin(), o.properties.end());
  for (const auto& p : o.properties) {
    const auto& known = harness::cyclic_properties();
    if (std::find(known.begin(), known.end(), p) == known.end())
      throw MalformedInput("unknown property " + p);
  }
  for (const auto& e : o.extra) {
    std::uint64_t n = 0, h = 0;
    char slash = 0;
    std::istringstream in(e);
    if (!(in >> n >> slash >> h) || slash != '/' || !in.eof())
      throw MalformedInput("--extra expects N/H, got " + e);
    try {
      closedform::CyclicInstance check(n, h);
    } catch (const std::invalid_argument& err) {
      throw MalformedInput(std::string("--extra ") + e + ": " + err.what());
    }
    if (n > kMaxGroupOrder) throw CostGuardError("--extra instance exceeds the group-order guard");
    cfg.extra_instances.emplace_back(n, h);
  }
  if (cfg.max_n < 3) throw MalformedInput("--max-n must be at least 3");
  if (cfg.max_n > kMaxGroupOrder) throw CostGuardError("--max-n exceeds the group-order guard");
  if (cfg.perfect_guard == 0) throw MalformedInput("--perfect-guard must be positive");
  return cfg;
}

std::string render_report(const Options& o, const harness::SweepReport& r) {
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "csv") return io::report_csv(r);
  if (fmt == "json") return io::report_json(r, o.timing);
  throw MalformedInput("reports are written as csv or json");
}

void summarize(const harness::SweepReport& r, const std::set<std::string>& allow) {
  std::size_t pass = 0, fail = 0, uncl = 0, skip = 0, info = 0;
  for (const auto& [_, c] : r.counts()) {
    pass += c.pass;
    fail += c.fail;
    uncl += c.unclassified;
    skip += c.skipped;
    info += c.info;
  }
  std::fprintf(stderr, "%s: %zu rows, pass %zu, fail %zu (unexpected %zu), unclassified %zu, skipped %zu, info %zu\n",
               r.title.c_str(), r.rows.size(), pass, fail, r.unexpected(allow).size(), uncl, skip, info);
}

int run_classify(const Options& o) {
  const FiniteGroup g = resolve_group(o);
  harness::SweepConfig cfg;
  cfg.perfect_guard = o.perfect_guard;
  harness::SweepReport report;
  report.title = "classify";
  for (const auto& c : resolve_subgroups(g, o.sub)) {
    const NcGraph ncg = build_gncg(g, c.h);
    // Nilpotent groups inherit the cyclic predictions.
    std::optional<closedform::PropertyPrediction> pred;
    if (g.order() >= 3 && is_nilpotent(g))
      pred = closedform::classify_formula(closedform::CyclicInstance(g.order(), c.h.order()));
    auto rows = harness::evaluate_graph(ncg, pred ? &*pred : nullptr, cfg, g.name(), c.label);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  if (!o.format.empty()) {
    emit(o, render_report(o, report));
    return kExitOk;
  }
  std::ostringstream out;
  std::string last;
  for (const auto& r : report.rows) {
    const std::string head = r.group + " H=" + r.subgroup + " (n=" + std::to_string(r.n) +
                             ", h=" + std::to_string(r.h) + ")";
    if (head != last) out << head << "\n";
    last = head;
    out << "  " << r.property << "=";
    switch (r.outcome) {
      case harness::Outcome::Pass:
        out << r.predicted << "(agree)";
        break;
      case harness::Outcome::Fail:
        out << r.predicted << " oracle=" << r.oracle << "(DISAGREE)";
        break;
      default:
        out << r.oracle << "(" << (r.predicted == "n/a" ? "oracle only" : r.predicted) << ")";
    }
    if (!r.witness.empty()) {
      out << " witness=";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ";" : "") << r.witness[i];
    }
    out << "\n";
  }
  emit(o, out.str());
  return kExitOk;
}

int run_sweep(const Options& o) {
  const auto cfg = sweep_config(o);
  const auto report = harness::sweep_cyclic(cfg);
  summarize(report, {o.allow.begin(), o.allow.end()});
  emit(o, render_report(o, report));
  return kExitOk;
}

GroupCatalog resolve_catalog(const std::string& name) {
  try {
    return named_catalog(name);
  } catch (const std::exception&) {
    return {{name, catalog_group(name)}};
  }
}

int run_verify(const Options& o) {
  std::string theorem = o.theorem;
  const std::string catalog = o.group.catalog.empty() ? "all" : o.group.catalog;
  if (theorem.empty()) {
    if (catalog == "nilpotent" || catalog == "eppo")
      theorem = catalog;
    else if (catalog == "trivial_centre")
      theorem = "gk";
    else
      theorem = "all";
  }
  const std::set<std::string> allow(o.allow.begin(), o.allow.end());
  harness::SweepReport report;
  report.title = "verify";
  const auto part = [&](const harness::SweepReport& r) {
    summarize(r, allow);
    report.append(r);
  };
  const bool all = theorem == "all";
  if (!all && theorem != "nilpotent" && theorem != "tagged" && theorem != "eppo" && theorem != "gk" &&
      theorem != "cyclic")
    throw MalformedInput("unknown theorem " + theorem);
  const GroupCatalog cat = resolve_catalog(catalog);

  if (all || theorem == "cyclic") part(harness::sweep_cyclic(sweep_config(o)));
  if (all || theorem == "nilpotent") part(harness::verify_nilpotent(cat));
  if (all || theorem == "tagged") part(harness::verify_tagged(cat, o.max_cyclic_n));
  if (all || theorem == "eppo") {
    GroupCatalog eppo;
    for (const auto& e : cat)
      if (is_eppo(e.group)) eppo.push_back(e);
    if (!all && eppo.size() != cat.size()) throw MalformedInput("the eppo check needs EPPO groups only");
    part(harness::verify_eppo(eppo));
  }
  if (all || theorem == "gk") part(harness::verify_gk(cat, o.max_n));

  emit(o, render_report(o, report));
  const auto bad = report.unexpected(allow);
  for (const auto& r : bad)
    std::fprintf(stderr, "unexpected: %s %s %s predicted=%s oracle=%s\n", r.group.c_str(),
                 r.subgroup.c_str(), r.property.c_str(), r.predicted.c_str(), r.oracle.c_str());
  return bad.empty() ? kExitOk : kExitDiscrepancy;
}

int run_reduce(const Options& o) {
  const FiniteGroup g = resolve_group(o);
  std::ostringstream out;
  for (const auto& c : resolve_subgroups(g, o.sub)) {
    const NcGraph ncg = build_gncg(g, c.h);
    const ReductionTrace trace = twin_reduce(ncg.graph);
    const auto name = [&](Vertex v) {
      return std::to_string(ncg.vertices[v].element) + ":" + std::to_string(ncg.vertices[v].order);
    };
    out << "# " << g.name() << " H=" << c.label << ": " << ncg.graph.vertex_count() << " vertices\n";
    for (const auto& s : trace.steps)
      out << "remove " << name(s.removed) << " (" << (s.kind == TwinKind::Open ? "open" : "closed")
          << " twin of " << name(s.kept) << ")\n";
    std::vector<Vertex> keep = trace.survivors;
    if (o.prune) {
      const PruneResult pr = hole_prune_trace(trace.reduced);
      std::vector<Vertex> kept;
      for (auto v : pr.survivors) kept.push_back(trace.survivors[v]);
      for (auto v : trace.survivors)
        if (std::find(kept.begin(), kept.end(), v) == kept.end()) out << "prune " << name(v) << "\n";
      keep = kept;
    }
    NcGraph reduced;
    reduced.group_order = ncg.group_order;
    reduced.subgroup_order = ncg.subgroup_order;
    reduced.graph = ncg.graph.induced(keep);
    for (auto v : keep) reduced.vertices.push_back(ncg.vertices[v]);
    out << "# " << keep.size() << " vertices remain\n";
    const std::string fmt = o.format.empty() ? "dot" : o.format;
    if (fmt == "dot")
      out << io::graph_dot(reduced);
    else if (fmt == "json")
      out << io::graph_json(reduced);
    else
      throw MalformedInput("reduce writes dot or json");
  }
  emit(o, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized non-coprime graphs of finite groups"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "construct a graph and export it");
  add_group_options(build, o, false);
  build->add_option("--graph", o.graph_kind, "gncg | coprime-tagged | gk | commuting")
      ->check(CLI::IsMember({"gncg", "coprime-tagged", "gk", "commuting"}));
  build->add_option("--format", o.format, "json | dot");
  build->add_option("--out", o.out, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "predictions next to oracle verdicts");
  add_group_options(classify, o, true);
  classify->add_option("--format", o.format, "csv | json (default: text)");
  classify->add_option("--out", o.out);
  classify->add_option("--perfect-guard", o.perfect_guard)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "every cyclic instance up to --max-n");
  auto* verify = app.add_subcommand("verify", "theorem checks with an allowlist of expected discrepancies");
  for (auto* cmd : {sweep, verify}) {
    cmd->add_option("--max-n", o.max_n)->capture_default_str();
    cmd->add_option("--extra", o.extra, "extra cyclic instance N/H")->delimiter(',');
    cmd->add_option("--properties", o.properties, "subset of properties")->delimiter(',');
    cmd->add_option("--perfect-guard", o.perfect_guard)->capture_default_str();
    cmd->add_option("--workers", o.workers, "default from GNCG_WORKERS");
    cmd->add_option("--format", o.format, "csv | json");
    cmd->add_option("--out", o.out);
    cmd->add_flag("--timing", o.timing, "include elapsed time in JSON reports");
  }
  verify->add_option("--catalog", o.group.catalog, "collection (nilpotent, eppo, trivial_centre, all) or group");
  verify->add_option("--theorem", o.theorem, "nilpotent | tagged | eppo | gk | cyclic | all");
  verify->add_option("--max-cyclic-n", o.max_cyclic_n, "cyclic range for the tagged round trip")
      ->capture_default_str();
  verify->add_option("--allow", o.allow, "expected discrepancy properties (empty string for none)")
      ->delimiter(',')
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "twin-reduction trace and reduced graph");
  add_group_options(reduce, o, true);
  reduce->add_flag("--prune", o.prune, "also apply the hole-pruning rules");
  reduce->add_option("--format", o.format, "dot | json");
  reduce->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }
  std::erase(o.allow, std::string{});

  try {
    if (*build) return run_build(o);
    if (*classify) return run_classify(o);
    if (*sweep) return run_sweep(o);
    if (*verify) return run_verify(o);
    if (*reduce) return run_reduce(o);
  } catch (const CostGuardError& e) {
    std::fprintf(stderr, "cost guard: %s\n", e.what());
    return kExitGuard;
  } catch (const MalformedInput& e) {
    std::fprintf(stderr, "malformed input: %s\n", e.what());
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "malformed input: %s\n", e.what());
    return kExitMalformed;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "malformed input: %s\n", e.what());
    return kExitMalformed;
  }
  return kExitMalformed;
}
