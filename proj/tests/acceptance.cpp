// One line per acceptance criterion. Exit status is 0 when the set of failing
// criteria equals kKnownFailures; the analysis for those is printed inline.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "gncg/closedform.hpp"
#include "gncg/harness.hpp"
#include "gncg/ncg.hpp"
#include "gncg/numthy.hpp"
#include "gncg/recognition.hpp"
#include "oracles.hpp"

using namespace gncg;
using harness::Outcome;
using harness::ReportRow;

namespace {

// Pinned limits.
constexpr double kDegreeSweepSeconds = 60.0;
constexpr double kStructuredPerfectSeconds = 180.0;
constexpr std::uint64_t kSweepMaxN = 200;
constexpr std::uint64_t kPerfectMaxN = 100;
constexpr std::uint64_t kRoundTripMaxN = 60;
constexpr std::size_t kMinProductPairs = 3;
constexpr int kConfluenceGraphs = 50;
constexpr int kConfluenceOrders = 100;
constexpr std::size_t kConfluenceMaxVertices = 16;
constexpr std::size_t kExhaustiveVertices = 7;
constexpr std::uint64_t kSeed = 0x5eed'2024;

// Criteria whose printed statements the oracle refutes (analysis in the output).
const std::set<int> kKnownFailures = {3, 6};

std::set<int> failed;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) failed.insert(id);
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
}

void note(const std::string& s) { std::printf("       %s\n", s.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v, std::size_t limit = 12) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i)
    s += (i ? " " : "") + std::string("(") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
  if (v.size() > limit) s += " ...";
  return s;
}

bool power_of_two(std::uint64_t n) { return (n & (n - 1)) == 0; }

std::vector<Vertex> by_orders(const NcGraph& g, std::initializer_list<std::uint64_t> orders) {
  std::vector<Vertex> out;
  for (auto o : orders)
    for (Vertex v = 0; v < g.vertices.size(); ++v)
      if (g.vertices[v].order == o) {
        out.push_back(v);
        break;
      }
  return out;
}

template <class Fn>
void each_instance(std::uint64_t max_n, Fn fn) {
  for (std::uint64_t n = 3; n <= max_n; ++n)
    for (auto h : numthy::divisors(n))
      if (h >= 2) fn(n, h);
}

// Twin reduction keeps odd holes and antiholes (no such cycle holds two twins),
// so the brute-force search may run on the reduced graph.
bool brute_hole_or_antihole(const SimpleGraph& g) {
  return oracle::has_odd_hole_or_antihole(twin_reduce(g).reduced);
}

}  // namespace

int main() {
  const auto t_all = std::chrono::steady_clock::now();

  // ---- 1-5: one full sweep ------------------------------------------------
  harness::SweepConfig cfg;
  cfg.max_n = kSweepMaxN;
  cfg.workers = harness::default_workers();
  const auto t_sweep = std::chrono::steady_clock::now();
  const auto sweep = harness::sweep_cyclic(cfg);
  const double sweep_s = seconds_since(t_sweep);

  std::map<std::string, std::vector<const ReportRow*>> by_prop;
  std::size_t instances = 0;
  for (const auto& r : sweep.rows) {
    by_prop[r.property.starts_with("degree:") ? "degree" : r.property].push_back(&r);
    instances += r.property == "connected";
  }
  const auto fails = [&](const std::string& p) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (auto* r : by_prop[p])
      if (r->outcome == Outcome::Fail) out.push_back({r->n, r->h});
    return out;
  };

  {
    // Degree rows compare one value per element order; also recount from the graphs directly.
    std::size_t vertices = 0, bad = 0;
    each_instance(kSweepMaxN, [&](std::uint64_t n, std::uint64_t h) {
      const auto g = build_gncg_cyclic(n, h);
      const closedform::CyclicInstance inst(n, h);
      for (Vertex v = 0; v < g.vertices.size(); ++v, ++vertices)
        bad += g.graph.degree(v) != closedform::degree_formula(inst, g.vertices[v].order);
    });
    const auto f = fails("degree");
    report(1, bad == 0 && f.empty() && sweep_s < kDegreeSweepSeconds, "degree formula",
           std::to_string(instances) + " instances, " + std::to_string(vertices) + " vertices, " +
               std::to_string(bad + f.size()) + " mismatches, sweep " + std::to_string(sweep_s) + " s (limit " +
               std::to_string(kDegreeSweepSeconds) + " s)");
  }
  {
    const auto f = fails("connected");
    report(2, f.empty(), "connectivity", std::to_string(by_prop["connected"].size()) + " instances, " +
                                             std::to_string(f.size()) + " mismatches");
  }
  {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> eulerian;
    for (auto* r : by_prop["eulerian"])
      if (r->oracle == "true") eulerian.push_back({r->n, r->h});
    report(3, eulerian.empty(), "no Eulerian instance",
           std::to_string(eulerian.size()) + " Eulerian instances: " + pairs(eulerian));
    if (!eulerian.empty()) {
      note("Gamma for Z_{2^k} with H = G is K_{2^k - 1}: connected, every degree 2^k - 2 is even.");
      note("Corrected rule (n = h = 2^k, k >= 2): " + std::to_string(fails("eulerian_corrected").size()) +
           " mismatches.");
    }
  }
  {
    const auto f = fails("min_degree");
    report(4, f.empty(), "minimum degree", std::to_string(by_prop["min_degree"].size()) + " instances, " +
                                                 std::to_string(f.size()) + " mismatches");
  }
  {
    const auto corrected = fails("max_degree_corrected");
    std::size_t disconnected = 0, paper_rows = 0, off_by_one = 0, connected_zero = 0, connected = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> conn;
    for (auto* r : by_prop["connected"]) conn[{r->n, r->h}] = r->oracle == "true";
    for (auto& [k, c] : conn) (c ? connected : disconnected) += 1;
    bool golden = false;
    for (auto* r : by_prop["max_degree_paper"]) {
      const auto diff = static_cast<long long>(std::stoull(r->predicted)) - static_cast<long long>(std::stoull(r->oracle));
      const bool c = conn[{r->n, r->h}];
      if (r->outcome == Outcome::Fail) {
        ++paper_rows;
        off_by_one += !c && diff == 1;
      } else {
        connected_zero += c && diff == 0;
      }
      if (r->n == 6 && r->h == 2) golden = r->predicted == "3" && r->oracle == "2" && r->outcome == Outcome::Fail;
    }
    const bool ok = corrected.empty() && paper_rows == disconnected && off_by_one == disconnected &&
                    connected_zero == connected && golden;
    report(5, ok, "maximum degree",
           "corrected mismatches " + std::to_string(corrected.size()) + "; max_degree_paper rows " +
               std::to_string(paper_rows) + " for " + std::to_string(disconnected) +
               " disconnected instances, all +1: " + (off_by_one == disconnected ? "yes" : "no") +
               "; (6,2) printed 3 vs oracle 2: " + (golden ? "yes" : "no"));
  }

  // ---- 6: truth table, restated arithmetically here ------------------------
  {
    std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>> miss;
    std::map<std::string, std::size_t> miss_corrected;
    each_instance(kSweepMaxN, [&](std::uint64_t n, std::uint64_t h) {
      const auto g = build_gncg_cyclic(n, h).graph;
      const auto f = classify_shape(g);
      const auto r = numthy::factorize(n).size();
      const bool star_set = (power_of_two(n) && h == 2) || (n == 3 && h == 3);
      const bool hpp = numthy::is_prime_power(h);
      const std::pair<const char*, std::pair<bool, bool>> table[] = {
          {"star", {f.star, star_set}},
          {"path", {f.path, (n == 3 && h == 3) || (n == 4 && h == 2)}},
          {"cycle", {f.cycle, n == 4 && h == 4}},
          {"unicyclic", {f.unicyclic, n == 4 && h == 4}},
          {"triangle_free", {f.triangle_free, star_set}},
          {"complete_bipartite", {f.complete_bipartite, star_set}},
          {"complete", {f.complete, r == 1 && h == n}},
          {"split", {is_split(g), hpp || (n == 6 && h == 6)}},
          {"claw_free", {is_claw_free(g), (h == n && r <= 2) || (h < n && (n == 4 || n == 6))}},
          {"chordal", {is_chordal(g), hpp || (h == n && r <= 3)}},
      };
      for (const auto& [name, v] : table)
        if (v.first != v.second) miss[name].push_back({n, h});
      const bool odd_pk = n % 2 == 0 && numthy::is_prime_power(n / 2) && (n / 2) % 2 == 1;
      miss_corrected["split"] += is_split(g) != (hpp || (h == n && odd_pk));
      miss_corrected["triangle_free"] += f.triangle_free != (h == 2 || (n == 3 && h == 3));
    });
    std::size_t total = 0;
    std::string detail;
    for (const auto& [k, v] : miss) {
      total += v.size();
      detail += (detail.empty() ? "" : ", ") + k + " " + std::to_string(v.size());
    }
    report(6, total == 0, "classification truth table",
           total == 0 ? "10 properties, 0 mismatches" : "mismatches: " + detail);
    for (const auto& [k, v] : miss) note(k + ": " + pairs(v));
    if (miss.contains("split"))
      note("H = G = Z_{2p^k}: the elements of order 2 and odd order form an independent set, the rest a clique. "
           "Corrected rule (h prime power, or h = n = 2p^k): " +
           std::to_string(miss_corrected["split"]) + " mismatches.");
    if (miss.contains("triangle_free"))
      note("H of order 2 in even Z_n: a star on the even-order elements plus isolated vertices. "
           "Corrected rule (h = 2, or n = h = 3): " +
           std::to_string(miss_corrected["triangle_free"]) + " mismatches.");
  }

  // ---- 7: structured perfectness -------------------------------------------
  {
    const auto t7 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (auto h : numthy::divisors(210)) {
      if (h < 2) continue;
      ++checked;
      if (!is_perfect(build_gncg_cyclic(210, h).graph)) bad.push_back("(210," + std::to_string(h) + ")");
    }
    const auto g210 = build_gncg_cyclic(210, 30);
    const auto six = by_orders(g210, {2, 42, 3, 105, 5, 70});
    const bool hexagon = six.size() == 6 && is_induced_cycle(g210.graph, six);
    if (!hexagon) bad.push_back("no 6-cycle in (210,30)");

    const auto g2310 = build_gncg_cyclic(2310, 2310);
    const auto five = by_orders(g2310, {6, 10, 35, 77, 33});
    const bool pentagon = five.size() == 5 && is_induced_cycle(g2310.graph, five);
    const auto v2310 = perfect_verdict(g2310.graph);
    if (!pentagon) bad.push_back("no 5-cycle in (2310,2310)");
    if (v2310.perfect) bad.push_back("(2310,2310) perfect");

    const auto v420 = perfect_verdict(build_gncg_cyclic(420, 210).graph);
    if (v420.perfect) bad.push_back("(420,210) perfect");

    for (auto h : numthy::divisors(2310)) {
      if (h < 2 || numthy::omega(h) > 3) continue;
      ++checked;
      if (!is_perfect(build_gncg_cyclic(2310, h).graph)) bad.push_back("(2310," + std::to_string(h) + ")");
    }
    const double s = seconds_since(t7);
    std::string detail = std::to_string(checked + 2) + " instances, induced C6 in (210,30): " +
                         (hexagon ? "yes" : "no") + ", induced C5 in (2310,2310): " + (pentagon ? "yes" : "no") +
                         ", " + std::to_string(s) + " s (limit " + std::to_string(kStructuredPerfectSeconds) + " s)";
    for (const auto& b : bad) detail += "; " + b;
    report(7, bad.empty() && s < kStructuredPerfectSeconds, "perfectness, structured instances", detail);
  }

  // ---- 8: exhaustive perfectness ---------------------------------------------
  {
    std::size_t decided = 0, disagree = 0;
    std::vector<std::string> open;
    each_instance(kPerfectMaxN, [&](std::uint64_t n, std::uint64_t h) {
      const auto pred = closedform::classify_formula(closedform::CyclicInstance(n, h)).perfect;
      const bool perfect = is_perfect(build_gncg_cyclic(n, h).graph);
      if (pred == closedform::Tri::Unclassified) {
        open.push_back("(" + std::to_string(n) + "," + std::to_string(h) + ")=" + (perfect ? "perfect" : "imperfect"));
      } else {
        ++decided;
        disagree += perfect != (pred == closedform::Tri::True);
      }
    });
    report(8, disagree == 0, "perfectness, exhaustive n <= 100",
           std::to_string(decided) + " classified instances, " + std::to_string(disagree) + " disagreements, " +
               std::to_string(open.size()) + " unclassified in range");
    // The open regime starts at r = 4 with a repeated prime.
    std::vector<std::string> beyond;
    for (std::uint64_t n : {420, 630, 840, 1260})
      for (auto h : numthy::divisors(n)) {
        if (h < 2) continue;
        if (closedform::classify_formula(closedform::CyclicInstance(n, h)).perfect != closedform::Tri::Unclassified)
          continue;
        beyond.push_back("(" + std::to_string(n) + "," + std::to_string(h) + ")=" +
                         (is_perfect(build_gncg_cyclic(n, h).graph) ? "perfect" : "imperfect"));
      }
    std::size_t imperfect = 0;
    for (const auto& b : beyond) imperfect += b.ends_with("imperfect");
    note("unclassified beyond the range, n in {420,630,840,1260}: " + std::to_string(beyond.size()) +
         " instances, " + std::to_string(imperfect) + " imperfect");
    std::string line;
    for (std::size_t i = 0; i < beyond.size(); ++i) {
      line += (line.empty() ? "" : " ") + beyond[i];
      if (line.size() > 100 || i + 1 == beyond.size()) {
        note(line);
        line.clear();
      }
    }
  }

  // ---- 9: odd-cycle bound -----------------------------------------------------
  {
    std::size_t checked = 0, exceptions = 0, oracle_split = 0;
    each_instance(kPerfectMaxN, [&](std::uint64_t n, std::uint64_t h) {
      if (numthy::factorize(n).size() > 3) return;
      ++checked;
      const auto g = build_gncg_cyclic(n, h).graph;
      const bool brute = brute_hole_or_antihole(g);
      const bool search = find_odd_hole_or_antihole(twin_reduce(g).reduced).has_value();
      exceptions += brute;
      oracle_split += brute != search;
    });
    report(9, exceptions == 0 && oracle_split == 0, "odd-cycle bound for r <= 3",
           std::to_string(checked) + " instances, " + std::to_string(exceptions) + " with an odd hole or antihole");
  }

  // ---- 10: nilpotent ------------------------------------------------------------
  {
    const auto rep = harness::verify_nilpotent(named_catalog("nilpotent"));
    std::size_t pass = 0, total = 0;
    bool control = false;
    for (const auto& r : rep.rows) {
      if (r.property == "nilpotent_iso") {
        ++total;
        pass += r.outcome == Outcome::Pass;
      }
      if (r.property == "negative_control" && r.group == "S3") control = r.oracle == "mismatch";
    }
    const auto s3 = symmetric_group(3);
    const auto whole = build_gncg(s3, whole_group(s3)).graph;
    const SimpleGraph parts[] = {make::complete(3), make::complete(2)};
    const bool shape = is_isomorphic(whole, disjoint_union(parts));
    const bool differs = !is_isomorphic(whole, build_gncg_cyclic(6, 6).graph);
    report(10, total > 0 && pass == total && control && shape && differs, "nilpotent theorem",
           std::to_string(pass) + "/" + std::to_string(total) + " isomorphic; S3 with H=S3 is K3+K2: " +
               (shape ? "yes" : "no") + ", differs from Z6: " + (differs ? "yes" : "no"));
  }

  // ---- 11: tagged coprime ---------------------------------------------------------
  {
    const auto rep = harness::verify_tagged(named_catalog("all"), kRoundTripMaxN);
    std::size_t cyc = 0, cyc_ok = 0, prod = 0, prod_ok = 0, star = 0, star_ok = 0;
    std::set<std::string> product_groups;
    std::set<std::pair<std::uint64_t, std::uint64_t>> cyclic_seen;  // catalog Z8, Z9, ... repeat some instances
    for (const auto& r : rep.rows) {
      const bool ok = r.outcome == Outcome::Pass;
      if (r.property == "tagged_roundtrip" && r.group == "Z" + std::to_string(r.n) &&
          cyclic_seen.insert({r.n, r.h}).second)
        ++cyc, cyc_ok += ok;
      if (r.property == "product_law") ++prod, prod_ok += ok, product_groups.insert(r.group);
      if (r.property == "pgroup_star") ++star, star_ok += ok;
    }
    std::size_t expected_cyc = 0;
    for (std::uint64_t n = 2; n <= kRoundTripMaxN; ++n)
      for (auto h : numthy::divisors(n)) expected_cyc += h >= 2;
    report(11,
           cyc == expected_cyc && cyc_ok == cyc && product_groups.size() >= kMinProductPairs && prod_ok == prod &&
               star > 0 && star_ok == star && rep.discrepancies().empty(),
           "tagged coprime graphs",
           "round trip " + std::to_string(cyc_ok) + "/" + std::to_string(cyc) + " cyclic; product law " +
               std::to_string(prod_ok) + "/" + std::to_string(prod) + " over " +
               std::to_string(product_groups.size()) + " group pairs; looped star " + std::to_string(star_ok) + "/" +
               std::to_string(star));
  }

  // ---- 12: EPPO -----------------------------------------------------------------------
  {
    const auto rep = harness::verify_eppo(named_catalog("eppo"));
    std::size_t total = 0, pass = 0;
    for (const auto& r : rep.rows)
      if (r.property == "eppo_iso") ++total, pass += r.outcome == Outcome::Pass;
    report(12, total > 0 && pass == total, "EPPO decomposition",
           std::to_string(pass) + "/" + std::to_string(total) + " (group, subgroup) pairs isomorphic");
  }

  // ---- 13: GK -----------------------------------------------------------------------------
  {
    const auto rep = harness::verify_gk(named_catalog("all"), kSweepMaxN);
    std::size_t gk = 0, gk_ok = 0, comm = 0, comm_ok = 0;
    for (const auto& r : rep.rows) {
      if (r.property == "gk_equiv") ++gk, gk_ok += r.outcome == Outcome::Pass;
      if (r.property == "commuting_equiv") ++comm, comm_ok += r.outcome == Outcome::Pass;
    }
    report(13, gk_ok == gk && comm == 4 && comm_ok == comm, "GK equivalence",
           "non-coprime vs GK " + std::to_string(gk_ok) + "/" + std::to_string(gk) + "; commuting vs GK " +
               std::to_string(comm_ok) + "/" + std::to_string(comm));
  }

  // ---- 14: confluence -----------------------------------------------------------------------
  {
    std::mt19937_64 rng(kSeed);
    std::size_t bad = 0, max_v = 0, orders = 0;
    for (int k = 0; k < kConfluenceGraphs; ++k) {
      const std::size_t base_n = 5 + rng() % 6;
      const std::size_t n = base_n + rng() % (kConfluenceMaxVertices - base_n + 1);
      auto g = oracle::random_graph(base_n, 0.3 + 0.1 * (k % 5), rng);
      while (g.vertex_count() < n) {  // plant a twin of a random vertex
        const Vertex src = rng() % g.vertex_count();
        SimpleGraph h(g.vertex_count() + 1);
        for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
        for (Vertex w = 0; w < g.vertex_count(); ++w)
          if (g.adjacent(src, w)) h.add_edge(g.vertex_count(), w);
        if (rng() % 2) h.add_edge(g.vertex_count(), src);
        g = h;
      }
      // shuffle so the planted twins are not simply the highest indices
      std::vector<std::size_t> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      g = oracle::relabel(g, perm);
      max_v = std::max(max_v, g.vertex_count());
      const auto first = twin_reduce_random(g, rng).reduced;
      for (int t = 1; t < kConfluenceOrders; ++t, ++orders)
        bad += !is_isomorphic(twin_reduce_random(g, rng).reduced, first);
      ++orders;
    }
    report(14, bad == 0 && max_v <= kConfluenceMaxVertices, "twin-reduction confluence",
           std::to_string(kConfluenceGraphs) + " graphs (up to " + std::to_string(max_v) + " vertices), " +
               std::to_string(orders) + " random orders, " + std::to_string(bad) + " non-isomorphic results");
  }

  // ---- 15: recognition cross-check ------------------------------------------------------------
  {
    std::size_t graphs = 0;
    std::map<std::string, std::size_t> bad;
    for (std::size_t n = 1; n <= kExhaustiveVertices; ++n)
      for (const auto& g : oracle::graphs_up_to_iso(n)) {
        ++graphs;
        bad["split"] += is_split(g) != oracle::split_by_partition(g);
        bad["split-forbidden"] += is_split(g) != oracle::split_by_forbidden(g);
        bad["chordal"] += is_chordal(g) != oracle::chordal_by_cycles(g);
        bad["claw_free"] += is_claw_free(g) != oracle::claw_free_by_subsets(g);
        bad["perfect"] += is_perfect(g) != oracle::perfect_by_colouring(g);
      }
    std::size_t total = 0;
    std::string detail;
    for (const auto& [k, v] : bad) {
      total += v;
      detail += ", " + k + " " + std::to_string(v);
    }
    report(15, total == 0 && oracle::graphs_up_to_iso(kExhaustiveVertices).size() == 1044,
           "recognition vs brute force", std::to_string(graphs) + " graphs on 1..7 vertices up to isomorphism" + detail);
  }

  std::printf("total %.1f s\n", seconds_since(t_all));
  std::string got, want;
  for (int i : failed) got += (got.empty() ? "" : ",") + std::to_string(i);
  for (int i : kKnownFailures) want += (want.empty() ? "" : ",") + std::to_string(i);
  std::printf("failing criteria {%s}; expected {%s}\n", got.c_str(), want.c_str());
  return failed == kKnownFailures ? 0 : 1;
}
