#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gncg/closedform.hpp"
#include "gncg/groups.hpp"
#include "gncg/ncg.hpp"
#include "gncg/recognition.hpp"

namespace gncg::harness {

enum class Outcome {
  Pass,          // prediction and oracle agree
  Fail,          // they disagree: a discrepancy
  Unclassified,  // no prediction exists; oracle verdict recorded
  Skipped,       // a cost guard stopped the oracle
  Info,          // recorded for reference, not a theorem check
};
std::string to_string(Outcome o);

/// One evaluated (instance, property) pair. A row with outcome Fail is a
/// discrepancy record.
struct ReportRow {
  std::uint64_t n = 0;
  std::uint64_t h = 0;
  std::string group;
  std::string subgroup;
  std::string property;
  std::string predicted;
  std::string oracle;
  Outcome outcome = Outcome::Pass;
  std::vector<std::uint64_t> witness;  // element-order labels

  /// "true", "false", or "n/a" when there is nothing to compare.
  std::string agree() const;
};

struct OutcomeCounts {
  std::size_t pass = 0, fail = 0, unclassified = 0, skipped = 0, info = 0;
  std::size_t total() const { return pass + fail + unclassified + skipped + info; }
};

struct SweepReport {
  std::string title;
  std::map<std::string, std::string> config;  // echo of the run configuration
  std::vector<ReportRow> rows;
  double elapsed_seconds = 0;

  std::map<std::string, OutcomeCounts> counts() const;
  std::vector<ReportRow> discrepancies() const;
  /// Fail rows whose property is not in `allowlist`.
  std::vector<ReportRow> unexpected(const std::set<std::string>& allowlist) const;
  void append(const SweepReport& other);
};

/// Discrepancy classes expected in every cyclic sweep.
std::set<std::string> default_allowlist();

struct SweepConfig {
  std::uint64_t max_n = 200;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> extra_instances;
  std::set<std::string> properties;  // empty selects every property
  std::size_t perfect_guard = kMaxHoleSearchVertices;
  unsigned workers = 1;
};

/// Property names evaluated by sweep_cyclic. "degree" expands to one row per
/// divisor d of n, named "degree:d".
const std::vector<std::string>& cyclic_properties();

/// Every Gamma_{Z_n,Z_h}, 3 <= n <= max_n, h | n, h >= 2, plus the extra
/// instances, against the closed-form predictions. Rows are sorted by
/// (n, h, property).
SweepReport sweep_cyclic(const SweepConfig& cfg);

/// Rows for one cyclic instance.
std::vector<ReportRow> evaluate_cyclic(std::uint64_t n, std::uint64_t h, const SweepConfig& cfg);

/// Oracle verdicts for any built graph. Without a prediction every row is
/// Info with predicted "n/a".
std::vector<ReportRow> evaluate_graph(const NcGraph& g, const closedform::PropertyPrediction* pred,
                                      const SweepConfig& cfg, const std::string& group,
                                      const std::string& subgroup);

/// Re-checks a row's witness against a freshly built graph. Rows without a
/// witness verify trivially.
bool verify_witness(const ReportRow& row);
/// Same against a given graph (for non-cyclic rows).
bool verify_witness(const ReportRow& row, const NcGraph& g);

/// Nilpotent groups: Gamma_{G,H} against Gamma_{Z_|G|, Z_|H|} for every H
/// with |H| >= 2. Non-nilpotent groups act as negative controls that must
/// produce at least one mismatch.
SweepReport verify_nilpotent(const GroupCatalog& catalog);

/// Tagged coprime graphs: the recovery round trip on every catalog (G,H) and
/// every cyclic (n,h) with n <= max_cyclic_n, the p-group star shape, and the
/// product law on every catalog pair of coprime order.
SweepReport verify_tagged(const GroupCatalog& catalog, std::uint64_t max_cyclic_n = 60);

/// The product law for one explicit pair of (group, subgroup) choices.
ReportRow check_product_law(const SubgroupRef& h1, const SubgroupRef& h2);

/// EPPO groups: Gamma_{G,H} against the disjoint union of X(n_p, m_p).
/// Throws std::invalid_argument if the catalog holds a non-EPPO group.
SweepReport verify_eppo(const GroupCatalog& catalog);

/// Connectivity of Gamma_G against the GK graph for catalog groups and Z_n,
/// 2 <= n <= max_n; commuting graph against GK graph for trivial-centre groups.
SweepReport verify_gk(const GroupCatalog& catalog, std::uint64_t max_n);

/// Worker count from GNCG_WORKERS, else the hardware concurrency.
unsigned default_workers();

}  // namespace gncg::harness
