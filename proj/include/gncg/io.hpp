#pragma once

#include <string>

#include "gncg/harness.hpp"
#include "gncg/ncg.hpp"

namespace gncg::io {

/// {"n","h","vertices":[{"id","order","in_h"}],"edges":[[i,j],...]}; ids are
/// element indices, edges use ids with i < j in lexicographic order.
std::string graph_json(const NcGraph& g);
/// Inverse of graph_json. Throws MalformedInput.
NcGraph load_graph_json(const std::string& text);

/// Same schema with "in_h" marking tagged vertices and an extra "loops" list.
std::string tagged_json(const LoopedTaggedGraph& t, std::uint64_t n, std::uint64_t h);

/// Generic schema for the GK and commuting graphs: `ids[v]`/`orders[v]`
/// describe vertex v, "h" is 0 and every "in_h" is false.
std::string plain_json(const SimpleGraph& g, std::uint64_t n, std::span<const std::uint64_t> ids,
                       std::span<const std::uint64_t> orders);

/// DOT with `id:order` labels, in-H (or tagged) vertices drawn as boxes.
std::string graph_dot(const NcGraph& g);
std::string tagged_dot(const LoopedTaggedGraph& t);
std::string plain_dot(const SimpleGraph& g, std::span<const std::uint64_t> ids,
                      std::span<const std::uint64_t> orders);

/// Header `n,h,group,subgroup,property,predicted,oracle,agree,witness`.
std::string report_csv(const harness::SweepReport& r);
/// {"title","config","summary":{...},"rows":[...]}; timing is left out unless asked.
std::string report_json(const harness::SweepReport& r, bool with_timing = false);

}  // namespace gncg::io
