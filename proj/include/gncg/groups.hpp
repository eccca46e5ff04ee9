#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gncg {

using ElementId = std::uint32_t;
using Membership = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::uint64_t kMaxGroupOrder = 10'000;
inline constexpr std::uint64_t kMaxTableOrder = 256;
inline constexpr std::uint64_t kMaxSubgroupSearchOrder = 64;

/// A finite group with elements indexed 0..n-1 and the identity at index 0.
///
/// Immutable value handle; copies share the underlying model. Three
/// realizations exist: cyclic groups (arithmetic mod n), direct products of
/// other groups (mixed-radix indices, first factor most significant), and
/// groups given by a validated multiplication table.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(std::uint64_t n);

  /// Validates every group axiom; throws MalformedInput naming the first
  /// violation.
  static FiniteGroup from_table(std::string name, std::vector<std::vector<ElementId>> table,
                                std::vector<std::string> element_names = {});

  static FiniteGroup direct_product(std::span<const FiniteGroup> factors);

  std::uint64_t order() const;
  static constexpr ElementId identity() { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  std::uint64_t element_order(ElementId x) const;

  const std::string& name() const;
  std::string element_name(ElementId x) const;

  bool is_cyclic_model() const;
  bool is_abelian() const;

  /// Factors of a direct product; empty for the other realizations.
  const std::vector<FiniteGroup>& factors() const;
  std::vector<ElementId> components(ElementId x) const;
  ElementId from_components(std::span<const ElementId> parts) const;

 private:
  struct Model;
  explicit FiniteGroup(std::shared_ptr<const Model> m) : m_(std::move(m)) {}
  std::shared_ptr<const Model> m_;
};

/// A validated subgroup of a FiniteGroup, stored as a membership set.
class SubgroupRef {
 public:
  /// Throws std::invalid_argument when the set is not a subgroup.
  static SubgroupRef from_members(const FiniteGroup& g, Membership members);

  const FiniteGroup& group() const { return group_; }
  std::uint64_t order() const { return order_; }
  bool contains(ElementId x) const { return members_.test(x); }
  const Membership& members() const { return members_; }
  std::vector<ElementId> elements() const;
  bool is_trivial() const { return order_ == 1; }
  bool is_whole_group() const { return order_ == group_.order(); }

 private:
  SubgroupRef(FiniteGroup g, Membership m, std::uint64_t order)
      : group_(std::move(g)), members_(std::move(m)), order_(order) {}
  FiniteGroup group_;
  Membership members_;
  std::uint64_t order_;
};

SubgroupRef whole_group(const FiniteGroup& g);
SubgroupRef trivial_subgroup(const FiniteGroup& g);
SubgroupRef generated_subgroup(const FiniteGroup& g, std::span<const ElementId> generators);

/// The unique subgroup of order h in Z_n: the multiples of n/h.
SubgroupRef cyclic_subgroup_of_order(std::uint64_t n, std::uint64_t h);
/// Same, inside an existing cyclic group.
SubgroupRef cyclic_subgroup_of_order(const FiniteGroup& zn, std::uint64_t h);

/// Every subgroup, sorted by (order, sorted element list). |G| <= 64.
std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g);

/// H_1 x H_2 x ... inside a direct product whose factors own the H_i.
SubgroupRef product_subgroup(const FiniteGroup& product, std::span<const SubgroupRef> parts);

bool is_eppo(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
SubgroupRef centre(const FiniteGroup& g);

/// Reads the text multiplication-table format (order, optional names line,
/// n rows of n indices). Throws MalformedInput.
FiniteGroup load_table(std::istream& in, std::string name = "table");
FiniteGroup load_table_file(const std::string& path);

// ---------------------------------------------------------------------------
// Catalog

FiniteGroup symmetric_group(unsigned degree);
FiniteGroup alternating_group(unsigned degree);
FiniteGroup dihedral_group(unsigned polygon);  // order 2 * polygon
FiniteGroup quaternion_group();

/// Resolves names such as "Z12", "S3", "A4", "D4", "D5", "Q8" and products
/// written with 'x' ("Z2xZ2xZ3", "Q8xZ3"). Throws MalformedInput.
FiniteGroup catalog_group(const std::string& name);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};
using GroupCatalog = std::vector<CatalogEntry>;

/// Named collections: "nilpotent" (the nilpotent test groups plus S3 as the
/// negative control), "eppo", "trivial_centre" and "all".
GroupCatalog named_catalog(const std::string& collection);

}  // namespace gncg
