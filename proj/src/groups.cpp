#include "gncg/groups.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gncg/errors.hpp"
#include "gncg/numthy.hpp"

namespace gncg {

namespace {

enum class Kind { Cyclic, Table, Product };

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

struct FiniteGroup::Model {
  Kind kind = Kind::Cyclic;
  std::string name;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> orders;
  // Table
  std::vector<ElementId> table;  // row-major n*n
  std::vector<ElementId> inverses;
  std::vector<std::string> names;
  // Product
  std::vector<FiniteGroup> factors;
  std::vector<std::uint64_t> strides;
};

FiniteGroup FiniteGroup::cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n > kMaxGroupOrder)
    throw CostGuardError("cyclic group of order " + str(n) + " exceeds " + str(kMaxGroupOrder));
  auto m = std::make_shared<Model>();
  m->kind = Kind::Cyclic;
  m->name = "Z" + str(n);
  m->n = n;
  m->orders.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) m->orders[x] = n / std::gcd(n, x);
  return FiniteGroup(std::move(m));
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<ElementId>> table,
                                    std::vector<std::string> element_names) {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedInput("multiplication table is empty");
  if (n > kMaxTableOrder)
    throw CostGuardError("table group of order " + str(n) + " exceeds " + str(kMaxTableOrder));
  if (!element_names.empty() && element_names.size() != n)
    throw MalformedInput("expected " + str(n) + " element names, got " +
                         str(element_names.size()));

  auto m = std::make_shared<Model>();
  m->kind = Kind::Table;
  m->name = std::move(name);
  m->n = n;
  m->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw MalformedInput("row " + str(i) + " has " + str(table[i].size()) + " entries, expected " +
                           str(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw MalformedInput("entry (" + str(i) + "," + str(j) + ") = " + str(table[i][j]) +
                             " is out of range");
      m->table[i * n + j] = table[i][j];
    }
  }
  const auto at = [&](std::size_t i, std::size_t j) { return m->table[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i)
      throw MalformedInput("identity: element 0 is not a two-sided identity at element " + str(i));
  }
  m->inverses.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found = n;
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j) == 0 && at(j, i) == 0) {
        found = j;
        break;
      }
    if (found == n) throw MalformedInput("inverse: element " + str(i) + " has no two-sided inverse");
    m->inverses[i] = static_cast<ElementId>(found);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw MalformedInput("associativity: (a*b)*c != a*(b*c) for a=" + str(a) + ", b=" + str(b) +
                               ", c=" + str(c));

  m->orders.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t k = 1;
    for (std::size_t p = x; p != 0; p = at(p, x)) ++k;
    m->orders[x] = k;
  }
  m->names = std::move(element_names);
  return FiniteGroup(std::move(m));
}

FiniteGroup FiniteGroup::direct_product(std::span<const FiniteGroup> factors) {
  if (factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
  std::uint64_t n = 1;
  for (const auto& f : factors) {
    n *= f.order();
    if (n > kMaxGroupOrder)
      throw CostGuardError("direct product order exceeds " + str(kMaxGroupOrder));
  }
  auto m = std::make_shared<Model>();
  m->kind = Kind::Product;
  m->n = n;
  m->factors.assign(factors.begin(), factors.end());
  m->strides.resize(factors.size());
  std::uint64_t stride = 1;
  for (std::size_t k = factors.size(); k-- > 0;) {
    m->strides[k] = stride;
    stride *= factors[k].order();
  }
  for (std::size_t k = 0; k < factors.size(); ++k)
    m->name += (k ? "x" : "") + factors[k].name();

  m->orders.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t l = 1;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto part = static_cast<ElementId>((x / m->strides[k]) % factors[k].order());
      l = std::lcm(l, factors[k].element_order(part));
    }
    m->orders[x] = l;
  }
  return FiniteGroup(std::move(m));
}

std::uint64_t FiniteGroup::order() const { return m_->n; }

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  switch (m_->kind) {
    case Kind::Cyclic:
      return static_cast<ElementId>((std::uint64_t{a} + b) % m_->n);
    case Kind::Table:
      return m_->table[std::uint64_t{a} * m_->n + b];
    case Kind::Product: {
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < m_->factors.size(); ++k) {
        const auto& f = m_->factors[k];
        const auto s = m_->strides[k];
        const auto pa = static_cast<ElementId>((a / s) % f.order());
        const auto pb = static_cast<ElementId>((b / s) % f.order());
        r += f.multiply(pa, pb) * s;
      }
      return static_cast<ElementId>(r);
    }
  }
  return 0;
}

ElementId FiniteGroup::inverse(ElementId a) const {
  switch (m_->kind) {
    case Kind::Cyclic:
      return static_cast<ElementId>((m_->n - a) % m_->n);
    case Kind::Table:
      return m_->inverses[a];
    case Kind::Product: {
      auto parts = components(a);
      for (std::size_t k = 0; k < parts.size(); ++k) parts[k] = m_->factors[k].inverse(parts[k]);
      return from_components(parts);
    }
  }
  return 0;
}

std::uint64_t FiniteGroup::element_order(ElementId x) const { return m_->orders.at(x); }

const std::string& FiniteGroup::name() const { return m_->name; }

std::string FiniteGroup::element_name(ElementId x) const {
  switch (m_->kind) {
    case Kind::Cyclic:
      return str(x);
    case Kind::Table:
      return m_->names.empty() ? str(x) : m_->names.at(x);
    case Kind::Product: {
      const auto parts = components(x);
      std::string s = "(";
      for (std::size_t k = 0; k < parts.size(); ++k)
        s += (k ? "," : "") + m_->factors[k].element_name(parts[k]);
      return s + ")";
    }
  }
  return {};
}

bool FiniteGroup::is_cyclic_model() const { return m_->kind == Kind::Cyclic; }

bool FiniteGroup::is_abelian() const {
  if (m_->kind == Kind::Cyclic) return true;
  if (m_->kind == Kind::Product)
    return std::all_of(m_->factors.begin(), m_->factors.end(),
                       [](const FiniteGroup& f) { return f.is_abelian(); });
  for (ElementId a = 0; a < m_->n; ++a)
    for (ElementId b = a + 1; b < m_->n; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

const std::vector<FiniteGroup>& FiniteGroup::factors() const { return m_->factors; }

std::vector<ElementId> FiniteGroup::components(ElementId x) const {
  std::vector<ElementId> parts(m_->factors.size());
  for (std::size_t k = 0; k < parts.size(); ++k)
    parts[k] = static_cast<ElementId>((x / m_->strides[k]) % m_->factors[k].order());
  return parts;
}

ElementId FiniteGroup::from_components(std::span<const ElementId> parts) const {
  if (parts.size() != m_->factors.size())
    throw std::invalid_argument("component count does not match factor count");
  std::uint64_t x = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) x += parts[k] * m_->strides[k];
  return static_cast<ElementId>(x);
}

// ---------------------------------------------------------------------------
// Subgroups

std::vector<ElementId> SubgroupRef::elements() const {
  std::vector<ElementId> out;
  for (auto i = members_.find_first(); i != Membership::npos; i = members_.find_next(i))
    out.push_back(static_cast<ElementId>(i));
  return out;
}

SubgroupRef SubgroupRef::from_members(const FiniteGroup& g, Membership members) {
  if (members.size() != g.order())
    throw std::invalid_argument("membership set size does not match group order");
  if (!members.test(0)) throw std::invalid_argument("subgroup must contain the identity");
  std::vector<ElementId> elems;
  for (auto i = members.find_first(); i != Membership::npos; i = members.find_next(i))
    elems.push_back(static_cast<ElementId>(i));
  for (ElementId a : elems) {
    if (!members.test(g.inverse(a)))
      throw std::invalid_argument("subgroup not closed under inverse at element " + str(a));
    for (ElementId b : elems)
      if (!members.test(g.multiply(a, b)))
        throw std::invalid_argument("subgroup not closed under multiplication at (" + str(a) + "," +
                                    str(b) + ")");
  }
  const std::uint64_t h = elems.size();
  if (g.order() % h != 0) throw std::invalid_argument("subgroup order does not divide group order");
  return SubgroupRef(g, std::move(members), h);
}

SubgroupRef whole_group(const FiniteGroup& g) {
  Membership m(g.order());
  m.set();
  return SubgroupRef::from_members(g, std::move(m));
}

SubgroupRef trivial_subgroup(const FiniteGroup& g) {
  Membership m(g.order());
  m.set(0);
  return SubgroupRef::from_members(g, std::move(m));
}

namespace {

// Closure of `seed` under right multiplication by the generators. In a finite
// group this is the generated subgroup.
Membership close(const FiniteGroup& g, Membership seed, std::span<const ElementId> gens) {
  seed.set(0);
  std::vector<ElementId> frontier;
  for (auto i = seed.find_first(); i != Membership::npos; i = seed.find_next(i))
    frontier.push_back(static_cast<ElementId>(i));
  while (!frontier.empty()) {
    const ElementId x = frontier.back();
    frontier.pop_back();
    for (ElementId s : gens) {
      const ElementId y = g.multiply(x, s);
      if (!seed.test(y)) {
        seed.set(y);
        frontier.push_back(y);
      }
    }
  }
  return seed;
}

}  // namespace

SubgroupRef generated_subgroup(const FiniteGroup& g, std::span<const ElementId> generators) {
  for (ElementId s : generators)
    if (s >= g.order()) throw std::invalid_argument("generator out of range");
  Membership seed(g.order());
  for (ElementId s : generators) seed.set(s);
  return SubgroupRef::from_members(g, close(g, std::move(seed), generators));
}

SubgroupRef cyclic_subgroup_of_order(const FiniteGroup& zn, std::uint64_t h) {
  if (!zn.is_cyclic_model()) throw std::invalid_argument("group is not a cyclic model");
  const auto n = zn.order();
  if (h == 0 || n % h != 0)
    throw std::invalid_argument("no subgroup of order " + str(h) + " in Z" + str(n));
  Membership m(n);
  for (std::uint64_t x = 0; x < n; x += n / h) m.set(x);
  return SubgroupRef::from_members(zn, std::move(m));
}

SubgroupRef cyclic_subgroup_of_order(std::uint64_t n, std::uint64_t h) {
  if (h == 0 || n == 0 || n % h != 0)
    throw std::invalid_argument("no subgroup of order " + str(h) + " in Z" + str(n));
  return cyclic_subgroup_of_order(FiniteGroup::cyclic(n), h);
}

std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g) {
  const auto n = g.order();
  if (n > kMaxSubgroupSearchOrder)
    throw CostGuardError("subgroup enumeration limited to order " + str(kMaxSubgroupSearchOrder));

  std::set<Membership> found;
  Membership trivial(n);
  trivial.set(0);
  found.insert(trivial);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId one[] = {x};
    found.insert(close(g, trivial, one));
    for (ElementId y = x + 1; y < n; ++y) {
      const ElementId two[] = {x, y};
      found.insert(close(g, trivial, two));
    }
  }
  // Augment to a fixpoint so subgroups needing more than two generators are
  // reached as well.
  std::vector<Membership> pending(found.begin(), found.end());
  while (!pending.empty()) {
    const Membership k = pending.back();
    pending.pop_back();
    std::vector<ElementId> gens;
    for (auto i = k.find_first(); i != Membership::npos; i = k.find_next(i))
      gens.push_back(static_cast<ElementId>(i));
    for (ElementId x = 0; x < n; ++x) {
      if (k.test(x)) continue;
      gens.push_back(x);
      Membership bigger = close(g, k, gens);
      gens.pop_back();
      if (found.insert(bigger).second) pending.push_back(std::move(bigger));
    }
  }

  std::vector<SubgroupRef> out;
  for (const auto& m : found) out.push_back(SubgroupRef::from_members(g, m));
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

SubgroupRef product_subgroup(const FiniteGroup& product, std::span<const SubgroupRef> parts) {
  const auto& factors = product.factors();
  if (parts.size() != factors.size())
    throw std::invalid_argument("one subgroup per direct factor is required");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].group().order() != factors[k].order() ||
        parts[k].group().name() != factors[k].name())
      throw std::invalid_argument("subgroup " + str(k) + " does not belong to factor " + str(k));
  Membership m(product.order());
  for (ElementId x = 0; x < product.order(); ++x) {
    const auto c = product.components(x);
    bool in = true;
    for (std::size_t k = 0; k < c.size() && in; ++k) in = parts[k].contains(c[k]);
    if (in) m.set(x);
  }
  return SubgroupRef::from_members(product, std::move(m));
}

bool is_eppo(const FiniteGroup& g) {
  for (ElementId x = 1; x < g.order(); ++x)
    if (!numthy::is_prime_power(g.element_order(x))) return false;
  return true;
}

bool is_nilpotent(const FiniteGroup& g) {
  // Nilpotent iff every Sylow subgroup is normal iff, for each p, the
  // p-elements number exactly |G|_p.
  for (const auto& [p, e] : numthy::factorize(g.order())) {
    std::uint64_t sylow = 1;
    for (unsigned i = 0; i < e; ++i) sylow *= p;
    std::uint64_t count = 0;
    for (ElementId x = 0; x < g.order(); ++x)
      if (sylow % g.element_order(x) == 0) ++count;
    if (count != sylow) return false;
  }
  return true;
}

SubgroupRef centre(const FiniteGroup& g) {
  const auto n = g.order();
  Membership m(n);
  for (ElementId a = 0; a < n; ++a) {
    bool central = true;
    for (ElementId b = 0; b < n && central; ++b) central = g.multiply(a, b) == g.multiply(b, a);
    if (central) m.set(a);
  }
  return SubgroupRef::from_members(g, std::move(m));
}

// ---------------------------------------------------------------------------
// Table loading

FiniteGroup load_table(std::istream& in, std::string name) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw MalformedInput("table file is empty");

  std::uint64_t n = 0;
  {
    std::istringstream ss(lines[0]);
    std::string extra;
    if (!(ss >> n) || n == 0 || (ss >> extra)) throw MalformedInput("line 1 must hold the group order");
  }
  if (n > kMaxTableOrder)
    throw CostGuardError("table group of order " + str(n) + " exceeds " + str(kMaxTableOrder));

  std::size_t row0 = 1;
  std::vector<std::string> names;
  if (lines.size() == n + 2) {
    std::istringstream ss(lines[1]);
    for (std::string tok; ss >> tok;) names.push_back(tok);
    if (names.size() != n) throw MalformedInput("line 2 must list " + str(n) + " element names");
    if (std::set<std::string>(names.begin(), names.end()).size() != n)
      throw MalformedInput("element names must be distinct");
    row0 = 2;
  } else if (lines.size() != n + 1) {
    throw MalformedInput("expected " + str(n) + " table rows after the header, found " +
                         str(lines.size() - 1));
  }

  std::vector<std::vector<ElementId>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream ss(lines[row0 + i]);
    for (std::string tok; ss >> tok;) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-')
        throw MalformedInput("row " + str(i) + ": '" + tok + "' is not an element index");
      table[i].push_back(static_cast<ElementId>(v));
    }
  }
  return FiniteGroup::from_table(std::move(name), std::move(table), std::move(names));
}

FiniteGroup load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open table file " + path);
  auto stem = path.substr(path.find_last_of('/') + 1);
  return load_table(in, stem);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

// Enumerates the closure of `gens` under `mul`, identity first, and returns
// the multiplication table.
template <class T, class Mul, class Name>
FiniteGroup closure_group(std::string name, T identity, const std::vector<T>& gens, Mul mul,
                          Name element_name) {
  std::vector<T> elems{identity};
  std::map<T, ElementId> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const T& s : gens) {
      T y = mul(elems[i], s);
      if (index.emplace(y, static_cast<ElementId>(elems.size())).second) elems.push_back(y);
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<ElementId>> table(n, std::vector<ElementId>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(element_name(elems[i]));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
  }
  return FiniteGroup::from_table(std::move(name), std::move(table), std::move(names));
}

using Perm = std::vector<unsigned>;

// (a*b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size());
  for (unsigned x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    s += "(";
    for (unsigned y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      s += std::to_string(y + 1);
      if (!seen[p[y]]) s += " ";
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm identity_perm(unsigned k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

FiniteGroup permutation_group(std::string name, unsigned degree, std::vector<Perm> gens) {
  return closure_group(std::move(name), identity_perm(degree), gens, compose, cycle_notation);
}

}  // namespace

FiniteGroup symmetric_group(unsigned degree) {
  if (degree < 2) throw std::invalid_argument("symmetric group degree must be at least 2");
  Perm swap = identity_perm(degree);
  std::swap(swap[0], swap[1]);
  Perm cycle(degree);
  for (unsigned i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return permutation_group("S" + std::to_string(degree), degree, {swap, cycle});
}

FiniteGroup alternating_group(unsigned degree) {
  if (degree < 3) throw std::invalid_argument("alternating group degree must be at least 3");
  std::vector<Perm> gens;
  for (unsigned k = 2; k < degree; ++k) {
    Perm c = identity_perm(degree);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return permutation_group("A" + std::to_string(degree), degree, gens);
}

FiniteGroup dihedral_group(unsigned polygon) {
  if (polygon < 3) throw std::invalid_argument("dihedral group needs a polygon with >= 3 sides");
  Perm rot(polygon), flip(polygon);
  for (unsigned i = 0; i < polygon; ++i) {
    rot[i] = (i + 1) % polygon;
    flip[i] = (polygon - i) % polygon;
  }
  return permutation_group("D" + std::to_string(polygon), polygon, {rot, flip});
}

FiniteGroup quaternion_group() {
  // Element = (negative, unit) with unit 0..3 = 1, i, j, k.
  using Q = std::pair<bool, int>;
  const auto mul = [](const Q& a, const Q& b) {
    // unit products: sign and result for units u*v
    static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr bool neg[4][4] = {{false, false, false, false},
                                       {false, true, false, true},
                                       {false, true, true, false},
                                       {false, false, true, true}};
    return Q{a.first ^ b.first ^ neg[a.second][b.second], unit[a.second][b.second]};
  };
  const auto name = [](const Q& q) {
    static const char* units[] = {"1", "i", "j", "k"};
    return std::string(q.first ? "-" : "") + units[q.second];
  };
  return closure_group("Q8", Q{false, 0}, std::vector<Q>{{false, 1}, {false, 2}}, mul, name);
}

FiniteGroup catalog_group(const std::string& name) {
  if (name.find('x') != std::string::npos) {
    std::vector<FiniteGroup> parts;
    std::size_t start = 0;
    while (start <= name.size()) {
      const auto stop = name.find('x', start);
      parts.push_back(catalog_group(name.substr(start, stop - start)));
      if (stop == std::string::npos) break;
      start = stop + 1;
    }
    return FiniteGroup::direct_product(parts);
  }
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && std::string("ZSAD").find(name[0]) != std::string::npos) {
    const auto digits = name.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 7) {
      const auto k = std::stoul(digits);
      switch (name[0]) {
        case 'Z':
          if (k >= 1) return FiniteGroup::cyclic(k);
          break;
        case 'S':
          if (k >= 2 && k <= 5) return symmetric_group(static_cast<unsigned>(k));
          break;
        case 'A':
          if (k >= 3 && k <= 5) return alternating_group(static_cast<unsigned>(k));
          break;
        case 'D':
          if (k >= 3 && k <= 128) return dihedral_group(static_cast<unsigned>(k));
          break;
      }
    }
  }
  throw MalformedInput("unknown group name '" + name + "'");
}

GroupCatalog named_catalog(const std::string& collection) {
  std::vector<std::string> names;
  if (collection == "nilpotent") {
    names = {"Z2xZ2", "Z2xZ4", "Z2xZ2xZ3", "Z3xZ3", "Q8", "D4", "Q8xZ3", "S3"};
  } else if (collection == "eppo") {
    names = {"S3", "A4", "Z8", "Z9", "Z2xZ2"};
  } else if (collection == "trivial_centre") {
    names = {"S3", "S4", "A4", "D5"};
  } else if (collection == "all") {
    names = {"Z2xZ2", "Z2xZ4", "Z2xZ2xZ3", "Z3xZ3", "Q8", "D4", "Q8xZ3", "S3",
             "S4",    "A4",    "D5",       "Z8",    "Z9", "Z6", "Z12"};
  } else {
    throw MalformedInput("unknown catalog '" + collection + "'");
  }
  GroupCatalog out;
  for (const auto& nm : names) out.push_back({nm, catalog_group(nm)});
  return out;
}

}  // namespace gncg
