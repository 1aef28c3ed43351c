// Subgroup lattice enumeration by joining cyclic subgroups, and the maximal
// subgroups read off from it.

#ifndef RELCOMM_SUBGROUP_LATTICE_HPP_
#define RELCOMM_SUBGROUP_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "group_table.hpp"
#include "subgroup.hpp"

namespace relcomm {

inline constexpr std::size_t default_lattice_cap = 50000;
inline constexpr std::size_t maximal_subgroup_order_cap = 1000;

namespace detail {

// Closure of `gens`, abandoned (nullopt) as soon as it exceeds `limit`.
inline std::optional<std::vector<Elem>> bounded_closure(const GroupTable& g,
                                                        const std::vector<Elem>& gens,
                                                        std::size_t limit,
                                                        std::vector<std::uint8_t>& scratch) {
  std::vector<Elem> elems{GroupTable::identity};
  scratch[GroupTable::identity] = 1;
  bool overflow = false;
  for (std::size_t head = 0; head < elems.size() && !overflow; ++head)
    for (Elem s : gens) {
      Elem y = g.mul(elems[head], s);
      if (!scratch[y]) {
        scratch[y] = 1;
        elems.push_back(y);
        if (elems.size() > limit) {
          overflow = true;
          break;
        }
      }
    }
  for (Elem x : elems)
    scratch[x] = 0;
  if (overflow)
    return std::nullopt;
  std::sort(elems.begin(), elems.end());
  return elems;
}

struct LatticeNode {
  std::vector<Elem> members;
  std::vector<Elem> gens;
  bool has_proper_overgroup = false;
};

// All proper subgroups as join-closure of the cyclic subgroups. A proper
// subgroup has at most |G|/2 elements, which bounds every closure.
inline std::vector<LatticeNode> proper_subgroup_nodes(const GroupTable& g, std::size_t cap) {
  const std::size_t n = g.order();
  std::vector<LatticeNode> nodes;
  std::unordered_map<std::vector<Elem>, std::size_t, PermHash> seen;
  std::vector<std::uint8_t> scratch(n, 0);
  if (n == 1)
    return nodes;

  std::vector<Elem> cyclic_gens;
  for (Elem x = 0; x < n; ++x) {
    auto c = cyclic_subgroup(g, x);
    std::vector<Elem> mem(c.members().begin(), c.members().end());
    if (mem.size() == n || seen.contains(mem))
      continue;
    seen.emplace(mem, nodes.size());
    nodes.push_back({std::move(mem), x == 0 ? std::vector<Elem>{} : std::vector<Elem>{x}});
    if (x != 0)
      cyclic_gens.push_back(x);
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (std::binary_search(nodes[i].members.begin(), nodes[i].members.end(), c))
        continue;
      std::vector<Elem> gens = nodes[i].gens;
      gens.push_back(c);
      auto mem = bounded_closure(g, gens, n / 2, scratch);
      if (!mem)
        continue;
      nodes[i].has_proper_overgroup = true;
      if (seen.contains(*mem))
        continue;
      if (nodes.size() >= cap)
        fail(Errc::cap_exceeded, "subgroup lattice exceeds " + std::to_string(cap) + " subgroups");
      seen.emplace(*mem, nodes.size());
      nodes.push_back({std::move(*mem), std::move(gens)});
    }
  }
  return nodes;
}

inline bool subgroup_less(const SubgroupView& a, const SubgroupView& b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

} // namespace detail

// Every subgroup including the trivial one and G, sorted by (order, members).
inline std::vector<SubgroupView> all_subgroups(const GroupTable& g,
                                               std::size_t cap = default_lattice_cap) {
  std::vector<SubgroupView> out;
  for (auto& node : detail::proper_subgroup_nodes(g, cap))
    out.push_back(SubgroupView::trusted(g, std::move(node.members)));
  out.push_back(whole_group(g));
  std::sort(out.begin(), out.end(), detail::subgroup_less);
  return out;
}

// Distinct cyclic subgroups, sorted by (order, members).
inline std::vector<SubgroupView> cyclic_subgroups(const GroupTable& g) {
  std::vector<SubgroupView> out;
  std::unordered_map<std::vector<Elem>, bool, detail::PermHash> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x);
    std::vector<Elem> mem(c.members().begin(), c.members().end());
    if (seen.emplace(mem, true).second)
      out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), detail::subgroup_less);
  return out;
}

// Proper subgroups not contained in any other proper subgroup. Empty for the
// trivial group.
inline std::vector<SubgroupView> maximal_subgroups(const GroupTable& g,
                                                   std::size_t max_order = maximal_subgroup_order_cap,
                                                   std::size_t cap = default_lattice_cap) {
  if (g.order() > max_order)
    fail(Errc::cap_exceeded, "maximal subgroup enumeration limited to order " +
                                 std::to_string(max_order));
  std::vector<SubgroupView> out;
  for (auto& node : detail::proper_subgroup_nodes(g, cap))
    if (!node.has_proper_overgroup)
      out.push_back(SubgroupView::trusted(g, std::move(node.members)));
  std::sort(out.begin(), out.end(), detail::subgroup_less);
  return out;
}

} // namespace relcomm

#endif
