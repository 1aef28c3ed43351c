// Exact commuting and commutator probabilities.
//
// Pr(H, G)   = |{(x, y) in H x G : xy = yx}| / (|H| |G|)
// Pr_g(H, G) = |{(x, y) in H x G : [x, y] = g}| / (|H| |G|)
//
// Every function takes H as a SubgroupView; G is H's parent table.

#ifndef RELCOMM_COMM_STATS_HPP_
#define RELCOMM_COMM_STATS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "conjugacy.hpp"
#include "error.hpp"
#include "exact_ratio.hpp"
#include "group_table.hpp"
#include "subgroup.hpp"

namespace relcomm {

inline constexpr std::uint64_t default_work_cap = 100'000'000;

inline ExactRatio pr_bruteforce(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  std::uint64_t count = 0;
  for (Elem x : h.members()) {
    auto row = g.row(x);
    for (Elem y = 0; y < g.order(); ++y)
      count += row[y] == g.mul(y, x);
  }
  return ExactRatio(BigInt(count), BigInt(h.order()) * g.order());
}

// Four table lookups per pair.
inline ExactRatio pr_g_bruteforce(const SubgroupView& h, Elem target) {
  const GroupTable& g = h.parent();
  std::uint64_t count = 0;
  for (Elem x : h.members())
    for (Elem y = 0; y < g.order(); ++y)
      count += g.commutator(x, y) == target;
  return ExactRatio(BigInt(count), BigInt(h.order()) * g.order());
}

// counts[g] = |{(x, y) in H x G : [x, y] = g}| for every g in one pass.
inline std::vector<std::uint64_t> commutator_histogram(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  std::vector<std::uint64_t> counts(g.order(), 0);
  for (Elem x : h.members())
    for (Elem y = 0; y < g.order(); ++y)
      ++counts[g.commutator(x, y)];
  return counts;
}

// (1/|H|) sum over x in H with g^-1 x in Cl_G(x) of 1/|Cl_G(x)|. Since
// 1/|Cl_G(x)| = |C_G(x)|/|G|, the sum is accumulated as an integer.
inline ExactRatio pr_g_class_formula(const SubgroupView& h, Elem target,
                                     const ConjugacyPartition& cp) {
  const GroupTable& g = h.parent();
  const Elem target_inv = g.inv(target);
  std::uint64_t sum = 0;
  for (Elem x : h.members())
    if (cp.class_of[g.mul(target_inv, x)] == cp.class_of[x])
      sum += cp.centralizer_order[x];
  return ExactRatio(BigInt(sum), BigInt(h.order()) * g.order());
}

inline ExactRatio pr_g_class_formula(const SubgroupView& h, Elem target) {
  return pr_g_class_formula(h, target, conjugacy_partition(h.parent()));
}

struct PairProfile {
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::vector<Elem> z_hg;              // Z(H, G)
  std::vector<Elem> k_set;             // K(G, H)
  std::vector<Elem> derived_pair;      // [G, H]
  std::vector<std::uint64_t> cs;       // sorted distinct {|Cl_G(x)| : x in H}
  std::optional<std::uint64_t> s_h;    // min over H - Z(H, G)
  std::optional<std::uint64_t> l_h;    // max over H - Z(H, G)
  std::uint64_t index_h_z = 1;         // |H : Z(H, G)|
  std::optional<std::uint64_t> smallest_prime;  // of |G|
  bool normal = false;                 // H normal in G

  bool degenerate() const { return z_hg.size() == subgroup_order; }
  bool whole() const { return subgroup_order == group_order; }
  std::size_t k_size() const { return k_set.size(); }
  std::size_t derived_pair_order() const { return derived_pair.size(); }
  std::size_t z_order() const { return z_hg.size(); }
};

inline PairProfile pair_profile(const SubgroupView& h, const ConjugacyPartition& cp) {
  const GroupTable& g = h.parent();
  PairProfile pp;
  pp.group_order = g.order();
  pp.subgroup_order = h.order();
  auto z = relative_center(h);
  pp.z_hg.assign(z.members().begin(), z.members().end());
  pp.k_set = commutator_set(h);
  auto d = commutator_subgroup(h);
  pp.derived_pair.assign(d.members().begin(), d.members().end());
  std::set<std::uint64_t> sizes;
  for (Elem x : h.members()) {
    std::uint64_t s = cp.class_size(x);
    sizes.insert(s);
    if (!z.contains(x)) {
      pp.s_h = pp.s_h ? std::min(*pp.s_h, s) : s;
      pp.l_h = pp.l_h ? std::max(*pp.l_h, s) : s;
    }
  }
  pp.cs.assign(sizes.begin(), sizes.end());
  pp.index_h_z = h.order() / z.order();
  pp.smallest_prime = smallest_prime_divisor(g);
  pp.normal = is_normal(h);
  return pp;
}

inline PairProfile pair_profile(const SubgroupView& h) {
  return pair_profile(h, conjugacy_partition(h.parent()));
}

// (1, n_1, ..., n_r) with 1 < n_1 < ... < n_r.
inline std::vector<std::uint64_t> conjugate_type_vector(const ConjugacyPartition& cp) {
  std::set<std::uint64_t> sizes;
  for (const auto& c : cp.classes)
    sizes.insert(c.size());
  return {sizes.begin(), sizes.end()};
}

inline std::vector<std::uint64_t> conjugate_type_vector(const GroupTable& g) {
  return conjugate_type_vector(conjugacy_partition(g));
}

inline std::size_t conjugate_rank(const GroupTable& g) {
  return conjugate_type_vector(g).size() - 1;
}

// Left-normed [h_1, ..., h_{m+1}] = [[...[h_1, h_2], ...], h_{m+1}].
inline Elem left_normed_commutator(const GroupTable& g, std::span<const Elem> xs) {
  if (xs.empty())
    return GroupTable::identity;
  Elem c = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    c = g.commutator(c, xs[i]);
  return c;
}

// dist[c] = number of tuples (h_1..h_{m+1}) whose left-normed commutator is
// c. Built level by level: the distribution of [h_1..h_k] is folded with
// H_{k+1}, so the cost is O(|G| * sum |H_i|) rather than the tuple count.
inline std::vector<BigInt> multi_commutator_distribution(std::span<const SubgroupView> subgroups,
                                                         std::uint64_t work_cap = default_work_cap) {
  if (subgroups.size() < 2)
    fail(Errc::invalid_argument, "need at least two subgroups (m >= 1)");
  const GroupTable& g = subgroups[0].parent();
  BigInt tuples = 1;
  for (const auto& s : subgroups) {
    if (&s.parent() != &g)
      fail(Errc::invalid_argument, "subgroups must share one ambient group");
    tuples *= s.order();
  }
  if (tuples > work_cap)
    fail(Errc::work_cap_exceeded, "tuple count " + tuples.str() + " exceeds work cap " +
                                      std::to_string(work_cap));
  std::vector<BigInt> dist(g.order(), 0);
  for (Elem x : subgroups[0].members())
    dist[x] += 1;
  for (std::size_t k = 1; k < subgroups.size(); ++k) {
    std::vector<BigInt> next(g.order(), 0);
    for (Elem c = 0; c < g.order(); ++c) {
      if (dist[c] == 0)
        continue;
      for (Elem y : subgroups[k].members())
        next[g.commutator(c, y)] += dist[c];
    }
    dist = std::move(next);
  }
  return dist;
}

// Pr_g(H_1, ..., H_{m+1}).
inline ExactRatio pr_multi(std::span<const SubgroupView> subgroups, Elem target,
                           std::uint64_t work_cap = default_work_cap) {
  auto dist = multi_commutator_distribution(subgroups, work_cap);
  BigInt total = 1;
  for (const auto& s : subgroups)
    total *= s.order();
  return ExactRatio(dist.at(target), total);
}

} // namespace relcomm

#endif
