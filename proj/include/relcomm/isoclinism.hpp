// Isoclinism of pairs (G, H): an isomorphism alpha of G/Z(H,G) carrying
// H/Z(H,G) onto its counterpart, and an isomorphism beta of [H,G], such that
// beta([h, g]) = [alpha(h), alpha(g)] on cosets. Plus the (m+1)-tuple
// version over Z_m, verification only.

#ifndef RELCOMM_ISOCLINISM_HPP_
#define RELCOMM_ISOCLINISM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "comm_stats.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "exact_ratio.hpp"
#include "group_table.hpp"
#include "subgroup.hpp"

namespace relcomm {

inline constexpr std::size_t default_quotient_cap = 64;
inline constexpr std::uint64_t default_search_budget = 1'000'000;

// Everything about one pair that the witness checks and the search need.
struct PairContext {
  SubgroupView h;
  SubgroupView z;                // Z(H, G)
  Quotient q;                    // G / Z(H, G)
  std::vector<Elem> h_bar;       // coset ids of H / Z(H, G), sorted
  std::vector<std::uint8_t> in_h_bar;
  SubgroupView derived;          // [H, G]
  std::vector<Elem> comm;        // a(h_bar[i], c) at i * |Q| + c

  const GroupTable& group() const { return h.parent(); }
  std::size_t quotient_order() const { return q.table.order(); }

  // a_(H,G)(hZ, gZ) = [h, g] on coset representatives; hbar must lie in h_bar.
  Elem commutation(Elem hbar, Elem gbar) const {
    auto it = std::lower_bound(h_bar.begin(), h_bar.end(), hbar);
    return comm[std::size_t(it - h_bar.begin()) * quotient_order() + gbar];
  }
};

inline PairContext make_pair_context(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  auto z = relative_center(h);
  auto q = quotient(z);
  std::vector<std::uint8_t> in_h_bar(q.table.order(), 0);
  for (Elem x : h.members())
    in_h_bar[q.projection[x]] = 1;
  std::vector<Elem> h_bar;
  for (Elem c = 0; c < q.table.order(); ++c)
    if (in_h_bar[c])
      h_bar.push_back(c);
  auto derived = commutator_subgroup(h);
  const std::size_t qn = q.table.order();
  std::vector<Elem> comm(h_bar.size() * qn);
  for (std::size_t i = 0; i < h_bar.size(); ++i)
    for (Elem c = 0; c < qn; ++c)
      comm[i * qn + c] = g.commutator(q.representatives[h_bar[i]], q.representatives[c]);
  return PairContext{h, std::move(z), std::move(q), std::move(h_bar), std::move(in_h_bar),
                     std::move(derived), std::move(comm)};
}

// The commutation map as a |H/Z| x |G/Z| table of elements of [H, G].
inline std::vector<std::vector<Elem>> commutation_map(const PairContext& ctx) {
  std::vector<std::vector<Elem>> out;
  for (Elem hb : ctx.h_bar) {
    std::vector<Elem> row;
    for (Elem c = 0; c < ctx.quotient_order(); ++c)
      row.push_back(ctx.commutation(hb, c));
    out.push_back(std::move(row));
  }
  return out;
}

// [x, y] depends only on the cosets of x and y, checked over all of H x G.
inline bool commutation_map_well_defined(const PairContext& ctx) {
  const GroupTable& g = ctx.group();
  for (Elem x : ctx.h.members())
    for (Elem y = 0; y < g.order(); ++y)
      if (g.commutator(x, y) != ctx.commutation(ctx.q.projection[x], ctx.q.projection[y]))
        return false;
  return true;
}

struct IsoclinismWitness {
  std::vector<Elem> alpha;        // coset of G1/Z1 -> coset of G2/Z2
  std::vector<Elem> beta_domain;  // members of [H1, G1], sorted
  std::vector<Elem> beta;         // image in G2 of each beta_domain entry

  std::optional<Elem> beta_of(Elem x) const {
    auto it = std::lower_bound(beta_domain.begin(), beta_domain.end(), x);
    if (it == beta_domain.end() || *it != x)
      return std::nullopt;
    return beta[std::size_t(it - beta_domain.begin())];
  }
};

struct VerifyResult {
  bool ok = true;
  std::string violation;  // first failure, empty when ok

  static VerifyResult failure(std::string what) { return {false, std::move(what)}; }
};

namespace detail {

// Checks that `map` (indexed by elements of `dom`, values in `cod`) is a
// bijective homomorphism dom_members -> cod_members.
inline std::optional<std::string> check_isomorphism(const GroupTable& dom_g,
                                                    std::span<const Elem> dom,
                                                    const GroupTable& cod_g,
                                                    const SubgroupView* cod,
                                                    const std::vector<Elem>& images,
                                                    const std::string& name) {
  auto pos = [&](Elem x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(dom.begin(), dom.end(), x);
    if (it == dom.end() || *it != x)
      return std::nullopt;
    return std::size_t(it - dom.begin());
  };
  std::vector<std::uint8_t> hit(cod_g.order(), 0);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Elem y = images[i];
    if (y >= cod_g.order() || (cod && !cod->contains(y)))
      return name + " maps " + std::to_string(dom[i]) + " outside its codomain";
    if (hit[y])
      return name + " is not injective: " + std::to_string(y) + " hit twice";
    hit[y] = 1;
  }
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      auto k = pos(dom_g.mul(dom[i], dom[j]));
      if (!k)
        return name + " domain not closed at (" + std::to_string(dom[i]) + ", " +
               std::to_string(dom[j]) + ")";
      if (images[*k] != cod_g.mul(images[i], images[j]))
        return name + " is not a homomorphism at (" + std::to_string(dom[i]) + ", " +
               std::to_string(dom[j]) + ")";
    }
  return std::nullopt;
}

inline std::vector<Elem> iota(std::size_t n) {
  std::vector<Elem> v(n);
  for (Elem i = 0; i < n; ++i)
    v[i] = i;
  return v;
}

} // namespace detail

// Checks alpha and beta are isomorphisms, alpha carries H1/Z1 onto H2/Z2, and
// the commutation diagram commutes. Throws DomainMismatch when the witness
// tables do not fit the pairs.
inline VerifyResult verify_pair_isoclinism(const PairContext& p1, const PairContext& p2,
                                           const IsoclinismWitness& w) {
  if (w.alpha.size() != p1.quotient_order() || p1.quotient_order() != p2.quotient_order())
    fail(Errc::domain_mismatch, "alpha needs " + std::to_string(p1.quotient_order()) +
                                    " entries onto a quotient of the same order");
  if (!std::equal(w.beta_domain.begin(), w.beta_domain.end(), p1.derived.members().begin(),
                  p1.derived.members().end()) ||
      w.beta.size() != w.beta_domain.size() || p1.derived.order() != p2.derived.order())
    fail(Errc::domain_mismatch, "beta must be defined exactly on [H1,G1] with |[H1,G1]| = |[H2,G2]|");

  auto qdom = detail::iota(p1.quotient_order());
  if (auto e = detail::check_isomorphism(p1.q.table, qdom, p2.q.table, nullptr, w.alpha, "alpha"))
    return VerifyResult::failure(*e);
  for (Elem hb : p1.h_bar)
    if (!p2.in_h_bar[w.alpha[hb]])
      return VerifyResult::failure("alpha maps H1/Z1 coset " + std::to_string(hb) +
                                   " outside H2/Z2");
  if (p1.h_bar.size() != p2.h_bar.size())
    return VerifyResult::failure("alpha(H1/Z1) != H2/Z2: orders differ");
  if (auto e = detail::check_isomorphism(p1.group(), w.beta_domain, p2.group(), &p2.derived,
                                         w.beta, "beta"))
    return VerifyResult::failure(*e);
  for (Elem hb : p1.h_bar)
    for (Elem c = 0; c < p1.quotient_order(); ++c) {
      Elem left = *w.beta_of(p1.commutation(hb, c));
      Elem right = p2.commutation(w.alpha[hb], w.alpha[c]);
      if (left != right)
        return VerifyResult::failure("diagram fails at (h=" + std::to_string(hb) + ", g=" +
                                     std::to_string(c) + "): beta gives " +
                                     std::to_string(left) + ", commutator gives " +
                                     std::to_string(right));
    }
  return {};
}

inline IsoclinismWitness identity_witness(const PairContext& p) {
  IsoclinismWitness w;
  w.alpha = detail::iota(p.quotient_order());
  w.beta_domain.assign(p.derived.members().begin(), p.derived.members().end());
  w.beta = w.beta_domain;
  return w;
}

// The witness from pair 2 back to pair 1.
inline IsoclinismWitness inverse_witness(const IsoclinismWitness& w, const PairContext& p2) {
  IsoclinismWitness inv;
  inv.alpha.assign(w.alpha.size(), 0);
  for (Elem c = 0; c < w.alpha.size(); ++c)
    inv.alpha.at(w.alpha[c]) = c;
  inv.beta_domain.assign(p2.derived.members().begin(), p2.derived.members().end());
  inv.beta.assign(inv.beta_domain.size(), 0);
  for (std::size_t i = 0; i < w.beta_domain.size(); ++i) {
    auto it = std::lower_bound(inv.beta_domain.begin(), inv.beta_domain.end(), w.beta[i]);
    if (it == inv.beta_domain.end() || *it != w.beta[i])
      fail(Errc::domain_mismatch, "beta image outside [H2,G2]");
    inv.beta[std::size_t(it - inv.beta_domain.begin())] = w.beta_domain[i];
  }
  return inv;
}

enum class SearchStatus { found, not_found, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<IsoclinismWitness> witness;
  std::uint64_t nodes = 0;
  std::string reason;
};

namespace detail {

struct QuotientSignature {
  std::uint64_t order;
  std::size_t class_size;
  bool in_h;
  auto operator<=>(const QuotientSignature&) const = default;
};

inline std::vector<QuotientSignature> signatures(const PairContext& p) {
  auto cp = conjugacy_partition(p.q.table);
  std::vector<QuotientSignature> out;
  for (Elem c = 0; c < p.quotient_order(); ++c)
    out.push_back({element_order(p.q.table, c), cp.class_size(c), p.in_h_bar[c] != 0});
  return out;
}

// Generators of Q, picked greedily by descending element order.
inline std::vector<Elem> quotient_generators(const GroupTable& q) {
  std::vector<Elem> order = iota(q.order());
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return element_order(q, a) > element_order(q, b);
  });
  std::vector<Elem> gens;
  std::vector<std::uint8_t> in(q.order(), 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (Elem x : order) {
    if (covered == q.order())
      break;
    if (in[x])
      continue;
    gens.push_back(x);
    auto s = subgroup_generated(q, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Elem y : s.members())
      in[y] = 1;
    covered = s.order();
  }
  return gens;
}

// Homomorphic extension of gens[i] -> images[i] to <gens>, or nullopt if the
// assignment is inconsistent or not injective.
inline std::optional<std::vector<Elem>> extend_hom(const GroupTable& src, const GroupTable& dst,
                                                   std::span<const Elem> gens,
                                                   std::span<const Elem> images) {
  const Elem unset = Elem(-1);
  std::vector<Elem> map(src.order(), unset);
  std::vector<std::uint8_t> used(dst.order(), 0);
  std::vector<Elem> queue{0};
  map[0] = 0;
  used[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = src.mul(x, gens[j]);
      Elem fy = dst.mul(map[x], images[j]);
      if (map[y] == unset) {
        if (used[fy])
          return std::nullopt;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

// beta from the diagram: beta([h, g]) := [alpha(h), alpha(g)], then extended
// multiplicatively over <K> = [H1, G1]. nullopt when not a well-defined
// injective homomorphism onto [H2, G2].
inline std::optional<std::vector<Elem>> derive_beta(const PairContext& p1, const PairContext& p2,
                                                    const std::vector<Elem>& alpha) {
  const GroupTable& g1 = p1.group();
  const GroupTable& g2 = p2.group();
  const Elem unset = Elem(-1);
  std::vector<Elem> map(g1.order(), unset);
  std::vector<Elem> gens;
  for (Elem hb : p1.h_bar)
    for (Elem c = 0; c < p1.quotient_order(); ++c) {
      Elem x = p1.commutation(hb, c);
      Elem y = p2.commutation(alpha[hb], alpha[c]);
      if (map[x] == unset) {
        map[x] = y;
        gens.push_back(x);
      } else if (map[x] != y) {
        return std::nullopt;
      }
    }
  std::vector<std::uint8_t> used(g2.order(), 0);
  if (map[0] != 0)
    return std::nullopt;
  std::vector<Elem> queue{0};
  std::vector<std::uint8_t> reached(g1.order(), 0);
  reached[0] = 1;
  used[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (Elem k : gens) {
      Elem y = g1.mul(x, k);
      Elem fy = g2.mul(map[x], map[k]);
      if (!reached[y]) {
        if (map[y] != unset && map[y] != fy)
          return std::nullopt;
        if (map[y] == unset && used[fy])
          return std::nullopt;
        map[y] = fy;
        used[fy] = 1;
        reached[y] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  std::vector<Elem> beta;
  for (Elem x : p1.derived.members()) {
    if (!reached[x] || !p2.derived.contains(map[x]))
      return std::nullopt;
    beta.push_back(map[x]);
  }
  return beta;
}

} // namespace detail

// Backtracking over images of a generating set of G1/Z1, candidates
// restricted to matching (element order, class size, membership in H/Z) and
// tried in increasing index order, so the first witness found is
// deterministic. Every partial assignment is extended homomorphically and
// pruned on inconsistency; beta is then derived from the diagram.
inline SearchResult find_pair_isoclinism(const PairContext& p1, const PairContext& p2,
                                         std::uint64_t budget = default_search_budget,
                                         std::size_t quotient_cap = default_quotient_cap) {
  SearchResult res;
  if (p1.quotient_order() != p2.quotient_order()) {
    res.reason = "|G1/Z1| = " + std::to_string(p1.quotient_order()) + " but |G2/Z2| = " +
                 std::to_string(p2.quotient_order());
    return res;
  }
  if (p1.h_bar.size() != p2.h_bar.size()) {
    res.reason = "|H1/Z1| != |H2/Z2|";
    return res;
  }
  if (p1.derived.order() != p2.derived.order()) {
    res.reason = "|[H1,G1]| != |[H2,G2]|";
    return res;
  }
  if (p1.quotient_order() > quotient_cap)
    fail(Errc::cap_exceeded, "quotient order " + std::to_string(p1.quotient_order()) +
                                 " exceeds search cap " + std::to_string(quotient_cap));

  const auto sig1 = detail::signatures(p1);
  const auto sig2 = detail::signatures(p2);
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      res.reason = "quotient element signatures differ";
      return res;
    }
  }
  const auto gens = detail::quotient_generators(p1.q.table);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem c = 0; c < p2.quotient_order(); ++c)
      if (sig2[c] == sig1[gens[i]])
        candidates[i].push_back(c);

  std::vector<Elem> images;
  bool exhausted = false;
  std::optional<IsoclinismWitness> found;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (found || exhausted)
      return;
    if (depth == gens.size()) {
      auto alpha = detail::extend_hom(p1.q.table, p2.q.table, gens, images);
      if (!alpha)
        return;
      for (Elem hb : p1.h_bar)
        if (!p2.in_h_bar[(*alpha)[hb]])
          return;
      auto beta = detail::derive_beta(p1, p2, *alpha);
      if (!beta)
        return;
      IsoclinismWitness w{std::move(*alpha),
                          {p1.derived.members().begin(), p1.derived.members().end()},
                          std::move(*beta)};
      if (verify_pair_isoclinism(p1, p2, w).ok)
        found = std::move(w);
      return;
    }
    for (Elem c : candidates[depth]) {
      if (++res.nodes > budget) {
        exhausted = true;
        return;
      }
      images.push_back(c);
      if (detail::extend_hom(p1.q.table, p2.q.table,
                             std::span<const Elem>(gens.data(), depth + 1), images))
        self(self, depth + 1);
      images.pop_back();
      if (found || exhausted)
        return;
    }
  };
  search(search, 0);

  if (found) {
    res.status = SearchStatus::found;
    res.witness = std::move(found);
  } else if (exhausted) {
    res.status = SearchStatus::budget_exhausted;
    res.reason = "budget of " + std::to_string(budget) + " nodes exhausted";
  } else {
    res.reason = "no isoclinism exists";
  }
  return res;
}

struct InvarianceEntry {
  Elem g = 0;
  Elem beta_g = 0;
  ExactRatio pr1;
  ExactRatio pr2;
  bool equal = false;
};

struct InvarianceReport {
  std::vector<InvarianceEntry> entries;
  bool all_equal() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.equal; });
  }
};

// Pr_g(H1, G1) against Pr_beta(g)(H2, G2) for every g in [H1, G1].
inline InvarianceReport verify_invariance(const PairContext& p1, const PairContext& p2,
                                          const IsoclinismWitness& w) {
  auto v = verify_pair_isoclinism(p1, p2, w);
  if (!v.ok)
    fail(Errc::hypothesis_not_met, "witness rejected: " + v.violation);
  auto hist1 = commutator_histogram(p1.h);
  auto hist2 = commutator_histogram(p2.h);
  const BigInt t1 = BigInt(p1.h.order()) * p1.group().order();
  const BigInt t2 = BigInt(p2.h.order()) * p2.group().order();
  InvarianceReport rep;
  for (std::size_t i = 0; i < w.beta_domain.size(); ++i) {
    InvarianceEntry e;
    e.g = w.beta_domain[i];
    e.beta_g = w.beta[i];
    e.pr1 = ExactRatio(BigInt(hist1[e.g]), t1);
    e.pr2 = ExactRatio(BigInt(hist2[e.beta_g]), t2);
    e.equal = e.pr1 == e.pr2;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// ---- (m+1)-tuples ---------------------------------------------------------

struct TupleContext {
  std::vector<SubgroupView> subgroups;   // H_1 .. H_{m+1} of one group
  std::size_t m = 1;
  SubgroupView zm;                       // Z_m(G)
  Quotient q;                            // G / Z_m(G)
  std::vector<std::vector<Elem>> images; // coset ids of H_i Z_m / Z_m, sorted
  std::vector<std::vector<Elem>> reps;   // per subgroup: coset id -> least element of H_i in it
  SubgroupView domain;                   // [H_1, ..., H_{m+1}], left-normed

  const GroupTable& group() const { return subgroups.front().parent(); }
};

inline TupleContext make_tuple_context(std::vector<SubgroupView> subgroups) {
  if (subgroups.size() < 2)
    fail(Errc::invalid_argument, "a tuple needs at least two subgroups");
  const GroupTable& g = subgroups.front().parent();
  for (const auto& s : subgroups)
    if (&s.parent() != &g)
      fail(Errc::invalid_argument, "tuple subgroups must share one group");
  const std::size_t m = subgroups.size() - 1;
  auto zm = upper_central_term(g, m);
  auto q = quotient(zm);
  std::vector<std::vector<Elem>> images, reps;
  const Elem unset = Elem(-1);
  for (const auto& s : subgroups) {
    std::vector<Elem> rep(q.table.order(), unset);
    for (Elem x : s.members()) {
      Elem c = q.projection[x];
      if (rep[c] == unset)
        rep[c] = x;  // members are sorted, so this is the least
    }
    std::vector<Elem> img;
    for (Elem c = 0; c < q.table.order(); ++c)
      if (rep[c] != unset)
        img.push_back(c);
    images.push_back(std::move(img));
    reps.push_back(std::move(rep));
  }
  SubgroupView domain = commutator_subgroup(subgroups[0], subgroups[1]);
  for (std::size_t i = 2; i < subgroups.size(); ++i)
    domain = commutator_subgroup(domain, subgroups[i]);
  return TupleContext{std::move(subgroups), m, std::move(zm), std::move(q),
                      std::move(images), std::move(reps), std::move(domain)};
}

struct TupleWitness {
  std::vector<Elem> alpha;        // coset of G/Z_m(G) -> coset of K/Z_m(K)
  std::vector<Elem> beta_domain;  // members of [H_1, ..., H_{m+1}]
  std::vector<Elem> beta;

  std::optional<Elem> beta_of(Elem x) const {
    auto it = std::lower_bound(beta_domain.begin(), beta_domain.end(), x);
    if (it == beta_domain.end() || *it != x)
      return std::nullopt;
    return beta[std::size_t(it - beta_domain.begin())];
  }
};

namespace detail {

// Calls f(coset tuple) for every tuple in images[0] x ... x images[m].
template <typename F>
void for_each_coset_tuple(const std::vector<std::vector<Elem>>& images, F&& f) {
  std::vector<std::size_t> idx(images.size(), 0);
  std::vector<Elem> tuple(images.size());
  for (const auto& img : images)
    if (img.empty())
      return;
  for (;;) {
    for (std::size_t i = 0; i < images.size(); ++i)
      tuple[i] = images[i][idx[i]];
    if (!f(tuple))
      return;
    std::size_t k = images.size();
    while (k > 0) {
      --k;
      if (++idx[k] < images[k].size())
        break;
      idx[k] = 0;
      if (k == 0)
        return;
    }
  }
}

} // namespace detail

// The left-normed commutator is constant on Z_m cosets, checked over every
// element tuple (bounded by the work cap).
inline bool tuple_map_well_defined(const TupleContext& t, std::uint64_t work_cap = default_work_cap) {
  BigInt tuples = 1;
  for (const auto& s : t.subgroups)
    tuples *= s.order();
  if (tuples > work_cap)
    fail(Errc::work_cap_exceeded, "tuple count " + tuples.str() + " exceeds work cap");
  const GroupTable& g = t.group();
  std::vector<std::vector<Elem>> members;
  for (const auto& s : t.subgroups)
    members.emplace_back(s.members().begin(), s.members().end());
  bool ok = true;
  std::vector<Elem> xs(members.size()), reps(members.size());
  detail::for_each_coset_tuple(members, [&](const std::vector<Elem>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
      reps[i] = t.reps[i][t.q.projection[tuple[i]]];
    ok = left_normed_commutator(g, tuple) == left_normed_commutator(g, reps);
    return ok;
  });
  return ok;
}

inline VerifyResult verify_tuple_isoclinism(const TupleContext& t1, const TupleContext& t2,
                                            const TupleWitness& w,
                                            std::uint64_t work_cap = default_work_cap) {
  if (t1.m != t2.m)
    fail(Errc::domain_mismatch, "tuples of different length");
  if (w.alpha.size() != t1.q.table.order() || t1.q.table.order() != t2.q.table.order())
    fail(Errc::domain_mismatch, "alpha must map G/Z_m(G) onto a quotient of equal order");
  if (!std::equal(w.beta_domain.begin(), w.beta_domain.end(), t1.domain.members().begin(),
                  t1.domain.members().end()) ||
      w.beta.size() != w.beta_domain.size() || t1.domain.order() != t2.domain.order())
    fail(Errc::domain_mismatch, "beta must be defined exactly on the iterated commutator subgroup");

  auto qdom = detail::iota(t1.q.table.order());
  if (auto e = detail::check_isomorphism(t1.q.table, qdom, t2.q.table, nullptr, w.alpha, "alpha"))
    return VerifyResult::failure(*e);
  for (std::size_t i = 0; i < t1.images.size(); ++i) {
    std::vector<Elem> mapped;
    for (Elem c : t1.images[i])
      mapped.push_back(w.alpha[c]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != t2.images[i])
      return VerifyResult::failure("alpha_" + std::to_string(i + 1) +
                                   " does not carry H_i/Z_m(H_i) onto K_i/Z_m(K_i)");
  }
  if (auto e = detail::check_isomorphism(t1.group(), w.beta_domain, t2.group(), &t2.domain,
                                         w.beta, "beta"))
    return VerifyResult::failure(*e);

  BigInt tuples = 1;
  for (const auto& img : t1.images)
    tuples *= img.size();
  if (tuples > work_cap)
    fail(Errc::work_cap_exceeded, "coset tuple count exceeds work cap");
  VerifyResult res;
  std::vector<Elem> xs(t1.images.size()), ys(t1.images.size());
  detail::for_each_coset_tuple(t1.images, [&](const std::vector<Elem>& cosets) {
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      xs[i] = t1.reps[i][cosets[i]];
      ys[i] = t2.reps[i][w.alpha[cosets[i]]];
    }
    Elem left = *w.beta_of(left_normed_commutator(t1.group(), xs));
    Elem right = left_normed_commutator(t2.group(), ys);
    if (left != right) {
      std::string at;
      for (Elem c : cosets)
        at += (at.empty() ? "" : ", ") + std::to_string(c);
      res = VerifyResult::failure("tuple diagram fails at cosets (" + at + ")");
      return false;
    }
    return true;
  });
  return res;
}

// Pr_g(H_1..H_{m+1}) against Pr_beta(g)(K_1..K_{m+1}) for every g in the
// domain of beta.
inline InvarianceReport tuple_invariance(const TupleContext& t1, const TupleContext& t2,
                                         const TupleWitness& w,
                                         std::uint64_t work_cap = default_work_cap) {
  auto v = verify_tuple_isoclinism(t1, t2, w, work_cap);
  if (!v.ok)
    fail(Errc::hypothesis_not_met, "tuple witness rejected: " + v.violation);
  auto d1 = multi_commutator_distribution(t1.subgroups, work_cap);
  auto d2 = multi_commutator_distribution(t2.subgroups, work_cap);
  BigInt n1 = 1, n2 = 1;
  for (const auto& s : t1.subgroups)
    n1 *= s.order();
  for (const auto& s : t2.subgroups)
    n2 *= s.order();
  InvarianceReport rep;
  for (std::size_t i = 0; i < w.beta_domain.size(); ++i) {
    InvarianceEntry e;
    e.g = w.beta_domain[i];
    e.beta_g = w.beta[i];
    e.pr1 = ExactRatio(d1[e.g], n1);
    e.pr2 = ExactRatio(d2[e.beta_g], n2);
    e.equal = e.pr1 == e.pr2;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

inline TupleWitness identity_tuple_witness(const TupleContext& t) {
  TupleWitness w;
  w.alpha = detail::iota(t.q.table.order());
  w.beta_domain.assign(t.domain.members().begin(), t.domain.members().end());
  w.beta = w.beta_domain;
  return w;
}

// Pushes a pair witness down to G/Z_m(G) (Z(H,G) <= Z_m(G)) and restricts
// beta to the iterated commutator subgroup. The result still has to verify.
inline TupleWitness lift_pair_witness(const PairContext& p1, const PairContext& p2,
                                      const IsoclinismWitness& w, const TupleContext& t1,
                                      const TupleContext& t2) {
  if (&p1.group() != &t1.group() || &p2.group() != &t2.group())
    fail(Errc::domain_mismatch, "pair and tuple contexts live in different groups");
  TupleWitness tw;
  for (Elem c = 0; c < t1.q.table.order(); ++c) {
    Elem x = t1.q.representatives[c];
    Elem pair_image = w.alpha.at(p1.q.projection[x]);
    Elem y = p2.q.representatives[pair_image];
    tw.alpha.push_back(t2.q.projection[y]);
  }
  tw.beta_domain.assign(t1.domain.members().begin(), t1.domain.members().end());
  for (Elem d : tw.beta_domain) {
    auto b = w.beta_of(d);
    if (!b)
      fail(Errc::domain_mismatch, "iterated commutator subgroup not inside [H1,G1]");
    tw.beta.push_back(*b);
  }
  return tw;
}

} // namespace relcomm

#endif
