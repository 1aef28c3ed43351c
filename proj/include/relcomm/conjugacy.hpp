// Conjugacy classes and central series.

#ifndef RELCOMM_CONJUGACY_HPP_
#define RELCOMM_CONJUGACY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "group_table.hpp"
#include "subgroup.hpp"

namespace relcomm {

struct ConjugacyPartition {
  std::vector<std::vector<Elem>> classes;       // each sorted; ordered by least element
  std::vector<std::uint32_t> class_of;          // element -> class id
  std::vector<std::uint64_t> centralizer_order; // |C_G(x)| per element

  std::size_t class_size(Elem x) const { return classes[class_of[x]].size(); }
};

inline ConjugacyPartition conjugacy_partition(const GroupTable& g) {
  const std::size_t n = g.order();
  const std::uint32_t unset = std::uint32_t(-1);
  ConjugacyPartition cp;
  cp.class_of.assign(n, unset);
  cp.centralizer_order.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (cp.class_of[x] != unset)
      continue;
    const auto id = std::uint32_t(cp.classes.size());
    std::vector<Elem> cls;
    for (Elem y = 0; y < n; ++y) {
      Elem c = g.conj(y, x);
      if (cp.class_of[c] == unset) {
        cp.class_of[c] = id;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (Elem c : cls)
      cp.centralizer_order[c] = n / cls.size();
    cp.classes.push_back(std::move(cls));
  }
  return cp;
}

enum class SeriesKind { lower, upper };

struct SeriesChain {
  SeriesKind kind;
  std::vector<SubgroupView> terms;  // stops at the first repeated term
};

// gamma_1 = G, gamma_{k+1} = [gamma_k, G].
inline SeriesChain lower_central_series(const GroupTable& g) {
  SeriesChain chain{SeriesKind::lower, {whole_group(g)}};
  auto all = whole_group(g);
  for (;;) {
    auto next = commutator_subgroup(chain.terms.back(), all);
    if (next == chain.terms.back())
      break;
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

// Z_0 = 1, Z_{k+1} = {x : [x, g] in Z_k for all g}.
inline SeriesChain upper_central_series(const GroupTable& g) {
  SeriesChain chain{SeriesKind::upper, {trivial_subgroup(g)}};
  for (;;) {
    const SubgroupView& prev = chain.terms.back();
    std::vector<Elem> next;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem y = 0; y < g.order() && ok; ++y)
        ok = prev.contains(g.commutator(x, y));
      if (ok)
        next.push_back(x);
    }
    if (next.size() == prev.order())
      break;
    chain.terms.push_back(SubgroupView::trusted(g, std::move(next)));
  }
  return chain;
}

// Z_m(G); the series is extended by its stable term past its end.
inline SubgroupView upper_central_term(const GroupTable& g, std::size_t m) {
  auto chain = upper_central_series(g);
  return chain.terms[std::min(m, chain.terms.size() - 1)];
}

inline bool is_nilpotent(const GroupTable& g) {
  return lower_central_series(g).terms.back().is_trivial();
}

// Class c with gamma_{c+1} = 1; 0 for the trivial group.
inline std::optional<unsigned> nilpotency_class(const GroupTable& g) {
  auto chain = lower_central_series(g);
  if (!chain.terms.back().is_trivial())
    return std::nullopt;
  return unsigned(chain.terms.size() - 1);
}

} // namespace relcomm

#endif
