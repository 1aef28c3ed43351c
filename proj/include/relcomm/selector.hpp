// Subgroup selectors for reports and sweeps:
//   all | maximal | standard | <landmark> | gen:1,2,... | sample:N
// Results are deduplicated and sorted by (order, members).

#ifndef RELCOMM_SELECTOR_HPP_
#define RELCOMM_SELECTOR_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "subgroup.hpp"
#include "subgroup_lattice.hpp"

namespace relcomm {

struct SelectedSubgroup {
  std::string name;
  SubgroupView subgroup;
};

namespace detail {

inline void add_unique(std::vector<SelectedSubgroup>& out, std::string name, const SubgroupView& s) {
  for (const auto& o : out)
    if (o.subgroup == s)
      return;
  out.push_back({std::move(name), s});
}

inline void sort_selected(std::vector<SelectedSubgroup>& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return subgroup_less(a.subgroup, b.subgroup);
  });
}

inline std::string member_name(const SubgroupView& s) {
  if (s.order() == 1)
    return "1";
  std::string out = "<order " + std::to_string(s.order()) + ":";
  std::size_t shown = 0;
  for (Elem x : s.members()) {
    if (x == 0)
      continue;
    if (++shown > 4) {
      out += " ...";
      break;
    }
    out += " " + std::to_string(x);
  }
  return out + ">";
}

} // namespace detail

// Landmarks, every cyclic subgroup, and the maximal subgroups.
inline std::vector<SelectedSubgroup> standard_subgroups(const CatalogEntry& e) {
  const GroupTable& g = e.table();
  std::vector<SelectedSubgroup> out;
  for (const auto& l : e.landmarks())
    detail::add_unique(out, l.name, l.subgroup);
  for (const auto& c : cyclic_subgroups(g))
    detail::add_unique(out, "cyclic" + detail::member_name(c), c);
  if (g.order() > 1 && g.order() <= maximal_subgroup_order_cap)
    for (const auto& m : maximal_subgroups(g))
      detail::add_unique(out, "maximal" + detail::member_name(m), m);
  detail::sort_selected(out);
  return out;
}

inline std::vector<SelectedSubgroup> select_subgroups(const CatalogEntry& e, std::string_view selector,
                                                      std::uint64_t seed = 1,
                                                      std::size_t lattice_cap = default_lattice_cap) {
  const GroupTable& g = e.table();
  std::vector<SelectedSubgroup> out;
  if (selector == "all") {
    for (const auto& s : all_subgroups(g, lattice_cap))
      detail::add_unique(out, s.is_whole() ? "G" : detail::member_name(s), s);
  } else if (selector == "maximal") {
    for (const auto& s : maximal_subgroups(g, maximal_subgroup_order_cap, lattice_cap))
      detail::add_unique(out, "maximal" + detail::member_name(s), s);
  } else if (selector == "standard") {
    return standard_subgroups(e);
  } else if (selector.starts_with("gen:")) {
    std::vector<Elem> seeds;
    std::string_view rest = selector.substr(4);
    std::size_t col = 5;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      std::uint64_t v = 0;
      if (tok.empty())
        fail(Errc::parse_error, "selector column " + std::to_string(col) + ": empty element");
      for (char c : tok) {
        if (c < '0' || c > '9')
          fail(Errc::parse_error, "selector column " + std::to_string(col) + ": expected an index");
        v = v * 10 + std::uint64_t(c - '0');
        if (v >= g.order())
          fail(Errc::invalid_argument, "element index " + std::string(tok) + " >= |G| = " +
                                           std::to_string(g.order()));
      }
      seeds.push_back(Elem(v));
      col += tok.size() + 1;
      if (comma == std::string_view::npos)
        break;
      rest = rest.substr(comma + 1);
    }
    auto s = subgroup_generated(g, seeds);
    detail::add_unique(out, "gen:" + std::string(selector.substr(4)), s);
  } else if (selector.starts_with("sample:")) {
    std::size_t n = 0;
    for (char c : selector.substr(7)) {
      if (c < '0' || c > '9')
        fail(Errc::parse_error, "sample:N needs a positive count");
      n = n * 10 + std::size_t(c - '0');
    }
    if (n == 0)
      fail(Errc::parse_error, "sample:N needs a positive count");
    auto subs = all_subgroups(g, lattice_cap);
    std::vector<SubgroupView> picked;
    std::mt19937_64 rng(seed);
    std::sample(subs.begin(), subs.end(), std::back_inserter(picked), n, rng);
    for (const auto& s : picked)
      detail::add_unique(out, s.is_whole() ? "G" : detail::member_name(s), s);
  } else {
    detail::add_unique(out, std::string(selector), e.landmark(selector));
  }
  if (out.empty())
    fail(Errc::invalid_argument, "selector '" + std::string(selector) + "' matched no subgroup");
  detail::sort_selected(out);
  return out;
}

} // namespace relcomm

#endif
