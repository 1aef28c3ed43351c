// Subgroups as sorted index sets into a parent table, plus the structural
// operations built on them: closures, centers, commutators, quotients.

#ifndef RELCOMM_SUBGROUP_HPP_
#define RELCOMM_SUBGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "group_table.hpp"

namespace relcomm {

// Non-owning: the parent table must outlive the view.
class SubgroupView {
public:
  // Validates identity membership, closure and Lagrange.
  SubgroupView(const GroupTable& parent, std::vector<Elem> members)
    : SubgroupView(parent, std::move(members), Unchecked{}) {
    if (members_.empty() || members_.front() != GroupTable::identity)
      fail(Errc::not_a_subgroup, "subgroup must contain the identity");
    for (Elem a : members_) {
      if (!contains(parent.inv(a)))
        fail(Errc::not_a_subgroup, "not closed under inverse at " + std::to_string(a));
      for (Elem b : members_)
        if (!contains(parent.mul(a, b)))
          fail(Errc::not_a_subgroup, "not closed under product at (" + std::to_string(a) +
                                         ", " + std::to_string(b) + ")");
    }
    if (parent.order() % members_.size() != 0)
      fail(Errc::not_a_subgroup, "order does not divide the group order");
  }

  // Caller guarantees the set is a subgroup.
  static SubgroupView trusted(const GroupTable& parent, std::vector<Elem> members) {
    return SubgroupView(parent, std::move(members), Unchecked{});
  }

  const GroupTable& parent() const noexcept { return *parent_; }
  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }

  bool is_subset_of(const SubgroupView& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](Elem x) { return other.contains(x); });
  }

  friend bool operator==(const SubgroupView& a, const SubgroupView& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  struct Unchecked {};
  SubgroupView(const GroupTable& parent, std::vector<Elem> members, Unchecked)
    : parent_(&parent), members_(std::move(members)), mask_(parent.order(), 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Elem x : members_) {
      if (x >= parent.order())
        fail(Errc::not_a_subgroup, "element index " + std::to_string(x) + " out of range");
      mask_[x] = 1;
    }
  }

  const GroupTable* parent_;
  std::vector<Elem> members_;
  std::vector<std::uint8_t> mask_;
};

inline SubgroupView whole_group(const GroupTable& g) {
  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < g.order(); ++i)
    all[i] = i;
  return SubgroupView::trusted(g, std::move(all));
}

inline SubgroupView trivial_subgroup(const GroupTable& g) {
  return SubgroupView::trusted(g, {GroupTable::identity});
}

// Smallest subgroup containing `seeds`. A seed becomes a generator only if
// it is not already in the closure of the earlier ones, so the generator list
// stays at most log2 |G| long.
inline SubgroupView subgroup_generated(const GroupTable& g, std::span<const Elem> seeds) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<Elem> elems{GroupTable::identity};
  std::vector<Elem> gens;
  in[GroupTable::identity] = 1;
  for (Elem s : seeds) {
    if (s >= g.order())
      fail(Errc::invalid_argument, "seed " + std::to_string(s) + " out of range");
    if (in[s])
      continue;
    gens.push_back(s);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      Elem x = elems[head];
      for (Elem t : gens) {
        Elem y = g.mul(x, t);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    }
  }
  return SubgroupView::trusted(g, std::move(elems));
}

inline SubgroupView subgroup_generated(const GroupTable& g, std::initializer_list<Elem> seeds) {
  std::vector<Elem> v(seeds);
  return subgroup_generated(g, std::span<const Elem>(v));
}

inline SubgroupView cyclic_subgroup(const GroupTable& g, Elem x) {
  std::vector<Elem> elems{GroupTable::identity};
  for (Elem y = x; y != GroupTable::identity; y = g.mul(y, x))
    elems.push_back(y);
  return SubgroupView::trusted(g, std::move(elems));
}

inline SubgroupView intersection(const SubgroupView& a, const SubgroupView& b) {
  std::vector<Elem> out;
  for (Elem x : a.members())
    if (b.contains(x))
      out.push_back(x);
  return SubgroupView::trusted(a.parent(), std::move(out));
}

inline SubgroupView centralizer(const GroupTable& g, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < g.order(); ++y)
    if (g.commute(x, y))
      out.push_back(y);
  return SubgroupView::trusted(g, std::move(out));
}

inline SubgroupView center(const GroupTable& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y)
      central = g.commute(x, y);
    if (central)
      out.push_back(x);
  }
  return SubgroupView::trusted(g, std::move(out));
}

// Z(H, G) = H ∩ Z(G).
inline SubgroupView relative_center(const SubgroupView& h) {
  return intersection(h, center(h.parent()));
}

// Z(H, G) straight from its definition {h in H : hg = gh for all g}; kept
// separate from relative_center so the two can be compared.
inline SubgroupView relative_center_by_definition(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  std::vector<Elem> out;
  for (Elem x : h.members()) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central)
      out.push_back(x);
  }
  return SubgroupView::trusted(g, std::move(out));
}

// Full conjugation scan.
inline bool is_normal(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  for (Elem y = 0; y < g.order(); ++y)
    for (Elem x : h.members())
      if (!h.contains(g.conj(y, x)))
        return false;
  return true;
}

// K(G, H) = {[x, y] : x in G, y in H}, sorted.
inline std::vector<Elem> commutator_set(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  std::vector<std::uint8_t> hit(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : h.members())
      hit[g.commutator(x, y)] = 1;
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z)
    if (hit[z])
      out.push_back(z);
  return out;
}

// [A, B] = <[a, b] : a in A, b in B>.
inline SubgroupView commutator_subgroup(const SubgroupView& a, const SubgroupView& b) {
  const GroupTable& g = a.parent();
  std::vector<std::uint8_t> hit(g.order(), 0);
  for (Elem x : a.members())
    for (Elem y : b.members())
      hit[g.commutator(x, y)] = 1;
  std::vector<Elem> seeds;
  for (Elem z = 0; z < g.order(); ++z)
    if (hit[z])
      seeds.push_back(z);
  return subgroup_generated(g, seeds);
}

// [G, H].
inline SubgroupView commutator_subgroup(const SubgroupView& h) {
  return commutator_subgroup(whole_group(h.parent()), h);
}

inline SubgroupView derived_subgroup(const GroupTable& g) {
  auto all = whole_group(g);
  return commutator_subgroup(all, all);
}

struct Quotient {
  GroupTable table;
  std::vector<Elem> projection;       // element -> coset index
  std::vector<Elem> representatives;  // coset index -> minimum element
};

// G/N with coset representative = minimum element index; cosets are numbered
// in increasing order of representative, so the identity coset is 0.
inline Quotient quotient(const SubgroupView& n) {
  const GroupTable& g = n.parent();
  if (!is_normal(n))
    fail(Errc::not_normal, "quotient by a non-normal subgroup");
  const Elem unset = Elem(-1);
  std::vector<Elem> proj(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (proj[x] != unset)
      continue;
    Elem id = Elem(reps.size());
    reps.push_back(x);
    for (Elem m : n.members())
      proj[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      mul[i * q + j] = proj[g.mul(reps[i], reps[j])];
  return Quotient{GroupTable::trusted(q, std::move(mul)), std::move(proj), std::move(reps)};
}

struct Embedded {
  GroupTable table;
  std::vector<Elem> to_parent;  // standalone index -> parent index
};

// Standalone copy of a subgroup; index i corresponds to members()[i].
inline Embedded as_group(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  const std::size_t n = h.order();
  std::vector<Elem> local(g.order(), 0);
  auto mem = h.members();
  for (Elem i = 0; i < n; ++i)
    local[mem[i]] = i;
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = local[g.mul(mem[i], mem[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Elem x : mem)
      labels.push_back(g.label(x));
  return Embedded{GroupTable::trusted(n, std::move(mul), std::move(labels)),
                  std::vector<Elem>(mem.begin(), mem.end())};
}

} // namespace relcomm

#endif
