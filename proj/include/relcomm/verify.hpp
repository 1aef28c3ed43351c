// The catalog sweep behind `verify-theorems`: every enforced invariant over
// every catalog group up to a maximum order, collected as violations rather
// than thrown.

#ifndef RELCOMM_VERIFY_HPP_
#define RELCOMM_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "catalog.hpp"
#include "comm_stats.hpp"
#include "conjugacy.hpp"
#include "isoclinism.hpp"
#include "selector.hpp"
#include "subgroup.hpp"

namespace relcomm {

struct VerifyOptions {
  std::size_t max_order = 128;
  std::size_t order_cap = default_order_cap;
  std::size_t audit_cap = 512;             // full associativity audit up to this order
  std::size_t product_count = 20;
  std::size_t product_order_cap = 2000;
  std::uint64_t seed = 1;
  std::uint64_t search_budget = default_search_budget;
  std::size_t quotient_cap = default_quotient_cap;
};

struct VerifySummary {
  std::size_t groups = 0;
  std::size_t pairs = 0;
  std::size_t checks = 0;
  std::size_t isoclinisms = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

// H1 x H2 inside G1 x G2 as built by direct_product.
inline SubgroupView product_subgroup(const GroupTable& product, const SubgroupView& h1,
                                     const SubgroupView& h2) {
  const std::size_t n2 = h2.parent().order();
  std::vector<Elem> m;
  for (Elem a : h1.members())
    for (Elem b : h2.members())
      m.push_back(Elem(a * n2 + b));
  std::sort(m.begin(), m.end());
  return SubgroupView::trusted(product, std::move(m));
}

namespace detail {

class Checker {
public:
  explicit Checker(VerifySummary& s) : s_(s) {}

  void operator()(bool ok, const std::function<std::string()>& what) {
    ++s_.checks;
    if (!ok)
      s_.violations.push_back(what());
  }

private:
  VerifySummary& s_;
};

inline void verify_group(const CatalogEntry& e, const VerifyOptions& opt, VerifySummary& sum) {
  Checker check(sum);
  const GroupTable& g = e.table();
  const std::string id = e.spec().str();
  const std::size_t n = g.order();
  ++sum.groups;

  if (n <= opt.audit_cap) {
    bool ok = true;
    std::string why;
    try {
      audit(g);
    } catch (const Error& err) {
      ok = false;
      why = err.what();
    }
    check(ok, [&] { return id + ": audit failed: " + why; });
  }
  check(build_table(e.spec(), opt.order_cap) == g, [&] { return id + ": build is not deterministic"; });

  const auto cp = conjugacy_partition(g);
  {
    bool ok = true;
    for (Elem x = 0; x < n; ++x)
      ok = ok && cp.class_size(x) * cp.centralizer_order[x] == n;
    check(ok, [&] { return id + ": orbit-stabilizer fails"; });
    check(cp.class_size(0) == 1, [&] { return id + ": identity class not a singleton"; });
  }

  const auto lower = lower_central_series(g);
  const auto upper = upper_central_series(g);
  {
    bool ok = lower.terms.front().is_whole() && upper.terms.front().is_trivial();
    for (std::size_t k = 1; k < lower.terms.size(); ++k)
      ok = ok && lower.terms[k].is_subset_of(lower.terms[k - 1]);
    for (std::size_t k = 1; k < upper.terms.size(); ++k)
      ok = ok && upper.terms[k - 1].is_subset_of(upper.terms[k]);
    check(ok, [&] { return id + ": central series not monotone"; });
    check(derived_subgroup(g) == commutator_subgroup(whole_group(g)),
          [&] { return id + ": derived subgroup != [G,G]"; });
  }

  for (const char* name : {"center", "derived"}) {
    const auto q = quotient(e.landmark(name));
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        ok = q.projection[g.mul(a, b)] == q.table.mul(q.projection[a], q.projection[b]);
    check(ok, [&] { return id + ": projection onto G/" + name + " is not a homomorphism"; });
  }

  if (lower.terms.back().is_trivial()) {
    std::uint64_t prod = 1;
    std::vector<SubgroupView> sylows;
    for (auto p : prime_divisors(n)) {
      sylows.push_back(sylow_subgroup(g, p));
      prod *= sylows.back().order();
    }
    bool ok = prod == n;
    for (std::size_t i = 0; i < sylows.size(); ++i)
      for (std::size_t j = i + 1; j < sylows.size(); ++j)
        ok = ok && intersection(sylows[i], sylows[j]).is_trivial();
    check(ok, [&] { return id + ": not the direct product of its Sylow subgroups"; });
  }

  const Family fam = e.spec().family;
  const bool extraspecial = fam == Family::extraspecial_exp_p || fam == Family::extraspecial_exp_p2;
  if (extraspecial) {
    auto cam = is_camina(g, cp);
    check(cam.camina && !cam.abelian && nilpotency_class(g) == 2u,
          [&] { return id + ": not a Camina group of class 2"; });
  }
  if (fam == Family::x5) {
    const std::uint64_t p = e.spec().param;
    const auto z = center(g);
    const auto d = derived_subgroup(g);
    const auto tv = conjugate_type_vector(cp);
    check(z.order() == p * p && d.order() == p * p * p && z.is_subset_of(d) && z.order() < d.order(),
          [&] { return id + ": expected |Z| = p^2 < |G'| = p^3"; });
    check(tv == std::vector<std::uint64_t>{1, p * p},
          [&] { return id + ": non-central classes are not all of size p^2"; });
    check(nilpotency_class(g) == 3u, [&] { return id + ": nilpotency class is not 3"; });
  }

  for (const auto& sel : standard_subgroups(e)) {
    const SubgroupView& h = sel.subgroup;
    const std::string pid = id + " / " + sel.name;
    ++sum.pairs;

    const auto hist = commutator_histogram(h);
    const BigInt total = BigInt(h.order()) * n;
    const auto k = commutator_set(h);
    std::vector<std::uint8_t> in_k(n, 0);
    for (Elem x : k)
      in_k[x] = 1;
    {
      bool oracle = true, outside = true;
      BigInt sum_counts = 0;
      for (Elem x = 0; x < n; ++x) {
        sum_counts += hist[x];
        oracle = oracle && ExactRatio(BigInt(hist[x]), total) == pr_g_class_formula(h, x, cp);
        outside = outside && (in_k[x] || hist[x] == 0);
      }
      check(oracle, [&] { return pid + ": brute force and class-sum Pr_g disagree"; });
      check(sum_counts == total, [&] { return pid + ": Pr_g does not sum to 1"; });
      check(outside, [&] { return pid + ": Pr_g nonzero outside K(G,H)"; });
    }
    {
      bool ok = true;
      for (Elem x : h.members())
        for (Elem c : cp.classes[cp.class_of[x]])
          ok = ok && in_k[g.mul(c, g.inv(x))];
      check(ok, [&] { return pid + ": Cl_G(x) not inside K(G,H) x"; });
    }
    const auto gh = commutator_subgroup(h);
    check(std::all_of(k.begin(), k.end(), [&](Elem x) { return gh.contains(x); }),
          [&] { return pid + ": K(G,H) not inside [G,H]"; });
    if (g.is_abelian() || extraspecial)
      check(k.size() == gh.order(), [&] { return pid + ": K(G,H) != [G,H]"; });
    check(relative_center(h) == relative_center_by_definition(h),
          [&] { return pid + ": relative center differs between the two constructions"; });

    const auto rep = make_bound_report(h, cp, pid);
    ++sum.checks;
    for (const auto& v : rep.violations)
      sum.violations.push_back(v);
  }
}

inline void verify_products(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt,
                            VerifySummary& sum) {
  Checker check(sum);
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].table().order() <= 64)
      small.push_back(i);
  if (small.empty())
    return;
  std::mt19937_64 rng(opt.seed);
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < opt.product_count && attempt < 50 * opt.product_count; ++attempt) {
    const auto& a = entries[small[rng() % small.size()]];
    const auto& b = entries[small[rng() % small.size()]];
    if (a.table().order() * b.table().order() > opt.product_order_cap)
      continue;
    const auto& la = a.landmarks();
    const auto& lb = b.landmarks();
    const auto& h1 = la[rng() % la.size()];
    const auto& h2 = lb[rng() % lb.size()];
    auto prod = direct_product(a.table(), b.table(), opt.order_cap);
    auto h = product_subgroup(prod, h1.subgroup, h2.subgroup);
    ExactRatio lhs = pr_bruteforce(h);
    ExactRatio rhs = pr_bruteforce(h1.subgroup) * pr_bruteforce(h2.subgroup);
    check(lhs == rhs, [&] {
      return "(" + a.spec().str() + " x " + b.spec().str() + ") / " + h1.name + " x " + h2.name +
             ": Pr " + lhs.str() + " != " + rhs.str();
    });
    ++done;
  }
}

inline void verify_isoclinism(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt,
                              VerifySummary& sum) {
  Checker check(sum);
  std::vector<PairContext> ctx;
  for (const auto& e : entries)
    ctx.push_back(make_pair_context(whole_group(e.table())));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string id = entries[i].spec().str();
    check(commutation_map_well_defined(ctx[i]),
          [&] { return id + ": commutation map depends on coset representatives"; });
    auto refl = verify_pair_isoclinism(ctx[i], ctx[i], identity_witness(ctx[i]));
    check(refl.ok, [&] { return id + ": identity witness rejected: " + refl.violation; });
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (ctx[i].quotient_order() > opt.quotient_cap || ctx[i].quotient_order() == 1)
        continue;
      const std::string id = entries[i].spec().str() + " ~ " + entries[j].spec().str();
      auto res = find_pair_isoclinism(ctx[i], ctx[j], opt.search_budget, opt.quotient_cap);
      if (res.status == SearchStatus::budget_exhausted) {
        sum.notes.push_back(id + ": search budget exhausted after " + std::to_string(res.nodes) +
                            " nodes");
        continue;
      }
      if (!res.witness)
        continue;
      ++sum.isoclinisms;
      auto inv = verify_invariance(ctx[i], ctx[j], *res.witness);
      check(inv.all_equal(), [&] { return id + ": Pr_g not preserved by the isoclinism"; });
      auto back = verify_pair_isoclinism(ctx[j], ctx[i], inverse_witness(*res.witness, ctx[j]));
      check(back.ok, [&] { return id + ": inverse witness rejected: " + back.violation; });
    }
}

// (1/n)(1 + (n-1)/i) >= (1/m)(1 + (m-1)/i) for m >= n, equality iff m = n or i = 1.
inline void verify_monotone_grid(VerifySummary& sum) {
  Checker check(sum);
  for (std::uint64_t m = 1; m <= 16; ++m)
    for (std::uint64_t nn = 1; nn <= m; ++nn)
      for (std::uint64_t i = 1; i <= 16; ++i) {
        auto a = class_size_bound(nn, i), b = class_size_bound(m, i);
        check(a >= b && (a == b) == (m == nn || i == 1), [&] {
          return "class-size bound not monotone at m=" + std::to_string(m) + " n=" +
                 std::to_string(nn) + " i=" + std::to_string(i);
        });
      }
}

} // namespace detail

inline VerifySummary verify_theorems(const VerifyOptions& opt,
                                     const std::function<void(const std::string&)>& progress = {}) {
  VerifySummary sum;
  std::vector<CatalogEntry> entries;
  for (const auto& text : standard_catalog()) {
    auto spec = parse_spec(text);
    if (spec.order() > opt.max_order)
      continue;
    if (progress)
      progress(text);
    entries.push_back(build(spec, opt.order_cap));
    detail::verify_group(entries.back(), opt, sum);
  }
  detail::verify_products(entries, opt, sum);
  detail::verify_isoclinism(entries, opt, sum);
  detail::verify_monotone_grid(sum);
  return sum;
}

} // namespace relcomm

#endif
