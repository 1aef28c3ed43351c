// Lower and upper bounds on Pr(H, G) as exact fractions, the equality
// conditions that go with them, and per-pair reports that check every
// inequality whose hypotheses hold.

#ifndef RELCOMM_BOUNDS_HPP_
#define RELCOMM_BOUNDS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comm_stats.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "exact_ratio.hpp"
#include "subgroup.hpp"

namespace relcomm {

// (1/|K(G,H)|)(1 + (|K(G,H)| - 1)/|H : Z(H,G)|).
inline ExactRatio commutator_set_lower(const PairProfile& pp) {
  return class_size_bound(pp.k_size(), pp.index_h_z);
}

// Same shape with |[G, H]| in place of |K(G, H)|.
inline ExactRatio salemkar_lower(const PairProfile& pp) {
  return class_size_bound(pp.derived_pair_order(), pp.index_h_z);
}

// |Z(H,G)|/|H| + p (|H| - |Z(H,G)|)/(|H||G|), p the smallest prime of |G|.
inline ExactRatio erfanian_lower(const PairProfile& pp) {
  if (!pp.smallest_prime)
    return ExactRatio(1);
  BigInt h = pp.subgroup_order, z = pp.z_order(), g = pp.group_order;
  return ExactRatio(z * g + BigInt(*pp.smallest_prime) * (h - z), h * g);
}

// (1/|G'|)(1 + (|G'| - 1)/|G : Z(G)|); only meaningful for H = G.
inline ExactRatio pournaki_lower(const PairProfile& pp) {
  return class_size_bound(pp.derived_pair_order(), pp.index_h_z);
}

// (l-bound, s-bound) around Pr(H, G).
inline std::pair<ExactRatio, ExactRatio> sandwich_bounds(const PairProfile& pp) {
  if (pp.degenerate())
    fail(Errc::degenerate_pair, "Z(H,G) = H: class-size bounds are undefined");
  return {class_size_bound(*pp.l_h, pp.index_h_z), class_size_bound(*pp.s_h, pp.index_h_z)};
}

// (1/p)(1 + (p - 1)/|H : Z(H,G)|).
inline ExactRatio prime_upper(const PairProfile& pp) {
  if (!pp.smallest_prime)
    return ExactRatio(1);
  return class_size_bound(*pp.smallest_prime, pp.index_h_z);
}

// (1/|G|)(|Z(G)| + crk(G) + (|G| - |Z(G)| - sum n_i)/n_r).
inline ExactRatio classvec_lower(const GroupTable& g, const ConjugacyPartition& cp) {
  auto tv = conjugate_type_vector(cp);
  if (tv.size() < 2)
    fail(Errc::degenerate_pair, "abelian group: conjugate type vector bound undefined");
  const std::size_t r = tv.size() - 1;
  BigInt z = 0;
  for (const auto& c : cp.classes)
    z += c.size() == 1;
  BigInt sum = 0;
  for (std::size_t i = 1; i < tv.size(); ++i)
    sum += tv[i];
  BigInt n = g.order(), nr = tv.back();
  // (z + r + (n - z - sum)/nr) / n
  return ExactRatio((z + r) * nr + (n - z - sum), n * nr);
}

inline ExactRatio classvec_lower(const GroupTable& g) {
  return classvec_lower(g, conjugacy_partition(g));
}

struct EqualityConditions {
  bool cond_i = false;    // equality in the K(G,H) lower bound
  bool cond_ii = false;   // Cl_G(x) = K(G,H) x for all x in H - Z(H,G)
  bool cond_iii = false;  // K(G,H) = {y x y^-1 x^-1 : y in G} for all such x
  bool agree() const { return cond_i == cond_ii && cond_ii == cond_iii; }
};

inline EqualityConditions equality_conditions(const SubgroupView& h, const ConjugacyPartition& cp,
                                      const PairProfile& pp, const ExactRatio& pr) {
  if (pp.degenerate())
    fail(Errc::degenerate_pair, "Z(H,G) = H");
  const GroupTable& g = h.parent();
  EqualityConditions st;
  st.cond_i = pr == commutator_set_lower(pp);

  std::vector<std::uint8_t> in_k(g.order(), 0);
  for (Elem k : pp.k_set)
    in_k[k] = 1;
  std::vector<std::uint8_t> in_z(g.order(), 0);
  for (Elem z : pp.z_hg)
    in_z[z] = 1;

  st.cond_ii = true;
  st.cond_iii = true;
  std::vector<std::uint8_t> mark(g.order(), 0);
  for (Elem x : h.members()) {
    if (in_z[x])
      continue;
    // Cl_G(x) == K x as sets.
    if (st.cond_ii) {
      const auto& cls = cp.classes[cp.class_of[x]];
      if (cls.size() != pp.k_size()) {
        st.cond_ii = false;
      } else {
        for (Elem c : cls)
          if (!in_k[g.mul(c, g.inv(x))]) {
            st.cond_ii = false;
            break;
          }
      }
    }
    // K == {y x y^-1 x^-1 : y in G}.
    if (st.cond_iii) {
      std::vector<Elem> hit;
      for (Elem y = 0; y < g.order(); ++y) {
        Elem c = g.commutator(y, x);
        if (!mark[c]) {
          mark[c] = 1;
          hit.push_back(c);
        }
      }
      bool equal = hit.size() == pp.k_size();
      for (Elem c : hit) {
        equal = equal && in_k[c];
        mark[c] = 0;
      }
      st.cond_iii = equal;
    }
    if (!st.cond_ii && !st.cond_iii)
      break;
  }
  return st;
}

inline EqualityConditions equality_conditions(const SubgroupView& h) {
  auto cp = conjugacy_partition(h.parent());
  auto pp = pair_profile(h, cp);
  return equality_conditions(h, cp, pp, pr_bruteforce(h));
}

struct CaminaResult {
  bool camina = false;
  bool abelian = false;  // vacuous case, reported separately
};

// Cl_G(x) == G' x for every x outside G'.
inline CaminaResult is_camina(const GroupTable& g, const ConjugacyPartition& cp) {
  CaminaResult r;
  r.abelian = cp.classes.size() == g.order();
  auto d = derived_subgroup(g);
  r.camina = true;
  for (Elem x = 0; x < g.order() && r.camina; ++x) {
    if (d.contains(x))
      continue;
    const auto& cls = cp.classes[cp.class_of[x]];
    if (cls.size() != d.order()) {
      r.camina = false;
      break;
    }
    for (Elem c : cls)
      if (!d.contains(g.mul(c, g.inv(x)))) {
        r.camina = false;
        break;
      }
  }
  return r;
}

inline CaminaResult is_camina(const GroupTable& g) { return is_camina(g, conjugacy_partition(g)); }

struct ClosedFormEntry {
  Elem g = 0;
  ExactRatio brute;
  ExactRatio closed;
  bool match = false;
};

struct ClosedFormReport {
  std::uint64_t p = 0;
  std::uint64_t index_h_z = 0;
  std::vector<ClosedFormEntry> entries;  // one per g in [G, H]
  bool all_match() const {
    for (const auto& e : entries)
      if (!e.match)
        return false;
    return true;
  }
};

// Failed hypothesis of the nilpotent closed form, or nullopt if it applies.
inline std::optional<std::string> nilpotent_form_hypothesis(const SubgroupView& h) {
  if (!is_nilpotent(h.parent()))
    return "G is not nilpotent";
  auto d = commutator_subgroup(h);
  if (!is_prime(d.order()))
    return "|[G,H]| = " + std::to_string(d.order()) + " is not prime";
  return std::nullopt;
}

// Failed hypothesis of the smallest-prime closed form, or nullopt.
inline std::optional<std::string> smallest_prime_form_hypothesis(const SubgroupView& h) {
  auto d = commutator_subgroup(h);
  auto p = smallest_prime_divisor(h.parent());
  if (!p || d.order() != *p)
    return "|[G,H]| = " + std::to_string(d.order()) +
           " is not the smallest prime dividing |G| = " + std::to_string(h.parent().order());
  return std::nullopt;
}

namespace detail {

inline ClosedFormReport closed_form_report(const SubgroupView& h) {
  const GroupTable& g = h.parent();
  auto d = commutator_subgroup(h);
  auto z = relative_center(h);
  ClosedFormReport rep;
  rep.p = d.order();
  rep.index_h_z = h.order() / z.order();
  auto hist = commutator_histogram(h);
  const BigInt total = BigInt(h.order()) * g.order();
  const BigInt p = rep.p, i = rep.index_h_z;
  for (Elem x : d.members()) {
    ClosedFormEntry e;
    e.g = x;
    e.brute = ExactRatio(BigInt(hist[x]), total);
    e.closed = x == GroupTable::identity ? class_size_bound(rep.p, rep.index_h_z)
                                         : ExactRatio(i - 1, p * i);
    e.match = e.brute == e.closed;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

} // namespace detail

// For nilpotent G with |[G,H]| = p prime: Pr_1 = (1/p)(1 + (p-1)/i) and
// Pr_g = (1/p)(1 - 1/i) for g != 1 in [G,H], i = |H : Z(H,G)|.
inline ClosedFormReport nilpotent_form_check(const SubgroupView& h) {
  if (auto why = nilpotent_form_hypothesis(h))
    fail(Errc::hypothesis_not_met, *why);
  return detail::closed_form_report(h);
}

// Same closed forms when |[G,H]| is the smallest prime dividing |G|.
inline ClosedFormReport smallest_prime_form_check(const SubgroupView& h) {
  if (auto why = smallest_prime_form_hypothesis(h))
    fail(Errc::hypothesis_not_met, *why);
  return detail::closed_form_report(h);
}

// The commuting-probability thresholds applied as cited implications.
struct SolvabilityVerdict {
  bool solvable_or_a5 = false;        // Pr > 3/40
  bool a5_branch_possible = false;    // ... and Pr == 1/12
  bool supersolvable = false;         // Pr > 1/3
  bool odd_supersolvable = false;     // |G| odd and Pr > 11/75
  std::vector<std::string> conclusions;
};

inline SolvabilityVerdict solvability_verdict(std::size_t order, const ExactRatio& pr) {
  SolvabilityVerdict v;
  if (pr > ExactRatio(3, 40)) {
    v.solvable_or_a5 = true;
    v.a5_branch_possible = pr == ExactRatio(1, 12);
    v.conclusions.push_back(v.a5_branch_possible
                              ? "Pr > 3/40: G is solvable or G = A5 x T with T abelian"
                              : "Pr > 3/40 and Pr != 1/12: G is solvable");
  }
  if (pr > ExactRatio(1, 3)) {
    v.supersolvable = true;
    v.conclusions.push_back("Pr > 1/3: G is supersolvable");
  }
  if (order % 2 == 1 && pr > ExactRatio(11, 75)) {
    v.odd_supersolvable = true;
    v.conclusions.push_back("|G| odd and Pr > 11/75: G is supersolvable");
  }
  return v;
}

struct BoundValue {
  std::string name;
  std::optional<ExactRatio> value;  // absent when undefined for the pair
  bool hypothesis_met = false;
  std::string hypothesis;
  bool attained = false;
};

struct BoundReport {
  std::string pair_id;
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  ExactRatio pr;
  PairProfile profile;
  std::vector<BoundValue> bounds;
  std::optional<EqualityConditions> equality;
  CaminaResult camina;
  std::optional<SolvabilityVerdict> verdict;   // H = G only
  std::optional<ClosedFormReport> nilpotent_form;   // when its hypotheses hold
  std::optional<ClosedFormReport> smallest_prime_form;
  std::vector<std::string> violations;

  const BoundValue& bound(std::string_view name) const {
    for (const auto& b : bounds)
      if (b.name == name)
        return b;
    fail(Errc::invalid_argument, "no bound named " + std::string(name));
  }
};

inline const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = {
    "commutator_set_lower", "salemkar_lower", "erfanian_lower", "pournaki_lower",
    "sandwich_lower", "sandwich_upper", "prime_upper", "classvec_lower",
  };
  return names;
}

// Evaluates every bound for (G, H) and records a violation for each enforced
// inequality or equality condition that fails.
inline BoundReport make_bound_report(const SubgroupView& h, const ConjugacyPartition& cp,
                                     std::string pair_id) {
  const GroupTable& g = h.parent();
  BoundReport rep;
  rep.pair_id = std::move(pair_id);
  rep.group_order = g.order();
  rep.subgroup_order = h.order();
  rep.pr = pr_bruteforce(h);
  rep.profile = pair_profile(h, cp);
  const PairProfile& pp = rep.profile;
  const ExactRatio& pr = rep.pr;
  const bool nondeg = !pp.degenerate();
  auto violate = [&](const std::string& what) { rep.violations.push_back(rep.pair_id + ": " + what); };
  auto add = [&](std::string name, std::optional<ExactRatio> v, bool met, std::string hyp) {
    BoundValue b{std::move(name), std::move(v), met, std::move(hyp), false};
    b.attained = b.value && *b.value == pr;
    rep.bounds.push_back(std::move(b));
  };

  const ExactRatio kset_lo = commutator_set_lower(pp);
  const ExactRatio salemkar = salemkar_lower(pp);
  const ExactRatio erfanian = erfanian_lower(pp);
  add("commutator_set_lower", kset_lo, true, "none");
  bool salemkar_hyp = nondeg && pp.normal;
  if (salemkar_hyp)
    for (Elem d : pp.derived_pair)
      salemkar_hyp = salemkar_hyp && std::binary_search(pp.z_hg.begin(), pp.z_hg.end(), d);
  add("salemkar_lower", salemkar, salemkar_hyp, "Z(H,G) != H, H normal, [G,H] <= Z(H,G)");
  add("erfanian_lower", erfanian, nondeg, "Z(H,G) != H");
  if (pp.whole())
    add("pournaki_lower", pournaki_lower(pp), nondeg, "H = G non-abelian");
  else
    add("pournaki_lower", std::nullopt, false, "H = G non-abelian");

  std::optional<ExactRatio> sw_lo, sw_hi;
  if (nondeg) {
    auto [lo, hi] = sandwich_bounds(pp);
    sw_lo = lo;
    sw_hi = hi;
  }
  add("sandwich_lower", sw_lo, nondeg, "Z(H,G) != H");
  add("sandwich_upper", sw_hi, nondeg, "Z(H,G) != H");
  std::optional<ExactRatio> prime_up;
  if (pp.smallest_prime)
    prime_up = prime_upper(pp);
  add("prime_upper", prime_up, nondeg, "Z(H,G) != H");
  std::optional<ExactRatio> cv;
  const bool cv_hyp = pp.whole() && nondeg;
  if (cv_hyp)
    cv = classvec_lower(g, cp);
  add("classvec_lower", cv, cv_hyp, "H = G non-abelian");

  // Pr = 1 exactly when Z(H,G) = H.
  if ((pr == ExactRatio(1)) != pp.degenerate())
    violate("Pr = " + pr.str() + " but Z(H,G) = H is " + (pp.degenerate() ? "true" : "false"));

  // The K(G,H) bound holds unconditionally, strictly above 1/|K| off the center.
  if (kset_lo > pr)
    violate("commutator_set_lower " + kset_lo.str() + " > Pr " + pr.str());
  if (nondeg && !(pr > ExactRatio(1, std::int64_t(pp.k_size()))))
    violate("Pr " + pr.str() + " not > 1/|K(G,H)| = 1/" + std::to_string(pp.k_size()));

  // K(G,H) is contained in [G,H], so the [G,H] form never beats the K form.
  if (salemkar > kset_lo)
    violate("salemkar_lower " + salemkar.str() + " > commutator_set_lower " + kset_lo.str());
  if (nondeg && (salemkar == kset_lo) != (pp.k_size() == pp.derived_pair_order()))
    violate("salemkar/commutator_set equality does not match |K(G,H)| = |[G,H]|");
  if (erfanian > pr)
    violate("erfanian_lower " + erfanian.str() + " > Pr " + pr.str());
  if (nondeg && pp.derived_pair_order() != pp.group_order && pp.smallest_prime) {
    if (erfanian > salemkar)
      violate("erfanian_lower " + erfanian.str() + " > salemkar_lower " + salemkar.str());
    bool index_is_p = pp.group_order / pp.derived_pair_order() == *pp.smallest_prime;
    if ((erfanian == salemkar) != index_is_p)
      violate("erfanian/salemkar equality does not match |G:[G,H]| = p");
  }
  if (pp.whole() && nondeg) {
    ExactRatio pk = pournaki_lower(pp);
    if (pk > kset_lo)
      violate("pournaki_lower " + pk.str() + " > commutator_set_lower " + kset_lo.str());
  }

  if (nondeg) {
    const bool two_valued = *pp.s_h == *pp.l_h;
    if (*sw_lo > pr)
      violate("sandwich_lower " + sw_lo->str() + " > Pr " + pr.str());
    if (pr > *sw_hi)
      violate("Pr " + pr.str() + " > sandwich_upper " + sw_hi->str());
    if ((*sw_lo == pr) != two_valued || (*sw_hi == pr) != two_valued)
      violate("class-size bound equality does not match cs(G,H) two-valued");
    if (*sw_hi > *prime_up)
      violate("sandwich_upper " + sw_hi->str() + " > prime_upper " + prime_up->str());
    if (*pp.s_h < *pp.smallest_prime)
      violate("s_H below the smallest prime divisor");
    if ((*sw_hi == *prime_up) != (*pp.s_h == *pp.smallest_prime))
      violate("prime_up equality does not match s_H = p");
  }
  if (cv) {
    if (*cv > pr)
      violate("classvec_lower " + cv->str() + " > Pr " + pr.str());
    if (conjugate_type_vector(cp).size() == 2 && *cv != pr)
      violate("classvec_lower not attained with conjugate rank 1");
  }

  if (nondeg) {
    rep.equality = equality_conditions(h, cp, pp, pr);
    if (!rep.equality->agree())
      violate("conditions (i), (ii), (iii) disagree");
  }
  rep.camina = is_camina(g, cp);
  if (pp.whole())
    rep.verdict = solvability_verdict(g.order(), pr);

  if (!nilpotent_form_hypothesis(h)) {
    rep.nilpotent_form = nilpotent_form_check(h);
    if (!rep.nilpotent_form->all_match())
      violate("nilpotent closed form for Pr_g does not match brute force");
  }
  if (!smallest_prime_form_hypothesis(h)) {
    rep.smallest_prime_form = smallest_prime_form_check(h);
    if (!rep.smallest_prime_form->all_match())
      violate("smallest-prime closed form for Pr_g does not match brute force");
  }
  return rep;
}

inline BoundReport make_bound_report(const SubgroupView& h, std::string pair_id) {
  return make_bound_report(h, conjugacy_partition(h.parent()), std::move(pair_id));
}

} // namespace relcomm

#endif
