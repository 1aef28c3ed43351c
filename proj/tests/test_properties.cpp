// Randomized properties. Every generator draws from one seeded engine so a
// failure reproduces from the printed seed and case number.

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "relcomm/relcomm.hpp"

using namespace relcomm;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kCases = 60;

// Groups small enough for O(|G|^2) work per case.
const std::vector<std::string>& small_specs() {
  static const std::vector<std::string> specs = [] {
    std::vector<std::string> out;
    for (const auto& s : standard_catalog())
      if (parse_spec(s).order() <= 72)
        out.push_back(s);
    return out;
  }();
  return specs;
}

struct Gen {
  std::mt19937_64 rng{kSeed};

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  std::string spec() { return small_specs()[below(small_specs().size())]; }

  // Subgroup generated by one to three random elements.
  SubgroupView subgroup(const GroupTable& g) {
    std::vector<Elem> seeds(1 + below(3));
    for (auto& s : seeds)
      s = Elem(below(g.order()));
    return subgroup_generated(g, seeds);
  }

  // A random relabeling that keeps the identity at 0.
  GroupTable relabel(const GroupTable& g) {
    std::vector<Elem> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        t[perm[a]][perm[b]] = perm[g.mul(a, b)];
    return from_cayley_table(t);
  }
};

std::string where(int k, const std::string& spec, const SubgroupView& h) {
  return "seed " + std::to_string(kSeed) + " case " + std::to_string(k) + ": " + spec + " |H|=" +
         std::to_string(h.order());
}

} // namespace

TEST(Property, ClassFormulaEqualsBruteForce) {
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    auto cp = conjugacy_partition(g);
    for (Elem x = 0; x < g.order(); ++x)
      ASSERT_EQ(pr_g_class_formula(h, x, cp), pr_g_bruteforce(h, x)) << where(k, spec, h);
  }
}

TEST(Property, DistributionSumsToOneAndLivesOnK) {
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    auto kset = commutator_set(h);
    std::vector<std::uint8_t> in_k(g.order(), 0);
    for (Elem x : kset)
      in_k[x] = 1;
    ExactRatio total(0);
    for (Elem x = 0; x < g.order(); ++x) {
      auto p = pr_g_bruteforce(h, x);
      total += p;
      ASSERT_EQ(p.is_zero(), !in_k[x]) << where(k, spec, h) << " g=" << x;
    }
    ASSERT_EQ(total, ExactRatio(1)) << where(k, spec, h);
  }
}

TEST(Property, ContainmentsAndRelativeCenter) {
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    auto d = commutator_subgroup(h);
    for (Elem x : commutator_set(h))
      ASSERT_TRUE(d.contains(x)) << where(k, spec, h);
    auto z = relative_center(h);
    ASSERT_EQ(z, relative_center_by_definition(h)) << where(k, spec, h);
    ASSERT_TRUE(z.is_subset_of(h));
    ASSERT_TRUE(intersection(h, center(g)) == z) << where(k, spec, h);
  }
}

TEST(Property, LabelingInvariance) {
  Gen gen;
  for (int k = 0; k < kCases / 2; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto g2 = gen.relabel(g);
    ASSERT_EQ(pr_bruteforce(whole_group(g)), pr_bruteforce(whole_group(g2))) << spec;
    ASSERT_EQ(conjugate_type_vector(g), conjugate_type_vector(g2)) << spec;
    ASSERT_EQ(nilpotency_class(g), nilpotency_class(g2)) << spec;
    ASSERT_EQ(center(g).order(), center(g2).order()) << spec;
  }
}

TEST(Property, MultiplicativityOverDirectProducts) {
  Gen gen;
  int done = 0;
  for (int k = 0; done < 20; ++k) {
    auto s1 = gen.spec(), s2 = gen.spec();
    auto g1 = build_table(parse_spec(s1));
    auto g2 = build_table(parse_spec(s2));
    if (g1.order() * g2.order() > 1500)
      continue;
    auto h1 = gen.subgroup(g1);
    auto h2 = gen.subgroup(g2);
    auto prod = direct_product(g1, g2);
    auto h = product_subgroup(prod, h1, h2);
    ASSERT_EQ(pr_bruteforce(h), pr_bruteforce(h1) * pr_bruteforce(h2))
        << "case " << k << ": " << s1 << " x " << s2;
    ++done;
  }
}

TEST(Property, MonotoneInTheSubgroup) {
  // H <= K implies Pr(K, G) <= Pr(H, G).
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    std::vector<Elem> seeds(h.members().begin(), h.members().end());
    seeds.push_back(Elem(gen.below(g.order())));
    auto bigger = subgroup_generated(g, seeds);
    ASSERT_TRUE(h.is_subset_of(bigger));
    ASSERT_LE(pr_bruteforce(bigger), pr_bruteforce(h)) << where(k, spec, h);
    ASSERT_LE(pr_bruteforce(whole_group(g)), pr_bruteforce(bigger)) << where(k, spec, h);
  }
}

TEST(Property, ClassSizeBoundMonotone) {
  Gen gen;
  for (int k = 0; k < 500; ++k) {
    std::uint64_t m = 1 + gen.below(200), n = 1 + gen.below(m), i = 1 + gen.below(200);
    auto a = class_size_bound(n, i), b = class_size_bound(m, i);
    ASSERT_GE(a, b) << n << " " << m << " " << i;
    ASSERT_EQ(a == b, m == n || i == 1) << n << " " << m << " " << i;
  }
}

TEST(Property, SandwichAndLowerBounds) {
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    auto pp = pair_profile(h);
    auto pr = pr_bruteforce(h);
    ASSERT_LE(commutator_set_lower(pp), pr) << where(k, spec, h);
    ASSERT_LE(salemkar_lower(pp), commutator_set_lower(pp)) << where(k, spec, h);
    ASSERT_LE(erfanian_lower(pp), pr) << where(k, spec, h);
    if (pp.degenerate()) {
      ASSERT_EQ(pr, ExactRatio(1));
      continue;
    }
    ASSERT_GT(pr, ExactRatio(1, std::int64_t(pp.k_size()))) << where(k, spec, h);
    auto [lo, hi] = sandwich_bounds(pp);
    ASSERT_LE(lo, pr) << where(k, spec, h);
    ASSERT_LE(pr, hi) << where(k, spec, h);
    ASSERT_LE(hi, prime_upper(pp)) << where(k, spec, h);
    const bool two_valued = pp.cs.size() == 2;
    ASSERT_EQ(lo == pr, two_valued) << where(k, spec, h);
    ASSERT_EQ(hi == pr, two_valued) << where(k, spec, h);
    ASSERT_TRUE(equality_conditions(h).agree()) << where(k, spec, h);
  }
}

TEST(Property, BoundReportsHaveNoViolations) {
  Gen gen;
  for (int k = 0; k < kCases; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto h = gen.subgroup(g);
    auto rep = make_bound_report(h, spec);
    for (const auto& v : rep.violations)
      ADD_FAILURE() << where(k, spec, h) << ": " << v;
  }
}

TEST(Property, IsoclinicToProductWithAbelian) {
  // (G, G) and (G x A, G x A) are isoclinic for abelian A; the inverse of a
  // found witness verifies and Pr_g is preserved in both directions.
  const std::vector<std::string> abelian = {"C:2", "C:3", "C:4", "EA:2^2", "C:5"};
  Gen gen;
  for (int k = 0; k < 12; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto ga = direct_product(g, build_table(parse_spec(abelian[gen.below(abelian.size())])));
    auto p1 = make_pair_context(whole_group(g));
    auto p2 = make_pair_context(whole_group(ga));
    if (p1.quotient_order() > default_quotient_cap)
      continue;
    auto res = find_pair_isoclinism(p1, p2);
    ASSERT_EQ(res.status, SearchStatus::found) << "case " << k << ": " << spec << " " << res.reason;
    ASSERT_TRUE(verify_invariance(p1, p2, *res.witness).all_equal()) << spec;
    auto inv = inverse_witness(*res.witness, p2);
    ASSERT_TRUE(verify_pair_isoclinism(p2, p1, inv).ok) << spec;
    ASSERT_TRUE(verify_invariance(p2, p1, inv).all_equal()) << spec;
  }
}

TEST(Property, IsoclinicToARelabeling) {
  Gen gen;
  for (int k = 0; k < 12; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    auto g2 = gen.relabel(g);
    auto p1 = make_pair_context(whole_group(g));
    auto p2 = make_pair_context(whole_group(g2));
    if (p1.quotient_order() > default_quotient_cap)
      continue;
    auto res = find_pair_isoclinism(p1, p2);
    ASSERT_EQ(res.status, SearchStatus::found) << spec;
    ASSERT_TRUE(verify_invariance(p1, p2, *res.witness).all_equal()) << spec;
  }
}

TEST(Property, MultiDistributionMatchesNaiveCount) {
  Gen gen;
  for (int k = 0; k < 15; ++k) {
    auto spec = gen.spec();
    auto g = build_table(parse_spec(spec));
    if (g.order() > 32)
      continue;
    std::vector<SubgroupView> hs{gen.subgroup(g), gen.subgroup(g), gen.subgroup(g)};
    auto dist = multi_commutator_distribution(hs);
    std::vector<std::uint64_t> naive(g.order(), 0);
    for (Elem a : hs[0].members())
      for (Elem b : hs[1].members())
        for (Elem c : hs[2].members())
          ++naive[g.commutator(g.commutator(a, b), c)];
    for (Elem x = 0; x < g.order(); ++x)
      ASSERT_EQ(dist[x], BigInt(naive[x])) << "case " << k << ": " << spec;
  }
}
