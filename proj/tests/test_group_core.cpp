#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "relcomm/catalog.hpp"
#include "relcomm/conjugacy.hpp"
#include "relcomm/group_table.hpp"
#include "relcomm/subgroup.hpp"

using namespace relcomm;

namespace {

GroupTable s3_from_oracle() {
  auto s3 = oracle::permutations(3, false);
  return from_cayley_table(s3.cayley());
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::invalid_argument;
}

std::multiset<std::size_t> class_sizes(const ConjugacyPartition& cp) {
  std::multiset<std::size_t> out;
  for (const auto& c : cp.classes)
    out.insert(c.size());
  return out;
}

} // namespace

TEST(CayleyTable, TrivialGroup) {
  auto g = from_cayley_table({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.inv(0), 0u);
}

TEST(CayleyTable, OrderTwo) {
  auto g = from_cayley_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.inv(0), 0u);
  EXPECT_EQ(g.inv(1), 1u);
}

TEST(CayleyTable, IdentityIsRelabeledToZero) {
  // Z/3 with the identity stored at index 2.
  auto g = from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  EXPECT_EQ(g.label(0), "e");
  for (Elem x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
    EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
  }
}

TEST(CayleyTable, SingleCellMutationIsRejected) {
  auto t = oracle::permutations(3, false).cayley();
  for (std::size_t r = 1; r < 6; ++r)
    for (std::size_t c = 1; c < 6; ++c) {
      auto bad = t;
      bad[r][c] = (bad[r][c] + 1) % 6;
      EXPECT_THROW(from_cayley_table(bad), Error) << "cell " << r << "," << c;
    }
}

TEST(CayleyTable, IntercalateSwapIsNotAssociative) {
  // Swapping a 2x2 intercalate keeps the Latin property and the identity row
  // and column, so the only thing left to fail is associativity.
  auto t = oracle::permutations(3, false).cayley();
  bool found = false;
  for (std::size_t a = 1; a < 6 && !found; ++a)
    for (std::size_t b = a + 1; b < 6 && !found; ++b)
      for (std::size_t c = 1; c < 6 && !found; ++c)
        for (std::size_t d = c + 1; d < 6 && !found; ++d) {
          if (t[a][c] != t[b][d] || t[a][d] != t[b][c])
            continue;
          auto bad = t;
          std::swap(bad[a][c], bad[a][d]);
          std::swap(bad[b][c], bad[b][d]);
          try {
            from_cayley_table(bad);
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::not_associative) << e.what();
            found = e.code() == Errc::not_associative;
          }
        }
  EXPECT_TRUE(found);
}

TEST(CayleyTable, NoIdentity) {
  // x * y = -x - y mod 3 is a Latin square without an identity.
  EXPECT_EQ(code_of([] { from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }), Errc::no_identity);
}

TEST(CayleyTable, NotLatin) {
  EXPECT_EQ(code_of([] { from_cayley_table({{0, 1}, {1, 1}}); }), Errc::not_latin_square);
  EXPECT_EQ(code_of([] { from_cayley_table({{0, 1}, {1}}); }), Errc::not_latin_square);
}

TEST(CayleyTable, AuditPassesForValidTables) {
  EXPECT_NO_THROW(audit(s3_from_oracle()));
  EXPECT_NO_THROW(audit(from_cayley_table(oracle::quaternions().cayley())));
}

TEST(Permutations, S3FromTranspositionAndThreeCycle) {
  auto g = from_permutations({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_NO_THROW(audit(g));
}

TEST(Permutations, EmptyGeneratorListOnThreePoints) {
  auto g = from_permutations({}, 3);
  EXPECT_EQ(g.order(), 1u);
}

TEST(Permutations, TwoThreeCyclesGenerateA5) {
  Permutation a{1, 2, 0, 3, 4}, b{0, 1, 3, 4, 2};
  auto g = from_permutations({a, b});
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(center(g).order(), 1u);
}

TEST(Permutations, ClosureCap) {
  Permutation a{1, 2, 3, 4, 0}, b{1, 0, 2, 3, 4};
  EXPECT_EQ(code_of([&] { from_permutations({a, b}, 0, 100); }), Errc::closure_cap_exceeded);
}

TEST(DirectProduct, TrivialTimesG) {
  auto g = s3_from_oracle();
  auto p = direct_product(from_cayley_table({{0}}), g);
  EXPECT_EQ(p.order(), 6u);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      EXPECT_EQ(p.mul(a, b), g.mul(a, b));
}

TEST(DirectProduct, AbelianTimesAbelian) {
  auto p = direct_product(build_table(parse_spec("C:2")), build_table(parse_spec("C:3")));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(p.is_abelian());
}

TEST(DirectProduct, Q8TimesC3Center) {
  auto q8 = from_cayley_table(oracle::quaternions().cayley());
  auto p = direct_product(q8, build_table(parse_spec("C:3")));
  EXPECT_EQ(p.order(), 24u);
  EXPECT_EQ(center(p).order(), 6u);
  EXPECT_NO_THROW(audit(p));
}

TEST(DirectProduct, CapExceeded) {
  auto g = s3_from_oracle();
  EXPECT_EQ(code_of([&] { direct_product(g, g, 30); }), Errc::closure_cap_exceeded);
}

TEST(Subgroups, GeneratedFromSeeds) {
  auto g = s3_from_oracle();
  EXPECT_EQ(subgroup_generated(g, std::vector<Elem>{}).order(), 1u);
  for (Elem x = 1; x < 6; ++x)
    if (element_order(g, x) == 2) {
      EXPECT_EQ(subgroup_generated(g, {x}).order(), 2u);
    }
  auto q8 = from_cayley_table(oracle::quaternions().cayley());
  auto k = commutator_set(whole_group(q8));
  auto s = subgroup_generated(q8, k);
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(s, center(q8));
}

TEST(Subgroups, ValidatingConstructorRejectsNonSubgroups) {
  auto g = s3_from_oracle();
  EXPECT_THROW(SubgroupView(g, {1}), Error);
  EXPECT_THROW(SubgroupView(g, {0, 1, 2, 3}), Error);
}

TEST(Subgroups, CentralizerAndCenterInQ8) {
  // Oracle order: 1, i, j, k, -1, -i, -j, -k.
  auto q8 = from_cayley_table(oracle::quaternions().cayley());
  EXPECT_EQ(centralizer(q8, 1).order(), 4u);
  EXPECT_EQ(center(q8).order(), 2u);
  EXPECT_TRUE(center(q8).contains(4));
}

TEST(Subgroups, RelativeCenter) {
  for (const char* spec : {"S:3", "Q:8", "D:12", "Q:8 x C:3", "A:4"}) {
    auto e = build(spec);
    const auto& g = e.table();
    EXPECT_EQ(relative_center(whole_group(g)), center(g)) << spec;
    for (const auto& l : e.landmarks())
      EXPECT_EQ(relative_center(l.subgroup), relative_center_by_definition(l.subgroup)) << spec;
  }
  auto x5 = build("X5:3");
  EXPECT_EQ(center(x5.table()).order(), 9u);
}

TEST(Conjugacy, ClassSizesAgainstOracle) {
  auto s3 = oracle::permutations(3, false);
  auto g = from_cayley_table(s3.cayley());
  auto cp = conjugacy_partition(g);
  EXPECT_EQ(class_sizes(cp), s3.class_sizes());
  EXPECT_EQ(class_sizes(cp), (std::multiset<std::size_t>{1, 2, 3}));

  auto a5 = oracle::permutations(5, true);
  auto ga5 = from_cayley_table(a5.cayley());
  EXPECT_EQ(class_sizes(conjugacy_partition(ga5)), a5.class_sizes());
}

TEST(Conjugacy, AbelianHasSingletonClasses) {
  auto g = build_table(parse_spec("C:6 x C:2"));
  EXPECT_EQ(conjugacy_partition(g).classes.size(), 12u);
}

TEST(Conjugacy, OrbitStabilizer) {
  for (const char* spec : {"S:4", "Dic:12", "ESm:3", "A:5"}) {
    auto g = build_table(parse_spec(spec));
    auto cp = conjugacy_partition(g);
    EXPECT_EQ(cp.class_size(0), 1u);
    for (Elem x = 0; x < g.order(); ++x) {
      EXPECT_EQ(cp.class_size(x) * cp.centralizer_order[x], g.order()) << spec;
      EXPECT_EQ(cp.centralizer_order[x], centralizer(g, x).order()) << spec;
    }
  }
}

TEST(Conjugacy, X5NonCentralClassesHaveSizeNine) {
  auto g = build_table(parse_spec("X5:3"));
  auto cp = conjugacy_partition(g);
  auto z = center(g);
  for (Elem x = 0; x < g.order(); ++x)
    EXPECT_EQ(cp.class_size(x), z.contains(x) ? 1u : 9u);
}

TEST(Commutators, SetInsideSubgroup) {
  auto e = build("S:3");
  auto h = whole_group(e.table());
  auto k = commutator_set(h);
  auto d = commutator_subgroup(h);
  EXPECT_EQ(k.size(), 3u);
  EXPECT_EQ(d.order(), 3u);
  auto abel = build("C:4 x C:2");
  EXPECT_EQ(commutator_set(whole_group(abel.table())).size(), 1u);
  EXPECT_TRUE(commutator_subgroup(whole_group(abel.table())).is_trivial());
}

TEST(Commutators, ConventionIsXYXinvYinv) {
  auto g = s3_from_oracle();
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      EXPECT_EQ(g.commutator(x, y), g.mul(g.mul(g.mul(x, y), g.inv(x)), g.inv(y)));
}

TEST(Quotients, ByTrivialKeepsOrder) {
  auto g = s3_from_oracle();
  auto q = quotient(trivial_subgroup(g));
  EXPECT_EQ(q.table.order(), 6u);
}

TEST(Quotients, Q8ModCenterIsKlein) {
  auto q8 = from_cayley_table(oracle::quaternions().cayley());
  auto q = quotient(center(q8));
  EXPECT_EQ(q.table.order(), 4u);
  for (Elem x = 1; x < 4; ++x)
    EXPECT_EQ(element_order(q.table, x), 2u);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b)
      EXPECT_EQ(q.projection[q8.mul(a, b)], q.table.mul(q.projection[a], q.projection[b]));
  for (Elem c = 0; c < 4; ++c)
    for (Elem x = 0; x < 8; ++x)
      if (q.projection[x] == c) {
        EXPECT_LE(q.representatives[c], x);
      }
}

TEST(Quotients, S3ModA3AndNonNormal) {
  auto g = s3_from_oracle();
  auto a3 = commutator_subgroup(whole_group(g));
  EXPECT_EQ(quotient(a3).table.order(), 2u);
  for (Elem x = 1; x < 6; ++x)
    if (element_order(g, x) == 2) {
      EXPECT_EQ(code_of([&] { quotient(cyclic_subgroup(g, x)); }), Errc::not_normal);
    }
}

TEST(Series, ClassesOfKnownGroups) {
  EXPECT_EQ(nilpotency_class(build_table(parse_spec("C:6"))), 1u);
  auto q8 = build_table(parse_spec("Q:8"));
  EXPECT_EQ(nilpotency_class(q8), 2u);
  EXPECT_EQ(lower_central_series(q8).terms.at(1).order(), 2u);
  EXPECT_EQ(nilpotency_class(build_table(parse_spec("S:3"))), std::nullopt);
  EXPECT_FALSE(is_nilpotent(build_table(parse_spec("A:4"))));

  auto x5 = build_table(parse_spec("X5:3"));
  auto lower = lower_central_series(x5);
  EXPECT_EQ(nilpotency_class(x5), 3u);
  ASSERT_EQ(lower.terms.size(), 4u);
  EXPECT_EQ(lower.terms[1].order(), 27u);
  EXPECT_EQ(lower.terms[2].order(), 9u);
  EXPECT_TRUE(lower.terms[3].is_trivial());
  auto upper = upper_central_series(x5);
  EXPECT_TRUE(upper.terms.front().is_trivial());
  EXPECT_TRUE(upper.terms.back().is_whole());
}

TEST(Misc, OrdersPrimesNormality) {
  auto a5 = build_table(parse_spec("A:5"));
  EXPECT_EQ(element_order(a5, 0), 1u);
  EXPECT_EQ(smallest_prime_divisor(a5), 2u);
  EXPECT_EQ(smallest_prime_divisor(std::uint64_t(1)), std::nullopt);
  auto s3 = s3_from_oracle();
  EXPECT_TRUE(is_normal(commutator_subgroup(whole_group(s3))));
}

TEST(AsGroup, EmbeddedSubgroupRoundTrips) {
  auto e = build("Q:8 x C:3");
  auto syl = sylow_subgroup(e.table(), 2);
  auto emb = as_group(syl);
  EXPECT_EQ(emb.table.order(), 8u);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b)
      EXPECT_EQ(emb.to_parent[emb.table.mul(a, b)],
                e.table().mul(emb.to_parent[a], emb.to_parent[b]));
}
