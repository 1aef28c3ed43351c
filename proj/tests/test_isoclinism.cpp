#include <gtest/gtest.h>

#include <chrono>

#include "relcomm/catalog.hpp"
#include "relcomm/isoclinism.hpp"

using namespace relcomm;

namespace {

ExactRatio R(std::int64_t n, std::int64_t d) { return ExactRatio(n, d); }

struct Pair {
  CatalogEntry entry;
  PairContext ctx;
  explicit Pair(const std::string& spec, const std::string& landmark = "G")
    : entry(build(spec)), ctx(make_pair_context(entry.landmark(landmark))) {}
};

IsoclinismWitness must_find(const Pair& a, const Pair& b) {
  auto res = find_pair_isoclinism(a.ctx, b.ctx);
  EXPECT_EQ(res.status, SearchStatus::found) << res.reason;
  if (!res.witness)
    throw std::runtime_error("no witness");
  return *res.witness;
}

} // namespace

TEST(CommutationMap, WellDefinedAndShaped) {
  for (const char* s : {"Q:8", "D:8", "S:4", "ESp:3", "X5:3"}) {
    Pair p(s);
    EXPECT_TRUE(commutation_map_well_defined(p.ctx)) << s;
  }
  Pair d8("D:8");
  auto map = commutation_map(d8.ctx);
  EXPECT_EQ(d8.ctx.quotient_order(), 4u);
  ASSERT_EQ(map.size(), 4u);
  std::set<Elem> image;
  for (const auto& row : map) {
    EXPECT_EQ(row.size(), 4u);
    image.insert(row.begin(), row.end());
  }
  EXPECT_EQ(image.size(), 2u);
}

TEST(PairVerify, IdentityWitness) {
  for (const char* s : {"S:3", "Q:8", "A:4", "ESm:3"}) {
    Pair p(s);
    auto w = identity_witness(p.ctx);
    EXPECT_TRUE(verify_pair_isoclinism(p.ctx, p.ctx, w).ok) << s;
    EXPECT_TRUE(verify_invariance(p.ctx, p.ctx, w).all_equal()) << s;
  }
}

TEST(PairSearch, QuaternionAndDihedral) {
  Pair q8("Q:8"), d8("D:8");
  auto w = must_find(q8, d8);
  EXPECT_TRUE(verify_pair_isoclinism(q8.ctx, d8.ctx, w).ok);
  auto inv = verify_invariance(q8.ctx, d8.ctx, w);
  ASSERT_EQ(inv.entries.size(), 2u);
  EXPECT_EQ(inv.entries[0].pr1, R(5, 8));
  EXPECT_EQ(inv.entries[0].pr2, R(5, 8));
  EXPECT_EQ(inv.entries[1].pr1, R(3, 8));
  EXPECT_EQ(inv.entries[1].pr2, R(3, 8));
  EXPECT_TRUE(inv.all_equal());
}

TEST(PairSearch, ExtraspecialPairOfOrder27) {
  Pair a("ESp:3"), b("ESm:3");
  auto start = std::chrono::steady_clock::now();
  auto w = must_find(a, b);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  auto inv = verify_invariance(a.ctx, b.ctx, w);
  EXPECT_EQ(inv.entries.size(), 3u);
  EXPECT_TRUE(inv.all_equal());
}

TEST(PairSearch, NonGroupLandmarks) {
  // (G, H) with H a maximal subgroup, across the two order-27 groups.
  auto a = build("ESp:3");
  auto b = build("ESm:3");
  auto pa = make_pair_context(a.landmark("maximal"));
  auto pb = make_pair_context(b.landmark("maximal"));
  auto res = find_pair_isoclinism(pa, pb);
  if (res.status == SearchStatus::found) {
    EXPECT_TRUE(verify_pair_isoclinism(pa, pb, *res.witness).ok);
    EXPECT_TRUE(verify_invariance(pa, pb, *res.witness).all_equal());
  } else {
    EXPECT_EQ(res.status, SearchStatus::not_found);
  }
}

TEST(PairSearch, SizeMismatchFastReject) {
  Pair q8("Q:8"), c8("C:8");
  auto res = find_pair_isoclinism(q8.ctx, c8.ctx);
  EXPECT_EQ(res.status, SearchStatus::not_found);
  EXPECT_EQ(res.nodes, 0u);
  EXPECT_NE(res.reason.find("|G1/Z1| = 4"), std::string::npos) << res.reason;
}

TEST(PairSearch, NotIsoclinicSameQuotientOrder) {
  // D12 = S3 x C2 is isoclinic to S3. A4 and D24 both have |G/Z| = 12 but
  // the quotients A4 and D12 differ.
  Pair s3("S:3"), d12("D:12");
  EXPECT_EQ(find_pair_isoclinism(s3.ctx, d12.ctx).status, SearchStatus::found);
  Pair a4("A:4"), d24("D:24");
  EXPECT_EQ(find_pair_isoclinism(a4.ctx, d24.ctx).status, SearchStatus::not_found);
}

TEST(PairSearch, BudgetExhausted) {
  Pair q8("Q:8"), d8("D:8");
  auto res = find_pair_isoclinism(q8.ctx, d8.ctx, 1);
  EXPECT_EQ(res.status, SearchStatus::budget_exhausted);
  EXPECT_FALSE(res.witness);
}

TEST(PairSearch, QuotientCap) {
  Pair a("S:4"), b("S:4");
  try {
    find_pair_isoclinism(a.ctx, b.ctx, default_search_budget, 8);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

TEST(PairSearch, Deterministic) {
  Pair a("ESp:3"), b("ESm:3");
  auto r1 = find_pair_isoclinism(a.ctx, b.ctx);
  auto r2 = find_pair_isoclinism(a.ctx, b.ctx);
  ASSERT_TRUE(r1.witness && r2.witness);
  EXPECT_EQ(r1.witness->alpha, r2.witness->alpha);
  EXPECT_EQ(r1.witness->beta, r2.witness->beta);
  EXPECT_EQ(r1.nodes, r2.nodes);
}

TEST(PairVerify, PerturbedBetaIsRejected) {
  Pair q8("Q:8"), d8("D:8");
  auto w = must_find(q8, d8);
  ASSERT_EQ(w.beta.size(), 2u);
  std::swap(w.beta[0], w.beta[1]);
  auto v = verify_pair_isoclinism(q8.ctx, d8.ctx, w);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.violation.empty());
  try {
    verify_invariance(q8.ctx, d8.ctx, w);
    FAIL() << "invariance should refuse a rejected witness";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("witness rejected: "), std::string::npos);
  }
}

TEST(PairVerify, PerturbedAlphaIsRejected) {
  Pair a("ESp:3"), b("ESm:3");
  auto w = must_find(a, b);
  w.alpha[1] = w.alpha[2];
  auto v = verify_pair_isoclinism(a.ctx, b.ctx, w);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.violation.empty());
}

TEST(PairVerify, EveryNonidentityBetaSwapIsRejected) {
  Pair a("ESp:3"), b("ESm:3");
  auto w = must_find(a, b);
  ASSERT_EQ(w.beta.size(), 3u);
  auto bad = w;
  std::swap(bad.beta[1], bad.beta[2]);
  EXPECT_FALSE(verify_pair_isoclinism(a.ctx, b.ctx, bad).ok);
}

TEST(PairVerify, DomainMismatch) {
  Pair q8("Q:8"), s3("S:3");
  auto w = identity_witness(q8.ctx);
  try {
    verify_pair_isoclinism(s3.ctx, s3.ctx, w);
    FAIL() << "expected DomainMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain_mismatch);
  }
}

TEST(PairVerify, InverseWitness) {
  Pair a("ESp:3"), b("ESm:3");
  auto w = must_find(a, b);
  auto inv = inverse_witness(w, b.ctx);
  EXPECT_TRUE(verify_pair_isoclinism(b.ctx, a.ctx, inv).ok);
  EXPECT_TRUE(verify_invariance(b.ctx, a.ctx, inv).all_equal());
}

TEST(PairVerify, IsoclinicDirectFactor) {
  // G and G x A are isoclinic for abelian A.
  Pair q8("Q:8"), q8c3("Q:8 x C:3");
  auto w = must_find(q8, q8c3);
  EXPECT_TRUE(verify_invariance(q8.ctx, q8c3.ctx, w).all_equal());
}

TEST(Tuple, IdentityWitness) {
  auto e = build("S:4");
  auto g = e.landmark("G");
  auto t = make_tuple_context({g, g, g});
  auto w = identity_tuple_witness(t);
  EXPECT_TRUE(verify_tuple_isoclinism(t, t, w).ok);
  EXPECT_TRUE(tuple_invariance(t, t, w).all_equal());
}

TEST(Tuple, LiftedFromQuaternionDihedralPair) {
  Pair q8("Q:8"), d8("D:8");
  auto w = must_find(q8, d8);
  const auto& g1 = q8.entry.landmark("G");
  const auto& g2 = d8.entry.landmark("G");
  auto t1 = make_tuple_context({g1, g1, g1});
  auto t2 = make_tuple_context({g2, g2, g2});
  auto tw = lift_pair_witness(q8.ctx, d8.ctx, w, t1, t2);
  EXPECT_TRUE(verify_tuple_isoclinism(t1, t2, tw).ok);
  auto inv = tuple_invariance(t1, t2, tw);
  ASSERT_EQ(inv.entries.size(), 1u);
  EXPECT_EQ(inv.entries[0].pr1, ExactRatio(1));
  EXPECT_EQ(inv.entries[0].pr2, ExactRatio(1));
}

TEST(Tuple, PairCaseReducesToPairIsoclinism) {
  Pair a("ESp:3"), b("ESm:3");
  auto w = must_find(a, b);
  const auto& g1 = a.entry.landmark("G");
  const auto& g2 = b.entry.landmark("G");
  auto t1 = make_tuple_context({g1, g1});
  auto t2 = make_tuple_context({g2, g2});
  auto tw = lift_pair_witness(a.ctx, b.ctx, w, t1, t2);
  EXPECT_TRUE(verify_tuple_isoclinism(t1, t2, tw).ok);
  auto tinv = tuple_invariance(t1, t2, tw);
  auto pinv = verify_invariance(a.ctx, b.ctx, w);
  ASSERT_EQ(tinv.entries.size(), pinv.entries.size());
  for (std::size_t i = 0; i < tinv.entries.size(); ++i) {
    EXPECT_EQ(tinv.entries[i].pr1, pinv.entries[i].pr1);
    EXPECT_EQ(tinv.entries[i].pr2, pinv.entries[i].pr2);
  }
}

TEST(Tuple, DomainMismatch) {
  auto a = build("Q:8");
  auto g = a.landmark("G");
  auto t2 = make_tuple_context({g, g});
  auto t3 = make_tuple_context({g, g, g});
  auto w = identity_tuple_witness(t3);
  try {
    verify_tuple_isoclinism(t2, t3, w);
    FAIL() << "expected DomainMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain_mismatch);
  }
}

TEST(Tuple, PerturbedBetaIsRejected) {
  Pair pa("ESp:3"), pb("ESm:3");
  auto w = must_find(pa, pb);
  const auto& g1 = pa.entry.landmark("G");
  const auto& g2 = pb.entry.landmark("G");
  auto t1 = make_tuple_context({g1, g1});
  auto t2 = make_tuple_context({g2, g2});
  auto tw = lift_pair_witness(pa.ctx, pb.ctx, w, t1, t2);
  std::swap(tw.beta[1], tw.beta[2]);
  EXPECT_FALSE(verify_tuple_isoclinism(t1, t2, tw).ok);
}
