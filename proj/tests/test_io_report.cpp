#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relcomm/relcomm.hpp"

using namespace relcomm;

namespace {

ExactRatio R(std::int64_t n, std::int64_t d) { return ExactRatio(n, d); }

std::string error_of(const std::function<void()>& f, Errc* code = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (code)
      *code = e.code();
    return e.what();
  }
  ADD_FAILURE() << "expected an Error";
  return {};
}

GroupTable cayley_from(const std::string& text) {
  std::istringstream in(text);
  return read_cayley(in);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "relcomm_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(CayleyFile, RoundTrip) {
  for (const char* s : {"S:3", "Q:8", "D:8 x C:3"}) {
    auto g = build_table(parse_spec(s));
    std::stringstream buf;
    write_cayley(buf, g);
    auto back = read_cayley(buf);
    EXPECT_EQ(back, g) << s;
    EXPECT_EQ(back.labels(), g.labels()) << s;
  }
}

TEST(CayleyFile, CommentsAndBlankLines) {
  auto g = cayley_from("# C3\n\n3\n0 1 2\n# middle\n1 2 0\n2 0 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.labels().empty());
}

TEST(CayleyFile, LabelBlock) {
  auto g = cayley_from("2\n0 1\n1 0\ne\n t \n");
  EXPECT_EQ(g.label(1), "t");
  Errc code{};
  error_of([] { cayley_from("2\n0 1\n1 0\ne\n"); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
}

TEST(CayleyFile, ParseErrorsCarryLineNumbers) {
  Errc code{};
  auto msg = error_of([] { cayley_from("3\n0 1 2\n1 x 0\n2 0 1\n"); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  msg = error_of([] { cayley_from("3\n0 1 2\n1 2 7\n2 0 1\n"); });
  EXPECT_NE(msg.find("out of range"), std::string::npos) << msg;
  msg = error_of([] { cayley_from("3\n0 1 2\n1 2\n2 0 1\n"); });
  EXPECT_NE(msg.find("expected 3 entries"), std::string::npos) << msg;
  msg = error_of([] { cayley_from("-2\n"); });
  EXPECT_NE(msg.find("positive order"), std::string::npos) << msg;
  error_of([] { cayley_from(""); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
}

TEST(CayleyFile, GroupAxiomsStillChecked) {
  Errc code{};
  error_of([] { cayley_from("3\n0 1 2\n1 2 0\n2 1 0\n"); }, &code);
  EXPECT_EQ(code, Errc::not_latin_square);
  error_of([] { cayley_from("3\n0 2 1\n2 1 0\n1 0 2\n"); }, &code);
  EXPECT_EQ(code, Errc::no_identity);
}

TEST(CayleyFile, OrderCap) {
  Errc code{};
  std::istringstream in("500\n");
  error_of([&] { read_cayley(in, 100); }, &code);
  EXPECT_EQ(code, Errc::cap_exceeded);
}

TEST(Cycles, Parse) {
  auto c = parse_cycles("(0 1 2)(3 4)");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(c[1], (std::vector<std::size_t>{3, 4}));
  EXPECT_TRUE(parse_cycles("()").empty() || parse_cycles("()")[0].empty());
}

TEST(Cycles, MalformedReportsColumn) {
  Errc code{};
  auto msg = error_of([] { parse_cycles("(0 1"); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
  EXPECT_NE(msg.find("column 5"), std::string::npos) << msg;
  msg = error_of([] { parse_cycles("(0 a)"); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
  EXPECT_NE(msg.find("column 4"), std::string::npos) << msg;
}

TEST(Cycles, ReadPermutationsWithLineNumbers) {
  std::istringstream ok("# S3\n(0 1 2)\n\n(0 1)\n");
  auto gens = read_permutations(ok);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(from_permutations(gens).order(), 6u);

  std::istringstream bad("(0 1 2)\n(0 1\n");
  auto msg = error_of([&] { read_permutations(bad); });
  EXPECT_NE(msg.find("line 2, column 5"), std::string::npos) << msg;

  std::istringstream twice("(0 1)(1 2)\n");
  msg = error_of([&] { read_permutations(twice); });
  EXPECT_NE(msg.find("appears twice"), std::string::npos) << msg;
}

TEST(Files, LoadGroupSniffsFormat) {
  auto perm = scratch("a5.perm");
  std::ofstream(perm) << "(0 1 2)\n(2 3 4)\n";
  EXPECT_EQ(load_group(perm).order(), 60u);

  auto table = scratch("q8.table");
  {
    std::ofstream out(table);
    write_cayley(out, build_table(parse_spec("Q:8")));
  }
  auto q8 = load_group(table);
  EXPECT_EQ(q8, build_table(parse_spec("Q:8")));
}

TEST(Files, Missing) {
  Errc code{};
  error_of([] { load_group(scratch("does-not-exist")); }, &code);
  EXPECT_EQ(code, Errc::file_not_found);
}

TEST(Json, FractionRoundTrip) {
  for (auto r : {R(5, 8), R(0, 1), R(1, 1), R(23, 300)}) {
    auto j = fraction_json(r);
    EXPECT_EQ(fraction_from_json(Json::parse(j.dump())), r);
  }
  EXPECT_EQ(fraction_json(R(10, 16)).dump(), R"({"num":5,"den":8})");
  // Numbers outside 64 bits travel as strings.
  BigInt big = BigInt(1) << 80;
  auto j = fraction_json(ExactRatio(big, BigInt(3)));
  EXPECT_TRUE(j["num"].is_string());
  EXPECT_EQ(fraction_from_json(j), ExactRatio(big, BigInt(3)));
  EXPECT_THROW(fraction_from_json(Json::parse(R"({"num": 1})")), Error);
}

TEST(Json, DecimalRendering) {
  EXPECT_EQ(R(5, 8).decimal(), "0.625000");
  EXPECT_EQ(R(1, 12).decimal(3), "0.083");
  EXPECT_EQ(R(2, 3).decimal(2), "0.67");
  EXPECT_EQ(ExactRatio(1).str(), "1");
  EXPECT_EQ(fraction_text(R(1, 2)), "1/2 (0.500000)");
}

TEST(Json, WitnessRoundTrip) {
  auto a = build("ESp:3");
  auto b = build("ESm:3");
  auto pa = make_pair_context(a.landmark("G"));
  auto pb = make_pair_context(b.landmark("G"));
  auto res = find_pair_isoclinism(pa, pb);
  ASSERT_TRUE(res.witness);
  auto j = witness_json(*res.witness, "ESp:3 / G", "ESm:3 / G", pa, pb);
  EXPECT_EQ(j["schema"], witness_schema);
  auto back = witness_from_json(Json::parse(j.dump(2)));
  EXPECT_EQ(back.alpha, res.witness->alpha);
  EXPECT_EQ(back.beta_domain, res.witness->beta_domain);
  EXPECT_EQ(back.beta, res.witness->beta);
  EXPECT_TRUE(verify_pair_isoclinism(pa, pb, back).ok);

  Errc code{};
  error_of([] { witness_from_json(Json::parse(R"({"schema": "other"})")); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
  error_of([] { witness_from_json(Json::parse(R"({"schema": "relcomm.witness/1", "alpha": "x"})")); }, &code);
  EXPECT_EQ(code, Errc::parse_error);
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Reports, StatsJsonForQuaternion) {
  auto e = build("Q:8");
  auto cp = conjugacy_partition(e.table());
  std::vector<StatsReport> reps{make_stats_report(e.landmark("G"), cp, "Q:8 / G")};
  EXPECT_EQ(reps[0].pr, R(5, 8));
  ASSERT_EQ(reps[0].pr_g.size(), 2u);
  EXPECT_EQ(reps[0].pr_g[1].second, R(3, 8));
  EXPECT_EQ(reps[0].type_vector, (std::vector<std::uint64_t>{1, 2}));
  auto j = stats_json(reps);
  EXPECT_EQ(j["schema"], stats_schema);
  auto text = j.dump();
  EXPECT_NE(text.find(R"("num":5,"den":8)"), std::string::npos) << text;
}

TEST(Reports, BoundsFormatsAgree) {
  auto e = build("S:3");
  auto cp = conjugacy_partition(e.table());
  std::vector<BoundReport> reps;
  for (const auto& s : select_subgroups(e, "all"))
    reps.push_back(make_bound_report(s.subgroup, cp, "S:3 / " + s.name));
  auto j = bounds_json(reps);
  EXPECT_EQ(j["schema"], bounds_schema);
  std::ostringstream csv, table;
  bounds_csv(csv, reps);
  bounds_table(table, reps);
  // One CSV header plus one row per pair.
  const std::string text = csv.str();
  auto rows = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(std::size_t(rows), reps.size() + 1);
  EXPECT_NE(table.str().find("S:3 / G"), std::string::npos);
}

TEST(Reports, Deterministic) {
  auto once = [] {
    auto e = build("S:3 x C:3");
    auto cp = conjugacy_partition(e.table());
    std::vector<BoundReport> reps;
    for (const auto& s : select_subgroups(e, "all"))
      reps.push_back(make_bound_report(s.subgroup, cp, "S:3 x C:3 / " + s.name));
    return bounds_json(reps).dump(2);
  };
  EXPECT_EQ(once(), once());
}
